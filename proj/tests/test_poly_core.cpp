#include <random>

#include "bilip/errors.hpp"
#include "bilip/poly_algorithms.hpp"
#include "doctest.h"
#include "test_util.hpp"

using namespace bilip;
using namespace bilip::testing;

namespace {

const Ring XY = ring_of({"x", "y"});
const Ring XYZ = ring_of({"x", "y", "z"});

const std::vector<std::string> kCorpus = {
    "x*y - 1", "y - x^2", "y^2 - x^3 - 1", "y^2 - x^4", "x^2 + y^2 - 1", "x^3*y^2*(x+y)",
};

}  // namespace

TEST_CASE("arithmetic") {
  CHECK((P("x", XY) + P("-x", XY)).is_zero());
  CHECK(P("(x+y)*(x-y)", XY) == P("x^2 - y^2", XY));

  const auto q = exact_divide(P("x^2 - y^2", XY), P("x - y", XY));
  CHECK(q == P("x + y", XY));
  CHECK(q * P("x - y", XY) == P("x^2 - y^2", XY));

  CHECK_THROWS_AS(exact_divide(P("x^2 + 1", XY), P("x - y", XY)), InexactDivision);
  CHECK_THROWS_AS(P("x", XY) + P("x", XYZ), RingMismatch);
}

TEST_CASE("zero polynomial degree is a sentinel") {
  Polynomial zero(XY);
  CHECK(zero.degree().is_minus_infinity());
  CHECK(zero.degree() < Degree(0));
  CHECK_THROWS_AS(zero.degree().value(), DomainError);
  CHECK(P("x^2*y + x", XY).degree().value() == 3);
}

TEST_CASE("top form") {
  CHECK(top_form(P("x^2*y + x + 1", XY)) == P("x^2*y", XY));
  CHECK(top_form(P("x^2 - 3*x*y", XY)) == P("x^2 - 3*x*y", XY));
  CHECK(top_form(P("y^2 - x^3 - 1", XY)) == P("-x^3", XY));
  CHECK_THROWS_AS(top_form(Polynomial(XY)), DomainError);
}

TEST_CASE("homogenize") {
  const Ring XYT = ring_of({"x", "y", "t"});
  CHECK(homogenize(P("y - x^2", XY), "t") == P("t*y - x^2", XYT));
  CHECK(homogenize(P("x^2 + x*y", XY), "t") == P("x^2 + x*y", XYT));
  CHECK(homogenize(P("y^2 - x^3 - 1", XY), "t") == P("t*y^2 - x^3 - t^3", XYT));
  CHECK_THROWS_AS(homogenize(P("x", XY), "y"), DomainError);
}

TEST_CASE("top form and homogenization round trip on the corpus") {
  for (const auto& text : kCorpus) {
    CAPTURE(text);
    const auto f = P(text, XY);
    const auto top = top_form(f);
    CHECK(top.is_homogeneous());
    CHECK(top.degree() == f.degree());
    const auto h = homogenize(f, "t");
    CHECK(h.is_homogeneous());
    CHECK(change_ring(specialize(h, 2, 0), XY) == top);
    CHECK(change_ring(specialize(h, 2, 1), XY) == f);
  }
}

TEST_CASE("gcd") {
  const auto g = gcd(P("x^2 - y^2", XY), P("(x+y)^2", XY));
  CHECK(g == P("x + y", XY));
  // Oracle: g divides both and the cofactors share no common root on a test grid.
  const auto a = exact_divide(P("x^2 - y^2", XY), g);
  const auto b = exact_divide(P("(x+y)^2", XY), g);
  CHECK(a == P("x - y", XY));
  CHECK(b == P("x + y", XY));

  CHECK(gcd(P("-2*x^2 + 4*y", XY), Polynomial(XY)) == P("x^2 - 2*y", XY));
  CHECK(gcd(P("x", XY), P("y", XY)) == Polynomial::constant(XY, 1));
  CHECK(gcd(P("x*z + y*z", XYZ), P("x*y*z + y^2*z", XYZ)) == P("x*z + y*z", XYZ));
  CHECK(gcd(P("3/2*x^2*z - 3/2*z", XYZ), P("x*y - y + x*z - z", XYZ)) == P("x - 1", XYZ));
}

TEST_CASE("gcd(f*h, g*h) = h*gcd(f, g) up to a constant") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 30; ++trial) {
    const Ring& ring = trial % 2 ? XY : XYZ;
    const auto f = random_polynomial(ring, 3, 3, rng);
    const auto g = random_polynomial(ring, 3, 3, rng);
    const auto h = random_polynomial(ring, 2, 2, rng);
    CAPTURE(f.to_string());
    CAPTURE(g.to_string());
    CAPTURE(h.to_string());
    CHECK(equal_up_to_constant(gcd(f * h, g * h), h * gcd(f, g)));
  }
}

TEST_CASE("squarefree decomposition") {
  const auto f = P("x^3*y^2*(x+y)", XY);
  const auto parts = squarefree_decomposition(f);
  REQUIRE(parts.size() == 3);
  CHECK(parts[0].factor == P("x + y", XY));
  CHECK(parts[0].exponent == 1);
  CHECK(parts[1].factor == P("y", XY));
  CHECK(parts[1].exponent == 2);
  CHECK(parts[2].factor == P("x", XY));
  CHECK(parts[2].exponent == 3);

  const auto sq = squarefree_decomposition(P("x^2 + y^2 - 1", XY));
  REQUIRE(sq.size() == 1);
  CHECK(sq[0].exponent == 1);

  const auto square = squarefree_decomposition(P("(x+y)^2", XY));
  REQUIRE(square.size() == 1);
  CHECK(square[0].factor == P("x + y", XY));
  CHECK(square[0].exponent == 2);
  // Oracle for the square: x+y divides f and both partial derivatives.
  for (std::size_t v = 0; v < 2; ++v)
    CHECK_NOTHROW(exact_divide(derivative(P("(x+y)^2", XY), v), P("x+y", XY)));

  CHECK_THROWS_AS(squarefree_decomposition(Polynomial::constant(XY, 3)), DomainError);
}

TEST_CASE("squarefree decomposition multiplies back") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 25; ++trial) {
    const Ring& ring = trial % 2 ? XY : XYZ;
    Polynomial f = Polynomial::constant(ring, 1);
    const int nfactors = 1 + trial % 3;
    for (int i = 0; i < nfactors; ++i)
      f *= random_polynomial(ring, 2, 2, rng).pow(1 + (trial + i) % 3);
    if (f.is_constant()) continue;
    CAPTURE(f.to_string());
    Polynomial back = Polynomial::constant(ring, 1);
    const auto parts = squarefree_decomposition(f);
    for (std::size_t i = 0; i < parts.size(); ++i) {
      back *= parts[i].factor.pow(parts[i].exponent);
      if (i > 0) CHECK(parts[i].exponent > parts[i - 1].exponent);
      CHECK(squarefree_decomposition(parts[i].factor).size() == 1);
      for (std::size_t j = 0; j < i; ++j) CHECK(gcd(parts[i].factor, parts[j].factor).is_constant());
    }
    CHECK(equal_up_to_constant(back, f));
  }
}

TEST_CASE("substitute_linear") {
  const auto f = P("y^2 - x^3 - 1", XY);
  CHECK(substitute_linear(f, identity_matrix(2)) == f);
  const RationalMatrix swap = {{0, 1}, {1, 0}};
  CHECK(substitute_linear(P("x", XY), swap) == P("y", XY));
  const RationalMatrix singular = {{1, 2}, {2, 4}};
  CHECK_THROWS_AS(substitute_linear(f, singular), DomainError);

  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 20; ++trial) {
    const auto m = random_invertible(3, rng);
    const auto g = random_polynomial(XYZ, 4, 4, rng);
    const auto moved = substitute_linear(g, m);
    CHECK(moved.degree() == g.degree());
    CHECK(substitute_linear(moved, inverse(m)) == g);
  }
}

TEST_CASE("parser") {
  CHECK(P("x^2*y - 3/2*x + 1", XY).to_string() == "x^2*y - 3/2*x + 1");
  CHECK(P("2x y", XY) == P("2*x*y", XY));
  CHECK(P("-(x - y)^2", XY) == P("-x^2 + 2*x*y - y^2", XY));
  CHECK(P("y \xE2\x88\x92 x^2", XY) == P("y - x^2", XY));

  const auto in = parse_input("# hyperbola\nx*y - 1\n");
  CHECK(in.ring.names() == std::vector<std::string>{"x", "y"});
  REQUIRE(in.polynomials.size() == 1);

  const auto ideal = parse_input("vars: x, y, z\nx - y   # comment\n\nz^2; x*z\n");
  CHECK(ideal.ring.size() == 3);
  CHECK(ideal.polynomials.size() == 3);

  try {
    parse_input("x*y\nx + $\n");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.line() == 2);
    CHECK(e.column() == 5);
  }
  CHECK_THROWS_AS(parse_input("vars: x\nx + y\n"), ParseError);
  CHECK_THROWS_AS(parse_input("x/(y+1)"), ParseError);
  CHECK_THROWS_AS(parse_input("# nothing\n"), ParseError);
}
