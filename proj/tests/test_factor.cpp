#include <random>

#include "bilip/errors.hpp"
#include "bilip/factor.hpp"
#include "bilip/poly_algorithms.hpp"
#include "doctest.h"
#include "test_util.hpp"

using namespace bilip;
using namespace bilip::testing;

namespace {

IntPoly ip(std::initializer_list<long> coeffs) {
  IntPoly r;
  for (long c : coeffs) r.push_back(Integer(c));
  return r;
}

IntPoly mul(const IntPoly& a, const IntPoly& b) {
  IntPoly r(a.size() + b.size() - 1, Integer(0));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  return r;
}

Polynomial product(const std::vector<FormFactor>& parts, const Ring& ring) {
  Polynomial p = Polynomial::constant(ring, 1);
  for (const auto& f : parts) p *= f.factor;
  return p;
}

// Rational roots by the rational root theorem, brute force over divisors.
int rational_root_count(const IntPoly& f) {
  auto divisors = [](Integer n) {
    std::vector<long> out;
    n = abs(n);
    for (long d = 1; d <= n.get_si(); ++d)
      if (n % d == 0) out.push_back(d);
    return out;
  };
  std::vector<Rational> roots;
  if (f[0] == 0) roots.push_back(0);
  for (long p : divisors(f[0] == 0 ? f[1] : f[0]))
    for (long q : divisors(f.back()))
      for (int s : {1, -1}) {
        Rational r(s * p, q);
        r.canonicalize();
        Rational v = 0;
        for (std::size_t i = f.size(); i-- > 0;) v = v * r + f[i];
        if (v == 0 && std::find(roots.begin(), roots.end(), r) == roots.end()) roots.push_back(r);
      }
  return static_cast<int>(roots.size());
}

}  // namespace

TEST_CASE("univariate factorization examples") {
  CHECK(factor_univariate(ip({-1, 0, 0, 0, 1})) ==
        std::vector<IntPoly>{ip({-1, 1}), ip({1, 1}), ip({1, 0, 1})});
  CHECK(factor_univariate(ip({1, 0, 0, 0, 1})) == std::vector<IntPoly>{ip({1, 0, 0, 0, 1})});
  CHECK(factor_univariate(ip({1, 5, 6})) == std::vector<IntPoly>{ip({1, 2}), ip({1, 3})});
  CHECK(factor_univariate(ip({1, 1, 0, 0, 0, 1})) ==
        std::vector<IntPoly>{ip({1, 1, 1}), ip({1, 0, -1, 1})});
  // Minimal polynomial of sqrt2 + sqrt3 + sqrt5: splits into many factors modulo every prime.
  const IntPoly sd = ip({576, 0, -960, 0, 352, 0, -40, 0, 1});
  CHECK(factor_univariate(sd) == std::vector<IntPoly>{sd});
  CHECK(factor_univariate(ip({-10, 2})) == std::vector<IntPoly>{ip({-5, 1})});
  CHECK_THROWS_AS(factor_univariate(ip({7})), DomainError);
}

TEST_CASE("univariate factors multiply back and linear factors match rational roots") {
  std::mt19937_64 rng(77);
  std::uniform_int_distribution<int> coef(-6, 6);
  for (int trial = 0; trial < 40; ++trial) {
    IntPoly f{Integer(1)};
    const int pieces = 1 + trial % 4;
    for (int k = 0; k < pieces; ++k) {
      IntPoly piece;
      const int d = 1 + (trial + k) % 3;
      for (int i = 0; i <= d; ++i) piece.push_back(Integer(coef(rng)));
      if (piece.back() == 0) piece.back() = 1;
      f = mul(f, piece);
    }
    while (f.size() > 1 && f.back() == 0) f.pop_back();
    if (f.size() < 2 || f[0] == 0) continue;
    // Keep only squarefree inputs.
    const Ring R = ring_of({"x"});
    Polynomial fp(R);
    for (std::size_t i = 0; i < f.size(); ++i) fp.add_term(Monomial{static_cast<unsigned>(i)}, Rational(f[i]));
    if (squarefree_part(fp).degree().value() + 1 != f.size()) continue;

    const auto parts = factor_univariate(f);
    IntPoly back{Integer(1)};
    int linear = 0;
    for (const auto& p : parts) {
      back = mul(back, p);
      if (p.size() == 2) ++linear;
      CHECK(p.back() > 0);
    }
    // Equal up to sign and content.
    Integer g = 0;
    for (const auto& c : f) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    for (std::size_t i = 0; i < f.size(); ++i)
      CHECK(back[i] * g * (f.back() > 0 ? 1 : -1) == f[i]);
    CHECK(linear == rational_root_count(f));
  }
}

TEST_CASE("binary and ternary forms") {
  const Ring R2 = ring_of({"x", "y"});
  auto parts = factor_form(P("x^2 + y^2", R2));
  REQUIRE(parts.size() == 1);
  CHECK(parts[0].verified);
  parts = factor_form(P("x^2 - y^2", R2));
  REQUIRE(parts.size() == 2);
  CHECK(parts[0].factor == P("x + y", R2));
  CHECK(parts[1].factor == P("x - y", R2));
  parts = factor_form(P("x*y*(x + y)", R2));
  CHECK(parts.size() == 3);

  const Ring R3 = ring_of({"x", "y", "z"});
  CHECK(factor_form(P("x^2 + y^2 + z^2", R3)).size() == 1);
  parts = factor_form(P("(x - y)*(y - z)*(z - x)", R3));
  CHECK(parts.size() == 3);
  parts = factor_form(P("(x^2 + y*z)*(x*y + z^2 + x^2)*(2*x + 3*y - z)", R3));
  REQUIRE(parts.size() == 3);
  CHECK(parts[0].factor.degree().value() == 1);
  CHECK(equal_up_to_constant(product(parts, R3), P("(x^2 + y*z)*(x*y + z^2 + x^2)*(2*x + 3*y - z)", R3)));
  CHECK(factor_form(P("x^3 + y^3 + z^3", R3)).size() == 1);
  CHECK(factor_form(P("x^3 + y^3", R3)).size() == 2);
  CHECK_THROWS_AS(factor_form(P("x^2 + y", R3)), DomainError);
}

TEST_CASE("forms in four variables") {
  const Ring R4 = ring_of({"x", "y", "z", "w"});
  auto parts = factor_form(P("x^2 + y^2 + z^2 + w^2", R4));
  REQUIRE(parts.size() == 1);
  CHECK(parts[0].verified);
  parts = factor_form(P("(x + y)*(z + w)", R4));
  REQUIRE(parts.size() == 1);
  CHECK_FALSE(parts[0].verified);
  parts = factor_form(P("x*(y^2 + z*w)", R4));
  REQUIRE(parts.size() == 2);
  CHECK(parts[0].verified);
  CHECK(parts[1].verified);
}

TEST_CASE("factoring products of random ternary forms") {
  std::mt19937_64 rng(31);
  const Ring R3 = ring_of({"x", "y", "z"});
  for (int trial = 0; trial < 15; ++trial) {
    Polynomial f = Polynomial::constant(R3, 1);
    std::size_t expected = 0;
    for (int k = 0; k < 2 + trial % 2; ++k) {
      const Polynomial piece = top_form(random_polynomial(R3, 1 + (trial + k) % 3, 4, rng, true));
      f *= piece;
      expected += factor_form(squarefree_part(piece)).size();
    }
    f = squarefree_part(f);
    CAPTURE(f.to_string());
    const auto parts = factor_form(f);
    CHECK(equal_up_to_constant(product(parts, R3), f));
    CHECK(parts.size() <= expected);
    for (const auto& p : parts) CHECK(p.verified);
  }
}
