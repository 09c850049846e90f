#include <cmath>
#include <random>

#include "bilip/errors.hpp"
#include "bilip/hilbert.hpp"
#include "bilip/numeric.hpp"
#include "bilip/poly_algorithms.hpp"
#include "doctest.h"
#include "test_util.hpp"

using namespace bilip;
using namespace bilip::testing;

namespace {

const Ring XY = ring_of({"x", "y"});
const Ring XYZ = ring_of({"x", "y", "z"});

std::vector<double> ladder(double r, unsigned rungs) {
  std::vector<double> out;
  for (unsigned j = 0; j <= rungs; ++j) out.push_back(r * std::ldexp(1.0, j));
  return out;
}

// |<u, e_i>| for a unit direction.
double along(const LimitDirection& d, std::size_t i) { return std::abs(d.direction[i]); }

}  // namespace

TEST_CASE("polynomial roots") {
  // (s - 1)(s - 2)(s + 3i) = s^3 + (3i - 3) s^2 + (2 - 9i) s + 6i
  const CVector p{Complex(0, 6), Complex(2, -9), Complex(-3, 3), Complex(1, 0)};
  auto roots = polynomial_roots(p);
  REQUIRE(roots.size() == 3);
  for (Complex expected : {Complex(1, 0), Complex(2, 0), Complex(0, -3)}) {
    double best = 1;
    for (auto r : roots) best = std::min(best, std::abs(r - expected));
    CHECK(best < 1e-12);
  }
  CHECK(polynomial_roots({Complex(5)}).empty());
  CHECK(polynomial_roots({Complex(-2), Complex(1), Complex(0)}).size() == 1);
  CHECK_THROWS_AS(polynomial_roots({Complex(0)}), DomainError);
}

TEST_CASE("cone region membership") {
  const ConeRegion region{{Complex(1), Complex(0)}, 0.1, 10};
  CHECK(region.contains({Complex(100), Complex(5)}));
  CHECK_FALSE(region.contains({Complex(100), Complex(20)}));
  CHECK_FALSE(region.contains({Complex(5), Complex(0)}));
  CHECK_FALSE(region.contains({Complex(-100), Complex(0)}));
  // Boundary: ||t v' - w|| = eta t exactly at the tangent point.
  const double eta = 0.1;
  const double a = std::sqrt(1 - eta * eta);
  CHECK(region.contains({Complex(50 * a * a), Complex(50 * a * eta * (1 - 1e-9))}));
}

TEST_CASE("limit directions examples") {
  auto dirs = limit_directions(P("x*y - 1", XY), ladder(200, 10), 2, 3);
  REQUIRE(dirs.size() == 2);
  // One direction on each axis.
  CHECK(std::min(along(dirs[0], 0), along(dirs[0], 1)) < 1e-6);
  CHECK(std::min(along(dirs[1], 0), along(dirs[1], 1)) < 1e-6);
  CHECK(std::abs(along(dirs[0], 0) - along(dirs[1], 0)) > 0.99);

  dirs = limit_directions(P("y - x^2", XY), ladder(200, 10), 2, 3);
  REQUIRE(dirs.size() == 1);
  CHECK(along(dirs[0], 0) < 1e-6);
  CHECK(dirs[0].multiplicity == 2);

  const Polynomial cone = P("x^2 + 2*y^2 - 3*z^2", XYZ);
  dirs = limit_directions(cone, ladder(500, 8), 3, 11);
  CHECK(dirs.size() == 6);
  for (const auto& d : dirs) CHECK(std::abs(cone.evaluate(d.direction)) < 1e-8);

  CHECK_THROWS_AS(limit_directions(P("x*y - 1", XY), {10.0}, 1, 1), DomainError);
  CHECK_THROWS_AS(limit_directions(P("x*y - 1", XY), {10.0, 5.0}, 1, 1), DomainError);
}

TEST_CASE("limit directions lie on the cone and cover every component") {
  for (const auto& text : hypersurface_corpus()) {
    const Polynomial f = parse_single(text);
    const auto reports = cone_components_hypersurface(f);
    const auto dirs = limit_directions(f, ladder(1000, 10), 2, 5);
    CAPTURE(text);
    std::vector<bool> hit(reports.size(), false);
    for (const auto& d : dirs) {
      bool on_some = false;
      for (std::size_t i = 0; i < reports.size(); ++i)
        if (std::abs(reports[i].component_poly.evaluate(d.direction)) < 1e-6) {
          on_some = true;
          hit[i] = true;
          CHECK(d.multiplicity == reports[i].exponent);
        }
      CHECK(on_some);
    }
    for (bool h : hit) CHECK(h);
  }
}

TEST_CASE("certify projection") {
  const Polynomial f = P("x*y - 1", XY);
  const auto dirs = limit_directions(f, ladder(200, 10), 1, 1);
  CHECK_FALSE(certify_projection(f, dirs, Projection{{{Complex(1), Complex(0)}}}));
  CHECK(certify_projection(f, dirs, Projection{{{Complex(1), Complex(2)}}}));

  // A linear form: random projections are accepted.
  const Polynomial line = P("2*x - y + 3*z", XYZ);
  const auto line_dirs = limit_directions(line, ladder(100, 6), 2, 9);
  std::mt19937_64 rng(4);
  std::normal_distribution<double> normal;
  for (int k = 0; k < 5; ++k) {
    CMatrix m(2, CVector(3));
    for (auto& row : m)
      for (auto& c : row) c = Complex(normal(rng), normal(rng));
    CHECK(certify_projection(line, line_dirs, Projection{m}));
  }
}

TEST_CASE("sheet count examples") {
  SheetParams params;
  auto run = sheet_counts(P("x*y - 1", XY), params);
  REQUIRE(run.components.size() == 2);
  for (const auto& c : run.components) {
    CHECK(c.sheet_count == 1);
    CHECK(c.agrees);
  }

  run = sheet_counts(P("y^2 - x^3 - 1", XY), params);
  REQUIRE(run.components.size() == 1);
  CHECK(run.components[0].sheet_count == 3);

  run = sheet_counts(P("y^2 - x^4", XY), params);
  REQUIRE(run.components.size() == 1);
  CHECK(run.components[0].sheet_count == 4);

  run = sheet_counts(P("x*y", XY), params);
  REQUIRE(run.components.size() == 2);
  CHECK(run.components[0].sheet_count == 1);
  CHECK(run.components[1].sheet_count == 1);

  const auto reports = cone_components_hypersurface(P("y^2 - x^3 - 1", XY));
  CHECK(sheet_count(P("y^2 - x^3 - 1", XY), reports[0], params).sheet_count == 3);
  ConeComponentReport other;
  other.component_poly = P("y", XY);
  CHECK_THROWS_AS(sheet_count(P("y^2 - x^3 - 1", XY), other, params), DomainError);

  CHECK_THROWS_AS(sheet_counts(Polynomial::constant(XY, 1), params), DomainError);
  CHECK_THROWS_AS(sheet_counts(P("x^2 - 1", ring_of({"x"})), params), DomainError);
  params.eta = 1.5;
  CHECK_THROWS_AS(sheet_counts(P("x*y - 1", XY), params), DomainError);
}

TEST_CASE("sheet counts agree with exponents on the corpus") {
  for (const auto& text : hypersurface_corpus()) {
    const Polynomial f = parse_single(text);
    const auto run = sheet_counts(f, SheetParams{});
    CAPTURE(text);
    for (const auto& c : run.components) CHECK(c.agrees);
    const auto degree = affine_degree(Ideal(f.ring(), {f})).degree;
    REQUIRE(run.totals_per_rung.size() == run.radii.size());
    for (auto total : run.totals_per_rung) CHECK(total == degree);
    CHECK(run.aperture_consistent);
    // Every ray of the ladder stays inside the cone region.
    for (double t : run.radii) {
      CVector point;
      for (auto c : run.region.base_direction) point.push_back(t * 1.0000001 * c);
      CHECK(run.region.contains(point));
    }
  }
}

TEST_CASE("sheet counts match exponents on random top forms") {
  std::mt19937_64 rng(17);
  std::uniform_int_distribution<int> coef(-4, 4);
  std::uniform_int_distribution<unsigned> exponent(1, 3);
  for (int trial = 0; trial < 12; ++trial) {
    // l1^a * l2^b plus random lower-order terms.
    Polynomial top = Polynomial::constant(XY, 1);
    for (int k = 0; k < 2; ++k) {
      int a = 0, b = 0;
      while (a == 0 && b == 0) {
        a = coef(rng);
        b = coef(rng);
      }
      top *= (P("x", XY) * Rational(a) + P("y", XY) * Rational(b)).pow(exponent(rng));
    }
    const unsigned d = top.degree().value();
    Polynomial f = top + random_polynomial(XY, d - 1, 3, rng, false) + Polynomial::constant(XY, 1);
    CAPTURE(f.to_string());
    const auto run = sheet_counts(f, SheetParams{});
    for (const auto& c : run.components) CHECK(c.agrees);
  }
}

TEST_CASE("sheet counts are deterministic") {
  const Polynomial f = P("y^2 - x^3 - 1", XY);
  SheetParams params;
  params.seed = 42;
  const auto a = sheet_counts(f, params);
  const auto b = sheet_counts(f, params);
  CHECK(a.region.base_direction == b.region.base_direction);
  CHECK(a.max_final_offset == b.max_final_offset);
  CHECK(a.components[0].fiber_point_counts == b.components[0].fiber_point_counts);
  params.seed = 43;
  const auto c = sheet_counts(f, params);
  CHECK(c.region.base_direction != a.region.base_direction);
  CHECK(c.components[0].sheet_count == a.components[0].sheet_count);
}

TEST_CASE("random hypersurfaces with repeated asymptotic factors") {
  // Products with a power of a random linear form, shifted off the origin:
  // sheets inside a multiple cone component separate only slowly.
  std::mt19937_64 rng(99);
  std::uniform_int_distribution<unsigned> exponent(1, 3);
  for (int trial = 0; trial < 60; ++trial) {
    const Ring& ring = trial % 3 == 0 ? XYZ : XY;
    Polynomial f = random_polynomial(ring, 1 + trial % 5, 4, rng, true);
    const Polynomial l = random_polynomial(ring, 1, 2, rng, true);
    f = f * l.pow(exponent(rng)) + Polynomial::constant(ring, 1);
    if (f.is_constant()) continue;
    CAPTURE(f.to_string());
    const auto run = sheet_counts(f, SheetParams{});
    for (const auto& c : run.components) CHECK(c.agrees);
    for (unsigned total : run.totals_per_rung) CHECK(total == run.affine_degree);

    const auto dirs = limit_directions(f, ladder(1000, 6), 1, 7);
    const Polynomial top = top_form(squarefree_part(f));
    unsigned count = 0;
    for (const auto& d : dirs) {
      CHECK(std::abs(normalize(top).evaluate(d.direction)) < 1e-4);
      count += d.multiplicity;
    }
    CHECK(count == squarefree_part(f).degree().value());
  }
}
