#include <cmath>
#include <complex>
#include <random>

#include "bilip/cone.hpp"
#include "bilip/errors.hpp"
#include "bilip/hilbert.hpp"
#include "bilip/poly_algorithms.hpp"
#include "doctest.h"
#include "test_util.hpp"

using namespace bilip;
using namespace bilip::testing;

namespace {

const Ring XY = ring_of({"x", "y"});
const Ring XYZ = ring_of({"x", "y", "z"});

// Largest value of the cone generators at normalized points of V far out.
double cone_residual(const std::vector<Polynomial>& gens, const std::vector<std::vector<double>>& points) {
  double worst = 0;
  for (const auto& p : points) {
    double norm = 0;
    for (double c : p) norm += c * c;
    norm = std::sqrt(norm);
    std::vector<std::complex<double>> u;
    for (double c : p) u.emplace_back(c / norm);
    for (const auto& g : gens) worst = std::max(worst, std::abs(g.evaluate(u)));
  }
  return worst;
}

std::vector<ComponentInvariant> invariants_of(const InvariantSignature& s) { return s.components; }

}  // namespace

TEST_CASE("infinity ideal examples") {
  auto cone = infinity_ideal(Ideal(XY, {P("x*y - 1", XY)}));
  CHECK(cone.generators == std::vector<Polynomial>{P("x*y", XY)});
  // Hyperbola points escape along both axes.
  std::vector<std::vector<double>> far;
  for (double t : {1e3, 1e4, 1e5}) {
    far.push_back({t, 1 / t});
    far.push_back({1 / t, -t});
  }
  CHECK(cone_residual(cone.generators, far) < 1e-5);

  // The generator is x^2: as a set this is the y-axis.
  cone = infinity_ideal(Ideal(XY, {P("y - x^2", XY)}));
  CHECK(cone.generators == std::vector<Polynomial>{P("x^2", XY)});
  CHECK(squarefree_part(cone.generators.front()) == P("x", XY));
  far.clear();
  for (double t : {1e3, 1e4, 1e5}) far.push_back({t, t * t});
  CHECK(cone_residual(cone.generators, far) < 1e-2);

  cone = infinity_ideal(Ideal(XYZ, {P("x*y", XYZ), P("z^2", XYZ)}));
  CHECK(cone.generators == std::vector<Polynomial>{P("z^2", XYZ), P("x*y", XYZ)});

  CHECK_THROWS_AS(infinity_ideal(Ideal(XY, {P("x*y - 1", XY), P("x", XY)})), DomainError);
}

TEST_CASE("cone idempotence") {
  const std::vector<std::vector<std::string>> ideals = {
      {"x*y - 1"}, {"x^2 + y^2 + z^2 - 1", "x - y"}, {"x*z - y^2 + 1", "y*z - x"}, {"x^3 - y*z + x"}};
  for (const auto& texts : ideals) {
    std::vector<Polynomial> gens;
    for (const auto& t : texts) gens.push_back(P(t, XYZ));
    const auto once = infinity_ideal(Ideal(XYZ, gens));
    const auto twice = infinity_ideal(Ideal(XYZ, once.generators));
    const auto order = MonomialOrder::grevlex(3);
    const auto b1 = buchberger(Ideal(XYZ, once.generators), order);
    const auto b2 = buchberger(Ideal(XYZ, twice.generators), order);
    for (const auto& g : once.generators) CHECK(normal_form(g, b2).is_zero());
    for (const auto& g : twice.generators) CHECK(normal_form(g, b1).is_zero());
  }
}

TEST_CASE("cone components of hypersurfaces") {
  auto reports = cone_components_hypersurface(P("x*y - 1", XY));
  REQUIRE(reports.size() == 2);
  CHECK(reports[0].component_poly * reports[1].component_poly == P("x*y", XY));
  for (const auto& r : reports) {
    CHECK(r.exponent == 1);
    CHECK(r.component_degree == 1);
    CHECK_FALSE(r.may_split_over_c);
  }

  reports = cone_components_hypersurface(P("y^2 - x^3 - 1", XY));
  REQUIRE(reports.size() == 1);
  CHECK(reports[0].component_poly == P("x", XY));
  CHECK(reports[0].exponent == 3);

  reports = cone_components_hypersurface(P("y^2 - x^4", XY));
  REQUIRE(reports.size() == 1);
  CHECK(reports[0].component_poly == P("x", XY));
  CHECK(reports[0].exponent == 4);

  reports = cone_components_hypersurface(P("x^2 + y^2 - 1", XY));
  REQUIRE(reports.size() == 1);
  CHECK(reports[0].component_poly == P("x^2 + y^2", XY));
  CHECK(reports[0].component_degree == 2);
  CHECK(reports[0].exponent == 1);
  CHECK(reports[0].may_split_over_c);
  CHECK(reports[0].complex_components == 2u);
  CHECK(reports[0].irreducibility_status == IrreducibilityStatus::verified_q_irreducible);

  reports = cone_components_hypersurface(P("x^2 + y^2 + z^2 - 1", XYZ));
  REQUIRE(reports.size() == 1);
  CHECK(reports[0].complex_components == 1u);
  CHECK_FALSE(reports[0].may_split_over_c);

  CHECK_THROWS_AS(cone_components_hypersurface(Polynomial::constant(XY, 2)), DomainError);
}

TEST_CASE("invariant signature examples") {
  auto sig = invariant_signature(P("x*y - 1", XY), Mode::at_infinity);
  CHECK(sig.set_dim == 1);
  CHECK(sig.total_degree == 2);
  CHECK(sig.component_count == 2);
  CHECK(invariants_of(sig) == std::vector<ComponentInvariant>{{1, 1}, {1, 1}});
  CHECK(sig.class_c1 == TriState::yes);

  sig = invariant_signature(P("x^2 + y^2 + z^2", XYZ), Mode::local_homogeneous);
  CHECK(sig.set_dim == 2);
  CHECK(sig.total_degree == 2);

  sig = invariant_signature(P("y^2 - x^3 - 1", XY), Mode::at_infinity);
  CHECK(sig.set_dim == 1);
  CHECK(sig.total_degree == 3);
  CHECK(sig.component_count == 1);
  CHECK(invariants_of(sig) == std::vector<ComponentInvariant>{{1, 3}});

  // Over C the circle's cone is two lines.
  sig = invariant_signature(P("x^2 + y^2 - 1", XY), Mode::at_infinity);
  CHECK(sig.components_over_c);
  CHECK(invariants_of(sig) == std::vector<ComponentInvariant>{{1, 1}, {1, 1}});

  // Codimension two: component-free summary.
  sig = invariant_signature(Ideal(XYZ, {P("x^2 + y^2 + z^2 - 1", XYZ), P("x - y", XYZ)}),
                            Mode::at_infinity);
  CHECK(sig.path == Path::ideal);
  CHECK(sig.set_dim == 1);
  CHECK(sig.total_degree == 2);
  CHECK(sig.cone_dim == 1);
  CHECK(sig.cone_degree == 2);
  CHECK(sig.class_c1 == TriState::unknown);
  CHECK_THROWS_AS(verify_degree_formula(sig), DomainError);

  // A principal ideal given redundantly still takes the hypersurface path.
  sig = invariant_signature(Ideal(XY, {P("x*y - 1", XY), P("x^2*y - x", XY)}), Mode::at_infinity);
  CHECK(sig.path == Path::hypersurface);

  CHECK_THROWS_AS(invariant_signature(P("x*y - 1", XY), Mode::local_homogeneous), DomainError);
}

TEST_CASE("singular locus dimension") {
  CHECK(sing_dim(P("x^2 + y^2 + z^2", XYZ)) == 0);
  CHECK(sing_dim(P("x", XYZ)) == -1);
  CHECK(sing_dim(P("x*y", XYZ)) == 1);
  CHECK(sing_dim(P("y^2*z - x^3", XYZ)) == 1);
  const Ring R4 = ring_of({"x", "y", "z", "w"});
  CHECK(sing_dim(P("x*y", R4)) == 2);
  CHECK_THROWS_AS(sing_dim(P("x^2 + y", XYZ)), DomainError);
}

TEST_CASE("class C1 at infinity") {
  const Ring R4 = ring_of({"x", "y", "z", "w"});
  CHECK(invariant_signature(P("x*y*z*w - 1", R4), Mode::at_infinity).class_c1 == TriState::yes);
  // Two hyperplanes meeting in a plane: the cone is reducible and each part smooth.
  CHECK(invariant_signature(P("x*y - 1", R4), Mode::at_infinity).class_c1 == TriState::yes);
  // Cone over a quadric of rank 2 in C^4: singular along a plane.
  CHECK(invariant_signature(P("x^2 + y^2 + z", R4), Mode::at_infinity).class_c1 == TriState::unknown);
  // Cone with a two-dimensional singular locus that is absolutely irreducible.
  const Ring R5 = ring_of({"a", "b", "c", "d", "e"});
  CHECK(invariant_signature(P("a*b - c*d + e", R5), Mode::at_infinity).class_c1 == TriState::yes);
}

TEST_CASE("degree formula examples") {
  auto check = verify_degree_formula(invariant_signature(P("x*y - 1", XY), Mode::at_infinity));
  CHECK(check.holds);
  CHECK(check.total_degree == 2);
  CHECK(check.component_sum == 2);
  check = verify_degree_formula(invariant_signature(P("y^2 - x^3 - 1", XY), Mode::at_infinity));
  CHECK(check.holds);
  CHECK(check.total_degree == 3);
  const auto sig = invariant_signature(P("x^3*y^2*(x + y)", XY), Mode::at_infinity);
  check = verify_degree_formula(sig);
  CHECK(check.holds);
  CHECK(check.total_degree == 3);
  for (const auto& r : sig.reports) CHECK(r.exponent == 1);
}

TEST_CASE("degree formula on the corpus and random products") {
  for (const auto& text : hypersurface_corpus()) {
    CAPTURE(text);
    CHECK(verify_degree_formula(invariant_signature(parse_single(text), Mode::at_infinity)).holds);
  }
  std::mt19937_64 rng(2024);
  std::uniform_int_distribution<unsigned> exponent(1, 3);
  for (int trial = 0; trial < 50; ++trial) {
    const Ring& ring = trial % 2 ? XY : XYZ;
    Polynomial f = Polynomial::constant(ring, 1);
    for (int k = 0; k < 1 + trial % 3; ++k)
      f *= random_polynomial(ring, 1 + (trial + k) % 3, 3, rng).pow(exponent(rng));
    if (f.is_constant()) continue;
    CAPTURE(f.to_string());
    const auto check = verify_degree_formula(invariant_signature(f, Mode::at_infinity));
    CHECK(check.holds);
    CHECK(check.total_degree == squarefree_part(f).degree().value());
  }
}

TEST_CASE("signature is invariant under linear changes of coordinates") {
  std::mt19937_64 rng(99);
  for (const auto& text : hypersurface_corpus()) {
    const Polynomial f = parse_single(text);
    const auto reference = invariant_signature(f, Mode::at_infinity);
    for (int trial = 0; trial < 5; ++trial) {
      const auto moved = substitute_linear(f, random_invertible(f.ring().size(), rng));
      CAPTURE(text);
      CHECK(same_invariants(invariant_signature(moved, Mode::at_infinity), reference));
    }
  }
}
