#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "bilip/groebner.hpp"

namespace bilip {

/// Ideal of maximum degree forms; its zero set is the tangent cone at infinity.
struct InfinityIdeal {
  Ring ring;
  /// Top forms of the reduced grevlex basis of the input ideal.
  std::vector<Polynomial> generators;
};

/// Throws DomainError when the input is the unit ideal.
InfinityIdeal infinity_ideal(const Ideal& ideal);

enum class IrreducibilityStatus { verified_q_irreducible, squarefree_unverified };

std::string to_string(IrreducibilityStatus s);

/// One component of the tangent cone at infinity of a hypersurface, grouped over Q.
struct ConeComponentReport {
  Polynomial component_poly{Ring()};
  /// Relative multiplicity at infinity: the exponent of the component in the
  /// top form of the reduced equation.
  unsigned exponent = 0;
  unsigned component_degree = 0;
  IrreducibilityStatus irreducibility_status = IrreducibilityStatus::verified_q_irreducible;
  /// Set when the component may split into conjugate components over C.
  bool may_split_over_c = false;
  /// Number of components over C when known: 1 for a certified absolutely
  /// irreducible component, component_degree for a binary form (it splits into
  /// lines). Empty when unknown.
  std::optional<unsigned> complex_components;
  /// Dimension of the singular locus of V(component_poly); -1 when empty.
  int sing_dim = -1;
};

/// Cone components of V(f) at infinity: squarefree part, top form, squarefree
/// decomposition of the top form, then irreducible factors over Q.
std::vector<ConeComponentReport> cone_components_hypersurface(const Polynomial& f);

enum class Mode { at_infinity, local_homogeneous };
enum class Path { hypersurface, ideal };
enum class TriState { yes, no, unknown };

std::string to_string(Mode m);
std::string to_string(Path p);
std::string to_string(TriState t);

/// (component degree, relative multiplicity); ordered lexicographically.
struct ComponentInvariant {
  unsigned degree = 0;
  unsigned exponent = 0;
  friend auto operator<=>(const ComponentInvariant&, const ComponentInvariant&) = default;
};

struct InvariantSignature {
  Mode mode = Mode::at_infinity;
  Path path = Path::hypersurface;
  std::size_t ambient_dim = 0;
  int set_dim = 0;
  /// Degree of the set (at infinity) or multiplicity at the origin (local).
  std::uint64_t total_degree = 0;

  // Hypersurface path.
  std::vector<ConeComponentReport> reports;
  /// Number of cone components r: counted over C when components_over_c holds,
  /// otherwise over Q.
  unsigned component_count = 0;
  /// Sorted multiset of (degree, exponent), over C when components_over_c holds.
  std::vector<ComponentInvariant> components;
  bool components_over_c = false;
  TriState class_c1 = TriState::unknown;

  // Ideal path (codimension at least two): component-free summary.
  std::vector<Polynomial> cone_generators;
  int cone_dim = 0;
  std::uint64_t cone_degree = 0;
};

/// Assembles the signature. A principal reduced basis takes the hypersurface
/// path. Throws DomainError for the unit ideal or, in local-homogeneous mode,
/// for non-homogeneous generators.
InvariantSignature invariant_signature(const Ideal& ideal, Mode mode);
InvariantSignature invariant_signature(const Polynomial& f, Mode mode);

/// Equality of every numeric invariant (polynomials are not compared).
bool same_invariants(const InvariantSignature& a, const InvariantSignature& b);

/// Dimension of the singular locus of the cone V(h), -1 when it is empty.
/// Throws DomainError for non-homogeneous or constant input.
int sing_dim(const Polynomial& h);

struct DegreeFormulaCheck {
  bool holds = false;
  std::uint64_t total_degree = 0;
  std::uint64_t component_sum = 0;
};

/// deg(X) against the sum of exponent times component degree. Throws
/// DomainError for signatures without component data.
DegreeFormulaCheck verify_degree_formula(const InvariantSignature& sig);

}  // namespace bilip
