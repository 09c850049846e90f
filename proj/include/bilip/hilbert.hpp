#pragma once

#include <cstdint>
#include <vector>

#include "bilip/groebner.hpp"

namespace bilip {

/// Dimension and degree read off a Hilbert series numerator(t)/(1-t)^nvars.
struct HilbertData {
  IntPoly numerator;
  std::size_t nvars = 0;
  /// Affine dimension of the cone (dim_degree_homogeneous) or of the set (affine_degree).
  unsigned krull_dimension = 0;
  std::uint64_t degree = 0;
};

/// Numerator N(t) of the Hilbert series of S/(M) with S in nvars variables,
/// by the pivot recursion N(I + (m)) = N(I) - t^deg(m) N(I : m).
IntPoly hilbert_numerator(const std::vector<Monomial>& gens, std::size_t nvars);

/// Cancels (1-t) factors. Throws DomainError when N = 0 (the unit ideal).
HilbertData hilbert_data(const IntPoly& numerator, std::size_t nvars);

/// Dimension and degree of the affine cone V(I) for homogeneous I. A principal
/// ideal is replaced by its squarefree part first.
HilbertData dim_degree_homogeneous(const Ideal& ideal);

/// Dimension and degree of V(I) in affine space via its projective closure.
/// Throws DomainError for the unit ideal.
HilbertData affine_degree(const Ideal& ideal);

/// Multiplicity at the origin of a homogeneous set: equal to its degree.
std::uint64_t multiplicity_homogeneous_germ(const Ideal& ideal);

}  // namespace bilip
