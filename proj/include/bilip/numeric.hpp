#pragma once

#include <complex>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "bilip/cone.hpp"

namespace bilip {

using Complex = std::complex<double>;
using CVector = std::vector<Complex>;
/// Row-major complex matrix.
using CMatrix = std::vector<CVector>;

/// Roots of a polynomial with ascending complex coefficients (companion matrix
/// eigenvalues, then Newton polishing). Throws DomainError on a zero leading
/// coefficient after trimming exact zeros.
std::vector<Complex> polynomial_roots(const CVector& coeffs);

/// Points w with ||w|| > radius and ||t v' - w|| <= aperture * t for some t > 0.
struct ConeRegion {
  CVector base_direction;
  double aperture = 0.1;
  double radius = 1.0;
  bool contains(const CVector& w) const;
};

/// Linear projection C^n -> C^p given by a p x n matrix.
struct Projection {
  CMatrix matrix;
};

struct LimitDirection {
  /// Unit vector, defined up to a complex phase.
  CVector direction;
  /// Number of fiber points converging to it.
  unsigned multiplicity = 0;
  /// Base-direction sample that produced it.
  unsigned sample = 0;
};

/// Limit directions of V(f) along rays to infinity: for each sample a random
/// base direction and projection, fibers solved at every radius, tracks
/// clustered by their rate of convergence, cluster centers extrapolated.
/// Directions repeated across samples (projective distance below 1e-4) are
/// reported once. Throws ComputationFailure when a sample stays degenerate
/// after re-drawing.
std::vector<LimitDirection> limit_directions(const Polynomial& f, const std::vector<double>& radii,
                                             unsigned samples, std::uint64_t seed);

/// False when some direction lies within the angular tolerance of ker P.
bool certify_projection(const Polynomial& f, const std::vector<LimitDirection>& directions,
                        const Projection& p, double tolerance = 1e-6);

struct SheetParams {
  double eta = 0.1;
  /// Defaults to 100 * (1 + largest absolute coefficient).
  std::optional<double> radius;
  unsigned ladder = 10;
  std::uint64_t seed = 1;
  double cluster_tolerance = 1e-6;
  unsigned max_reseeds = 5;
};

struct SheetReport {
  std::size_t component_index = 0;
  Polynomial component{Ring()};
  /// Exponent from the algebraic computation.
  unsigned exponent = 0;
  /// Sheets converging to each fiber point of this component.
  std::vector<unsigned> fiber_point_counts;
  unsigned sheet_count = 0;
  bool agrees = false;
};

struct SheetRun {
  ConeRegion region;
  Projection projection;
  std::vector<double> radii;
  /// Fiber points counted at each rung; each must equal affine_degree.
  std::vector<unsigned> totals_per_rung;
  std::uint64_t affine_degree = 0;
  double min_root_separation = 0;
  double min_fiber_point_separation = 0;
  /// Largest distance from a sheet to its cone fiber point at the last rung.
  double max_final_offset = 0;
  bool aperture_consistent = false;
  unsigned reseeds = 0;
  std::vector<std::string> warnings;
  std::vector<SheetReport> components;
};

/// Counts sheets of a generic projection of V(f) over a cone region for every
/// cone component. Throws DomainError for constant f or fewer than two
/// variables, ComputationFailure when no generic configuration is found.
SheetRun sheet_counts(const Polynomial& f, const SheetParams& params);

/// Report for one component; throws DomainError when it is not a cone component of f.
SheetReport sheet_count(const Polynomial& f, const ConeComponentReport& component,
                        const SheetParams& params);

}  // namespace bilip
