#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <string>
#include <vector>

namespace bilip {

/// Finitely generated abelian group Z^free_rank + sum of Z/torsion[i].
/// Canonical form: torsion[i] divides torsion[i+1], every order at least 2.
struct AbelianGroup {
  std::uint64_t free_rank = 0;
  std::vector<std::uint64_t> torsion;

  /// Canonical form of Z^free_rank + sum of Z/orders[i]. Orders equal to 1 are
  /// dropped; a zero order contributes a free summand.
  static AbelianGroup make(std::uint64_t free_rank, const std::vector<std::uint64_t>& orders);

  bool is_trivial() const { return free_rank == 0 && torsion.empty(); }
  friend bool operator==(const AbelianGroup&, const AbelianGroup&) = default;
};

/// "0", "Z", "Z^2 + Z/3", ...
std::string to_string(const AbelianGroup& g);

/// Direct sum in canonical form.
AbelianGroup direct_sum(const AbelianGroup& a, const AbelianGroup& b);

/// Page of the cohomology spectral sequence of the C*-bundle S \ {0} -> P(S),
/// entries indexed by p in {0,1,2} and q in {0,1}.
struct SpectralPage {
  /// 2 for the second page, 3 for the limit page (the sequence degenerates there).
  int index = 2;
  std::array<std::array<AbelianGroup, 2>, 3> entries;
  /// d2: E^{0,1} -> E^{2,0} is multiplication by this integer.
  std::int64_t d2_multiplier = 0;

  /// Entry (p, q); the trivial group outside the stored grid.
  AbelianGroup at(int p, int q) const;
};

struct LerayPages {
  SpectralPage e2;
  SpectralPage e_infinity;
};

/// Pages for a projective curve P(S) with first Betti number b1 and cone degree
/// d. Throws DomainError for negative b1 or d <= 0.
LerayPages leray_pages(std::int64_t b1, std::int64_t d);

/// H^2(S \ {0}; Z) = Z^b1 + Z/d. Throws DomainError for negative b1 or d <= 0.
AbelianGroup h2_of_complement(std::int64_t b1, std::int64_t d);

/// Order of the torsion subgroup, 1 when torsion free. Throws DomainError when
/// the torsion is not cyclic.
std::uint64_t degree_from_h2(const AbelianGroup& g);

/// First Betti number (d - 1)(d - 2) of a smooth plane curve of degree d.
/// Throws DomainError for d <= 0.
std::uint64_t plane_curve_b1(std::int64_t d);

}  // namespace bilip
