#include "bilip/topology.hpp"

#include <algorithm>
#include <numeric>

#include "bilip/errors.hpp"

namespace bilip {

namespace {

std::uint64_t checked_lcm(std::uint64_t a, std::uint64_t b) {
  std::uint64_t out = 0;
  if (__builtin_mul_overflow(a / std::gcd(a, b), b, &out)) throw DomainError("torsion order overflows");
  return out;
}

void check_inputs(std::int64_t b1, std::int64_t d) {
  if (b1 < 0) throw DomainError("first Betti number must be non-negative");
  if (d <= 0) throw DomainError("degree must be positive");
}

}  // namespace

AbelianGroup AbelianGroup::make(std::uint64_t free_rank, const std::vector<std::uint64_t>& orders) {
  AbelianGroup g;
  g.free_rank = free_rank;
  std::vector<std::uint64_t> t;
  for (auto o : orders) {
    if (o == 0)
      ++g.free_rank;
    else if (o > 1)
      t.push_back(o);
  }
  // Diagonal Smith form: replacing (a, b) by (gcd, lcm) keeps the group and
  // pushes the chain into divisibility order.
  for (std::size_t i = 0; i < t.size(); ++i)
    for (std::size_t j = i + 1; j < t.size(); ++j) {
      const std::uint64_t g2 = std::gcd(t[i], t[j]);
      const std::uint64_t l = checked_lcm(t[i], t[j]);
      t[i] = g2;
      t[j] = l;
    }
  for (auto o : t)
    if (o > 1) g.torsion.push_back(o);
  return g;
}

std::string to_string(const AbelianGroup& g) {
  std::vector<std::string> parts;
  if (g.free_rank == 1) parts.push_back("Z");
  if (g.free_rank > 1) parts.push_back("Z^" + std::to_string(g.free_rank));
  for (auto o : g.torsion) parts.push_back("Z/" + std::to_string(o));
  if (parts.empty()) return "0";
  std::string out = parts.front();
  for (std::size_t i = 1; i < parts.size(); ++i) out += " + " + parts[i];
  return out;
}

AbelianGroup direct_sum(const AbelianGroup& a, const AbelianGroup& b) {
  std::vector<std::uint64_t> orders = a.torsion;
  orders.insert(orders.end(), b.torsion.begin(), b.torsion.end());
  return AbelianGroup::make(a.free_rank + b.free_rank, orders);
}

AbelianGroup SpectralPage::at(int p, int q) const {
  if (p < 0 || p > 2 || q < 0 || q > 1) return {};
  return entries[p][q];
}

LerayPages leray_pages(std::int64_t b1, std::int64_t d) {
  check_inputs(b1, d);
  const auto rank = static_cast<std::uint64_t>(b1);
  const auto order = static_cast<std::uint64_t>(d);
  // Cohomology of the base, repeated in both fiber degrees (trivial monodromy).
  const std::array<AbelianGroup, 3> base{AbelianGroup::make(1, {}), AbelianGroup::make(rank, {}),
                                         AbelianGroup::make(1, {})};
  LerayPages out;
  out.e2.index = 2;
  out.e2.d2_multiplier = d;
  for (int p = 0; p < 3; ++p) out.e2.entries[p] = {base[p], base[p]};

  // The only nonzero d2 is E^{0,1} = Z -> E^{2,0} = Z, multiplication by d:
  // injective, with cokernel Z/d.
  out.e_infinity = out.e2;
  out.e_infinity.index = 3;
  out.e_infinity.entries[0][1] = AbelianGroup{};
  out.e_infinity.entries[2][0] = AbelianGroup::make(0, {order});
  return out;
}

AbelianGroup h2_of_complement(std::int64_t b1, std::int64_t d) {
  const auto pages = leray_pages(b1, d);
  // 0 -> E^{2,0} -> H^2 -> E^{1,1} -> 0 splits since E^{1,1} is free; E^{0,2} = 0.
  return direct_sum(direct_sum(pages.e_infinity.at(2, 0), pages.e_infinity.at(1, 1)),
                    pages.e_infinity.at(0, 2));
}

std::uint64_t degree_from_h2(const AbelianGroup& g) {
  const AbelianGroup c = AbelianGroup::make(g.free_rank, g.torsion);
  if (c.torsion.size() > 1) throw DomainError("torsion " + to_string(c) + " is not cyclic");
  return c.torsion.empty() ? 1 : c.torsion.front();
}

std::uint64_t plane_curve_b1(std::int64_t d) {
  if (d <= 0) throw DomainError("degree must be positive");
  const auto n = static_cast<std::uint64_t>(d);
  return (n - 1) * (n - 2);
}

}  // namespace bilip
