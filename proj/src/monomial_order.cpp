#include "bilip/monomial_order.hpp"

#include <algorithm>
#include <numeric>

#include "bilip/errors.hpp"

namespace bilip {

namespace {

std::vector<std::size_t> identity_priority(std::size_t n) {
  std::vector<std::size_t> p(n);
  std::iota(p.begin(), p.end(), 0);
  return p;
}

}  // namespace

MonomialOrder MonomialOrder::grevlex(std::size_t nvars) {
  return MonomialOrder(Kind::grevlex, identity_priority(nvars));
}

MonomialOrder MonomialOrder::glex(std::size_t nvars) {
  return MonomialOrder(Kind::glex, identity_priority(nvars));
}

MonomialOrder::MonomialOrder(Kind kind, std::vector<std::size_t> priority)
    : kind_(kind), priority_(std::move(priority)) {
  auto sorted = priority_;
  std::sort(sorted.begin(), sorted.end());
  if (sorted != identity_priority(priority_.size()))
    throw DomainError("monomial order priority is not a permutation");
}

std::strong_ordering MonomialOrder::compare(const Monomial& a, const Monomial& b) const {
  const unsigned da = a.degree();
  const unsigned db = b.degree();
  if (da != db) return da <=> db;
  if (kind_ == Kind::glex) {
    for (std::size_t v : priority_)
      if (a[v] != b[v]) return a[v] <=> b[v];
    return std::strong_ordering::equal;
  }
  // Reverse lex tie-break: the smaller power of the least significant variable wins.
  for (auto it = priority_.rbegin(); it != priority_.rend(); ++it) {
    const std::size_t v = *it;
    if (a[v] != b[v]) return b[v] <=> a[v];
  }
  return std::strong_ordering::equal;
}

}  // namespace bilip
