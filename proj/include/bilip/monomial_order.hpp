#pragma once

#include <compare>
#include <vector>

#include "bilip/monomial.hpp"

namespace bilip {

/// Graded monomial order with a variable priority permutation.
///
/// priority[0] is the most significant variable. Both kinds refine total
/// degree and are multiplicative.
class MonomialOrder {
 public:
  enum class Kind { grevlex, glex };

  static MonomialOrder grevlex(std::size_t nvars);
  static MonomialOrder glex(std::size_t nvars);
  MonomialOrder(Kind kind, std::vector<std::size_t> priority);

  Kind kind() const { return kind_; }
  const std::vector<std::size_t>& priority() const { return priority_; }
  std::size_t nvars() const { return priority_.size(); }

  std::strong_ordering compare(const Monomial& a, const Monomial& b) const;
  bool less(const Monomial& a, const Monomial& b) const { return compare(a, b) < 0; }

  friend bool operator==(const MonomialOrder&, const MonomialOrder&) = default;

 private:
  Kind kind_;
  std::vector<std::size_t> priority_;
};

}  // namespace bilip
