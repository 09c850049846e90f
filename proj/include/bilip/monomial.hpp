#pragma once

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <vector>

namespace bilip {

/// Exponent vector over a fixed ambient ring.
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::size_t nvars) : exps_(nvars, 0) {}
  Monomial(std::initializer_list<unsigned> exps) : exps_(exps) {}
  explicit Monomial(std::vector<unsigned> exps) : exps_(std::move(exps)) {}

  std::size_t size() const { return exps_.size(); }
  unsigned operator[](std::size_t i) const { return exps_[i]; }
  unsigned& operator[](std::size_t i) { return exps_[i]; }
  const std::vector<unsigned>& exponents() const { return exps_; }

  unsigned degree() const;
  bool is_one() const;

  /// True when this divides other.
  bool divides(const Monomial& other) const;

  Monomial operator*(const Monomial& other) const;
  /// Exact quotient; caller guarantees divisibility.
  Monomial operator/(const Monomial& other) const;

  friend bool operator==(const Monomial&, const Monomial&) = default;
  // Lexicographic on exponent vectors; this is the storage order of Polynomial.
  friend std::strong_ordering operator<=>(const Monomial& a, const Monomial& b) {
    return a.exps_ <=> b.exps_;
  }

 private:
  std::vector<unsigned> exps_;
};

Monomial lcm(const Monomial& a, const Monomial& b);
Monomial gcd(const Monomial& a, const Monomial& b);
bool coprime(const Monomial& a, const Monomial& b);

}  // namespace bilip
