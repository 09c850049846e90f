#pragma once

#include <vector>

#include "bilip/polynomial.hpp"

namespace bilip {

/// Ideal given by generators. Zero generators are rejected; duplicates are fine.
class Ideal {
 public:
  Ideal(Ring ring, std::vector<Polynomial> generators);

  const Ring& ring() const { return ring_; }
  const std::vector<Polynomial>& generators() const { return generators_; }
  bool is_homogeneous() const;

 private:
  Ring ring_;
  std::vector<Polynomial> generators_;
};

/// Reduced Groebner basis: monic elements sorted by ascending leading monomial.
class GroebnerBasis {
 public:
  GroebnerBasis(Ring ring, MonomialOrder order, std::vector<Polynomial> elements)
      : ring_(std::move(ring)), order_(std::move(order)), elements_(std::move(elements)) {}

  const Ring& ring() const { return ring_; }
  const MonomialOrder& order() const { return order_; }
  const std::vector<Polynomial>& elements() const { return elements_; }
  /// True when the basis is {1}, i.e. the ideal is the whole ring.
  bool is_unit() const;

  friend bool operator==(const GroebnerBasis& a, const GroebnerBasis& b) {
    return a.order_ == b.order_ && a.elements_ == b.elements_;
  }

 private:
  Ring ring_;
  MonomialOrder order_;
  std::vector<Polynomial> elements_;
};

/// Buchberger's algorithm with normal pair selection and the coprime and
/// chain criteria. The result does not depend on generator order.
GroebnerBasis buchberger(const Ideal& ideal, const MonomialOrder& order);

/// Fully reduced remainder of f modulo the basis; zero iff f is in the ideal.
Polynomial normal_form(const Polynomial& f, const GroebnerBasis& basis);

/// Minimal generators of the leading monomial ideal.
std::vector<Monomial> lead_term_ideal(const GroebnerBasis& basis);

/// Checks that every S-polynomial of the set reduces to zero modulo the set.
bool is_groebner_basis(const std::vector<Polynomial>& polys, const MonomialOrder& order);

/// Removes monomials divisible by another member; keeps one copy of duplicates.
std::vector<Monomial> minimize_monomials(std::vector<Monomial> gens);

}  // namespace bilip
