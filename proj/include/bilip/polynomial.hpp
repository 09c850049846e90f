#pragma once

#include <compare>
#include <complex>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "bilip/monomial.hpp"
#include "bilip/monomial_order.hpp"
#include "bilip/rational.hpp"

namespace bilip {

/// Ordered list of variable names. Cheap to copy; compared by content.
class Ring {
 public:
  Ring() : vars_(std::make_shared<const std::vector<std::string>>()) {}
  explicit Ring(std::vector<std::string> vars);

  std::size_t size() const { return vars_->size(); }
  const std::string& name(std::size_t i) const { return (*vars_)[i]; }
  const std::vector<std::string>& names() const { return *vars_; }
  std::optional<std::size_t> index_of(const std::string& name) const;

  /// Same ring with one more variable at the end.
  Ring with_variable(const std::string& name) const;

  friend bool operator==(const Ring& a, const Ring& b) {
    return a.vars_ == b.vars_ || *a.vars_ == *b.vars_;
  }

 private:
  std::shared_ptr<const std::vector<std::string>> vars_;
};

/// Total degree of a polynomial; the zero polynomial has degree minus infinity.
class Degree {
 public:
  static Degree minus_infinity() { return Degree(); }
  explicit Degree(unsigned d) : value_(d) {}

  bool is_minus_infinity() const { return !value_.has_value(); }
  /// Throws DomainError on minus infinity.
  unsigned value() const;

  friend bool operator==(const Degree&, const Degree&) = default;
  friend std::strong_ordering operator<=>(const Degree& a, const Degree& b) {
    return a.value_ <=> b.value_;
  }

 private:
  Degree() = default;
  std::optional<unsigned> value_;
};

/// Sparse multivariate polynomial over Q. No zero coefficient is ever stored.
class Polynomial {
 public:
  using TermMap = std::map<Monomial, Rational>;

  explicit Polynomial(Ring ring) : ring_(std::move(ring)) {}
  Polynomial(Ring ring, TermMap terms);

  static Polynomial constant(const Ring& ring, const Rational& c);
  static Polynomial variable(const Ring& ring, std::size_t index);
  static Polynomial term(const Ring& ring, const Monomial& m, const Rational& c);

  const Ring& ring() const { return ring_; }
  const TermMap& terms() const { return terms_; }
  std::size_t num_terms() const { return terms_.size(); }

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  bool is_homogeneous() const;
  Degree degree() const;
  unsigned degree_in(std::size_t var) const;
  /// Indices of variables that occur in some term.
  std::vector<std::size_t> support() const;

  Rational coefficient(const Monomial& m) const;
  /// Adds c*m to the polynomial.
  void add_term(const Monomial& m, const Rational& c);

  /// Largest term under the given order. Undefined for zero.
  std::pair<Monomial, Rational> leading_term(const MonomialOrder& order) const;

  Polynomial operator-() const;
  Polynomial& operator+=(const Polynomial& other);
  Polynomial& operator-=(const Polynomial& other);
  Polynomial& operator*=(const Rational& c);
  Polynomial& operator*=(const Polynomial& other);

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(Polynomial a, const Rational& c) { return a *= c; }
  friend Polynomial operator*(const Rational& c, Polynomial a) { return a *= c; }

  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    return a.ring_ == b.ring_ && a.terms_ == b.terms_;
  }

  Polynomial pow(unsigned e) const;

  std::complex<double> evaluate(const std::vector<std::complex<double>>& point) const;
  Rational evaluate(const std::vector<Rational>& point) const;

  /// Human-readable form, terms in descending graded reverse lexicographic order.
  std::string to_string() const;

 private:
  Ring ring_;
  TermMap terms_;
};

/// Returns q with q*g == f; throws InexactDivision otherwise.
Polynomial exact_divide(const Polynomial& f, const Polynomial& g);

/// Homogeneous component of the given degree.
Polynomial homogeneous_part(const Polynomial& f, unsigned degree);

/// Maximum degree form f*. Throws on zero input.
Polynomial top_form(const Polynomial& f);

/// Homogenization in ring + {t}. Throws when t already names a variable.
Polynomial homogenize(const Polynomial& f, const std::string& t);

/// Substitutes a rational value for one variable (ring unchanged).
Polynomial specialize(const Polynomial& f, std::size_t var, const Rational& value);

Polynomial derivative(const Polynomial& f, std::size_t var);

/// Re-expresses f in a ring containing all of its variables (matched by name).
Polynomial change_ring(const Polynomial& f, const Ring& target);

/// Primitive integer form with positive leading coefficient under grevlex.
/// Zero stays zero.
Polynomial normalize(const Polynomial& f);

/// Scales so the grevlex-leading coefficient is 1.
Polynomial make_monic(const Polynomial& f, const MonomialOrder& order);

/// f(Mx): variable i becomes sum_j M[i][j] x_j. Throws on singular M.
Polynomial substitute_linear(const Polynomial& f, const RationalMatrix& m);

}  // namespace bilip
