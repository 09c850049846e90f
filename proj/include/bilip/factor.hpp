#pragma once

#include <vector>

#include "bilip/polynomial.hpp"

namespace bilip {

/// Irreducible factors over Q of a squarefree primitive integer polynomial of
/// positive degree (Zassenhaus: factor mod p, Hensel lift, recombine).
/// Factors are primitive with positive leading coefficient, sorted by degree
/// and then coefficients.
std::vector<IntPoly> factor_univariate(const IntPoly& f);

struct FormFactor {
  Polynomial factor;
  /// False when the factor could not be certified irreducible over Q.
  bool verified = true;
};

/// Splits a squarefree homogeneous polynomial into factors over Q. Forms in at
/// most three effective variables are factored completely; with more variables
/// monomial factors are split off and the rest is certified irreducible through
/// a generic three-dimensional section when possible, otherwise returned as one
/// unverified factor. Factors are normalized and sorted by degree.
std::vector<FormFactor> factor_form(const Polynomial& h);

/// f with variable var replaced by var + shift.
Polynomial shift_variable(const Polynomial& f, std::size_t var, const Rational& shift);

/// Restriction along a linear map: variable i of f becomes
/// sum_j a[i][j] * target_j. The matrix has f.ring().size() rows and
/// target.size() columns.
Polynomial compose_linear(const Polynomial& f, const RationalMatrix& a, const Ring& target);

}  // namespace bilip
