#pragma once

#include <vector>

#include "bilip/polynomial.hpp"

namespace bilip {

/// Greatest common divisor, normalized (primitive, positive grevlex-leading
/// coefficient). gcd(f, 0) = normalize(f).
Polynomial gcd(const Polynomial& f, const Polynomial& g);

/// Content of f viewed as a polynomial in `var` with coefficients in the
/// remaining variables; normalized.
Polynomial content_in(const Polynomial& f, std::size_t var);

struct SquarefreeFactor {
  Polynomial factor;
  unsigned exponent;
};

/// f = c * prod factor_i^exponent_i with factors squarefree, pairwise coprime,
/// normalized and exponents distinct, sorted ascending. Throws on constant input.
std::vector<SquarefreeFactor> squarefree_decomposition(const Polynomial& f);

/// Product of the distinct factors of f, normalized. Throws on constant input.
Polynomial squarefree_part(const Polynomial& f);

}  // namespace bilip
