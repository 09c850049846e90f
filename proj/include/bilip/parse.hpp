#pragma once

#include <string_view>
#include <vector>

#include "bilip/polynomial.hpp"

namespace bilip {

/// Contents of an input file: the ambient ring and the generators.
struct ParsedInput {
  Ring ring;
  std::vector<Polynomial> polynomials;
};

/// Parses one polynomial, e.g. "x^2*y - 3/2*x + 1". The `*` is optional.
/// Identifiers must belong to the ring.
Polynomial parse_polynomial(std::string_view text, const Ring& ring);

/// Parses the input file format:
///
///   # comment
///   vars: x, y, z        (optional; otherwise variables are sorted by name)
///   x*y - 1              (one generator per line, or several separated by ';')
///
/// Errors carry 1-based line and column.
ParsedInput parse_input(std::string_view text);

}  // namespace bilip
