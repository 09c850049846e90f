#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

namespace bilip {

/// Exact rational in lowest terms; GMP keeps mpq values canonical.
using Rational = mpq_class;
using Integer = mpz_class;

/// Dense univariate integer polynomial; index i holds the coefficient of t^i.
using IntPoly = std::vector<Integer>;

Rational make_rational(const Integer& num, const Integer& den);

std::string to_string(const Rational& q);

/// Square matrix over Q, row-major.
using RationalMatrix = std::vector<std::vector<Rational>>;

RationalMatrix identity_matrix(std::size_t n);

/// Inverse by Gauss-Jordan; empty result when the matrix is singular or not square.
RationalMatrix inverse(const RationalMatrix& m);

RationalMatrix multiply(const RationalMatrix& a, const RationalMatrix& b);

}  // namespace bilip
