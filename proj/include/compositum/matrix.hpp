#pragma once

#include <vector>

#include "compositum/polynomial.hpp"
#include "compositum/rational.hpp"

namespace compositum {

using RationalMatrix = std::vector<std::vector<Rational>>;

RationalMatrix identity_matrix(std::size_t n);
RationalMatrix multiply(const RationalMatrix& a, const RationalMatrix& b);
RationalMatrix transpose(const RationalMatrix& a);
bool is_symmetric(const RationalMatrix& a);

Rational determinant(RationalMatrix a);
std::size_t rank(RationalMatrix a);
Rational trace(const RationalMatrix& a);

/// det(x I - A), monic, by Berkowitz's division-free recurrence.
RationalPoly characteristic_polynomial(const RationalMatrix& a);

}  // namespace compositum
