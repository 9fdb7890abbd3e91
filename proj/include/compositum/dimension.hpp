#pragma once

#include <vector>

#include "compositum/numberfield.hpp"

namespace compositum {

using FieldVector = std::vector<AlgebraicNumber>;

struct DimensionReport {
  std::size_t dim_l = 0;               // dim of the L-span
  std::size_t dim_q = 0;               // dim of the Q-span
  std::size_t dim_l_by_rank = 0;       // L-rank by elimination, a cross-check
  bool coefficients_rational = true;   // every Gram-Schmidt coefficient lies in Q
  /// Row i: u_i = sum_k coefficients[i][k] v_k (present when rational).
  std::vector<std::vector<Rational>> coefficients;
  std::vector<Rational> norms;          // B(u_i, u_i); zero for dependent steps

  bool dimensions_equal() const { return dim_l == dim_q && dim_l == dim_l_by_rank; }
};

/// Gram-Schmidt over L for B(x, y) = x^T F y with rational symmetric positive
/// definite F (identity when empty), given the claimed rational Gram matrix
/// of the vectors. Throws GramMismatch when the Gram matrix disagrees with B
/// or is not rational, NotPositiveDefinite when F or B on the span is not.
DimensionReport verify_dim_equality(const NumberFieldSpec& field,
                                    const std::vector<FieldVector>& vectors,
                                    const RationalMatrix& gram, const RationalMatrix& form = {});

/// Rank over L by Gaussian elimination.
std::size_t rank_over_field(const NumberFieldSpec& field, std::vector<FieldVector> rows);

}  // namespace compositum
