#include "compositum/dimension.hpp"

#include "compositum/error.hpp"

namespace compositum {

namespace {

AlgebraicNumber bilinear(const NumberFieldSpec& field, const RationalMatrix& f,
                         const FieldVector& x, const FieldVector& y) {
  AlgebraicNumber acc(field, Rational(0));
  for (std::size_t i = 0; i < x.size(); ++i) {
    for (std::size_t j = 0; j < y.size(); ++j) {
      if (f[i][j] != 0) acc = acc + f[i][j] * (x[i] * y[j]);
    }
  }
  return acc;
}

bool is_zero_vector(const FieldVector& v) {
  for (const auto& x : v) {
    if (!x.is_zero()) return false;
  }
  return true;
}

void require_positive_definite(const RationalMatrix& f) {
  if (!is_symmetric(f)) fail(ErrorKind::NotPositiveDefinite, "form matrix is not symmetric");
  for (std::size_t k = 1; k <= f.size(); ++k) {
    RationalMatrix minor(k, std::vector<Rational>(k));
    for (std::size_t i = 0; i < k; ++i) {
      for (std::size_t j = 0; j < k; ++j) minor[i][j] = f[i][j];
    }
    if (determinant(std::move(minor)) <= 0) {
      fail(ErrorKind::NotPositiveDefinite, "leading minor " + std::to_string(k) + " is not positive");
    }
  }
}

}  // namespace

std::size_t rank_over_field(const NumberFieldSpec& field, std::vector<FieldVector> rows) {
  if (rows.empty()) return 0;
  const std::size_t cols = rows[0].size();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows.size(); ++c) {
    std::size_t pivot = r;
    while (pivot < rows.size() && rows[pivot][c].is_zero()) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[pivot], rows[r]);
    const AlgebraicNumber inv = rows[r][c].inverse();
    for (std::size_t i = r + 1; i < rows.size(); ++i) {
      if (rows[i][c].is_zero()) continue;
      const AlgebraicNumber f = rows[i][c] * inv;
      for (std::size_t j = c; j < cols; ++j) rows[i][j] = rows[i][j] - f * rows[r][j];
    }
    ++r;
  }
  (void)field;
  return r;
}

DimensionReport verify_dim_equality(const NumberFieldSpec& field,
                                    const std::vector<FieldVector>& vectors,
                                    const RationalMatrix& gram, const RationalMatrix& form) {
  const std::size_t n = vectors.size();
  const std::size_t m = n ? vectors[0].size() : 0;
  for (const auto& v : vectors) {
    if (v.size() != m) fail(ErrorKind::PreconditionFailed, "vectors of different lengths");
    for (const auto& x : v) {
      if (!(x.field() == field)) fail(ErrorKind::FieldMismatch, "coordinate from another field");
    }
  }
  const RationalMatrix f = form.empty() ? identity_matrix(m) : form;
  if (f.size() != m) fail(ErrorKind::PreconditionFailed, "form matrix has the wrong size");
  require_positive_definite(f);
  if (gram.size() != n) fail(ErrorKind::GramMismatch, "Gram matrix has the wrong size");
  for (std::size_t i = 0; i < n; ++i) {
    if (gram[i].size() != n) fail(ErrorKind::GramMismatch, "Gram matrix is not square");
    for (std::size_t j = 0; j < n; ++j) {
      const AlgebraicNumber b = bilinear(field, f, vectors[i], vectors[j]);
      if (!b.is_rational() || b.rational_value() != gram[i][j]) {
        fail(ErrorKind::GramMismatch, "B(v_" + std::to_string(i + 1) + ", v_" +
                                          std::to_string(j + 1) + ") = " + b.to_string() +
                                          " differs from the Gram entry " + to_string(gram[i][j]));
      }
    }
  }

  DimensionReport rep;
  const AlgebraicNumber zero(field, Rational(0));
  std::vector<FieldVector> u;                       // orthogonalized vectors
  std::vector<std::vector<AlgebraicNumber>> coeff;  // u_i in terms of v
  std::vector<AlgebraicNumber> norm;
  for (std::size_t i = 0; i < n; ++i) {
    FieldVector ui = vectors[i];
    std::vector<AlgebraicNumber> ci(n, zero);
    ci[i] = AlgebraicNumber(field, Rational(1));
    for (std::size_t j = 0; j < i; ++j) {
      if (norm[j].is_zero()) continue;
      const AlgebraicNumber mu = bilinear(field, f, vectors[i], u[j]) / norm[j];
      if (!mu.is_rational()) rep.coefficients_rational = false;
      for (std::size_t k = 0; k < m; ++k) ui[k] = ui[k] - mu * u[j][k];
      for (std::size_t k = 0; k < n; ++k) ci[k] = ci[k] - mu * coeff[j][k];
    }
    AlgebraicNumber b = bilinear(field, f, ui, ui);
    if (is_zero_vector(ui)) {
      b = zero;
    } else if (!b.is_rational() || b.rational_value() <= 0) {
      fail(ErrorKind::NotPositiveDefinite, "B(u_" + std::to_string(i + 1) + ", u_" +
                                               std::to_string(i + 1) + ") = " + b.to_string());
    } else {
      ++rep.dim_l;
    }
    u.push_back(std::move(ui));
    coeff.push_back(std::move(ci));
    norm.push_back(b);
  }

  for (std::size_t i = 0; i < n; ++i) {
    std::vector<Rational> row;
    for (const auto& c : coeff[i]) {
      if (!c.is_rational()) rep.coefficients_rational = false;
      row.push_back(c.rational_value());
    }
    rep.coefficients.push_back(std::move(row));
    rep.norms.push_back(norm[i].rational_value());
  }
  if (!rep.coefficients_rational) rep.coefficients.clear();

  RationalMatrix flat;
  for (const auto& v : vectors) {
    std::vector<Rational> row;
    for (const auto& x : v) {
      const auto c = x.coordinates();
      row.insert(row.end(), c.begin(), c.end());
    }
    flat.push_back(std::move(row));
  }
  rep.dim_q = rank(std::move(flat));
  rep.dim_l_by_rank = rank_over_field(field, vectors);
  return rep;
}

}  // namespace compositum
