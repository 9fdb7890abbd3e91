#include "compositum/matrix.hpp"

#include "compositum/error.hpp"

namespace compositum {

RationalMatrix identity_matrix(std::size_t n) {
  RationalMatrix m(n, std::vector<Rational>(n));
  for (std::size_t i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

RationalMatrix multiply(const RationalMatrix& a, const RationalMatrix& b) {
  const std::size_t n = a.size(), k = b.size(), m = b.empty() ? 0 : b[0].size();
  RationalMatrix c(n, std::vector<Rational>(m));
  for (std::size_t i = 0; i < n; ++i) {
    if (a[i].size() != k) fail(ErrorKind::PreconditionFailed, "matrix shape mismatch");
    for (std::size_t l = 0; l < k; ++l) {
      if (a[i][l] == 0) continue;
      for (std::size_t j = 0; j < m; ++j) c[i][j] += a[i][l] * b[l][j];
    }
  }
  return c;
}

RationalMatrix transpose(const RationalMatrix& a) {
  if (a.empty()) return a;
  RationalMatrix t(a[0].size(), std::vector<Rational>(a.size()));
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < a[i].size(); ++j) t[j][i] = a[i][j];
  }
  return t;
}

bool is_symmetric(const RationalMatrix& a) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].size() != a.size()) return false;
    for (std::size_t j = 0; j < i; ++j) {
      if (a[i][j] != a[j][i]) return false;
    }
  }
  return true;
}

Rational determinant(RationalMatrix a) {
  const std::size_t n = a.size();
  Rational det = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t pivot = c;
    while (pivot < n && a[pivot][c] == 0) ++pivot;
    if (pivot == n) return 0;
    if (pivot != c) {
      std::swap(a[pivot], a[c]);
      det = -det;
    }
    det *= a[c][c];
    for (std::size_t r = c + 1; r < n; ++r) {
      if (a[r][c] == 0) continue;
      const Rational f = a[r][c] / a[c][c];
      for (std::size_t j = c; j < n; ++j) a[r][j] -= f * a[c][j];
    }
  }
  return det;
}

std::size_t rank(RationalMatrix a) {
  if (a.empty()) return 0;
  const std::size_t rows = a.size(), cols = a[0].size();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t pivot = r;
    while (pivot < rows && a[pivot][c] == 0) ++pivot;
    if (pivot == rows) continue;
    std::swap(a[pivot], a[r]);
    for (std::size_t i = r + 1; i < rows; ++i) {
      if (a[i][c] == 0) continue;
      const Rational f = a[i][c] / a[r][c];
      for (std::size_t j = c; j < cols; ++j) a[i][j] -= f * a[r][j];
    }
    ++r;
  }
  return r;
}

Rational trace(const RationalMatrix& a) {
  Rational t = 0;
  for (std::size_t i = 0; i < a.size(); ++i) t += a[i][i];
  return t;
}

RationalPoly characteristic_polynomial(const RationalMatrix& a) {
  const std::size_t n = a.size();
  // v holds the coefficients (high to low) of the characteristic polynomial
  // of the leading r x r block.
  std::vector<Rational> v{Rational(1)};
  for (std::size_t r = 0; r < n; ++r) {
    // Partition the leading (r+1) block as [[A, R], [C, a_rr]].
    std::vector<Rational> col(r), row(r);
    for (std::size_t i = 0; i < r; ++i) {
      row[i] = a[r][i];
      col[i] = a[i][r];
    }
    // Toeplitz column: 1, -a_rr, -R C, -R A C, ...
    std::vector<Rational> t(r + 2);
    t[0] = 1;
    t[1] = -a[r][r];
    std::vector<Rational> power = col;  // A^k C
    for (std::size_t k = 2; k < r + 2; ++k) {
      Rational dot = 0;
      for (std::size_t i = 0; i < r; ++i) dot += row[i] * power[i];
      t[k] = -dot;
      std::vector<Rational> next(r);
      for (std::size_t i = 0; i < r; ++i) {
        for (std::size_t j = 0; j < r; ++j) next[i] += a[i][j] * power[j];
      }
      power = std::move(next);
    }
    std::vector<Rational> w(r + 2);
    for (std::size_t i = 0; i < r + 2; ++i) {
      for (std::size_t j = 0; j <= i && j < v.size(); ++j) w[i] += t[i - j] * v[j];
    }
    v = std::move(w);
  }
  return RationalPoly(std::vector<Rational>(v.rbegin(), v.rend()));
}

}  // namespace compositum
