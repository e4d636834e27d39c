#ifndef NULLCONE_LINALG_HPP
#define NULLCONE_LINALG_HPP

// Dense exact linear algebra over the rationals.

#include "nullcone/rational.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace nullcone {

class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
  }

  static Matrix unit(std::size_t n, std::size_t i, std::size_t j) {
    Matrix m(n, n);
    m(i, j) = 1;
    return m;
  }

  static Matrix diagonal(std::span<const Rational> d) {
    Matrix m(d.size(), d.size());
    for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool square() const { return rows_ == cols_; }

  Rational& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Rational& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  std::span<const Rational> flat() const { return data_; }

  bool is_zero() const {
    return std::all_of(data_.begin(), data_.end(), [](const Rational& q) { return q == 0; });
  }

  Rational trace() const {
    Rational t = 0;
    for (std::size_t i = 0; i < std::min(rows_, cols_); ++i) t += (*this)(i, i);
    return t;
  }

  Matrix transpose() const {
    Matrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  bool is_upper_triangular() const {
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < std::min(i, cols_); ++j)
        if ((*this)(i, j) != 0) return false;
    return true;
  }

  bool is_strictly_upper_triangular() const {
    if (!is_upper_triangular()) return false;
    for (std::size_t i = 0; i < std::min(rows_, cols_); ++i)
      if ((*this)(i, i) != 0) return false;
    return true;
  }

  Matrix diagonal_part() const {
    Matrix d(rows_, cols_);
    for (std::size_t i = 0; i < std::min(rows_, cols_); ++i) d(i, i) = (*this)(i, i);
    return d;
  }

  Matrix& operator+=(const Matrix& o) {
    check_same(o);
    for (std::size_t k = 0; k < data_.size(); ++k) data_[k] += o.data_[k];
    return *this;
  }
  Matrix& operator-=(const Matrix& o) {
    check_same(o);
    for (std::size_t k = 0; k < data_.size(); ++k) data_[k] -= o.data_[k];
    return *this;
  }
  Matrix& operator*=(const Rational& s) {
    for (auto& q : data_) q *= s;
    return *this;
  }

  friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
  friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
  friend Matrix operator*(Matrix a, const Rational& s) { return a *= s; }
  friend Matrix operator*(const Rational& s, Matrix a) { return a *= s; }
  friend Matrix operator-(Matrix a) { return a *= Rational(-1); }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) throw std::invalid_argument("matrix product: shape mismatch");
    Matrix c(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const Rational& aik = a(i, k);
        if (aik == 0) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) c(i, j) += aik * b(k, j);
      }
    return c;
  }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

  friend bool operator<(const Matrix& a, const Matrix& b) {
    if (a.rows_ != b.rows_) return a.rows_ < b.rows_;
    if (a.cols_ != b.cols_) return a.cols_ < b.cols_;
    return std::lexicographical_compare(a.data_.begin(), a.data_.end(), b.data_.begin(),
                                        b.data_.end());
  }

  std::string str() const {
    std::string s = "[";
    for (std::size_t i = 0; i < rows_; ++i) {
      if (i) s += ";";
      for (std::size_t j = 0; j < cols_; ++j) {
        if (j) s += ",";
        s += (*this)(i, j).get_str();
      }
    }
    return s + "]";
  }

 private:
  void check_same(const Matrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("matrix shape mismatch");
  }

  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

inline Matrix commutator(const Matrix& a, const Matrix& b) { return a * b - b * a; }

inline Matrix power(const Matrix& a, unsigned k) {
  Matrix r = Matrix::identity(a.rows());
  for (unsigned i = 0; i < k; ++i) r = r * a;
  return r;
}

/// Columns of the result are the flattened inputs.
inline Matrix columns_of(std::span<const Matrix> vs) {
  if (vs.empty()) return {};
  const std::size_t len = vs.front().rows() * vs.front().cols();
  Matrix m(len, vs.size());
  for (std::size_t c = 0; c < vs.size(); ++c) {
    auto f = vs[c].flat();
    for (std::size_t r = 0; r < len; ++r) m(r, c) = f[r];
  }
  return m;
}

inline Matrix reshape(std::span<const Rational> v, std::size_t rows, std::size_t cols) {
  Matrix m(rows, cols);
  for (std::size_t k = 0; k < rows * cols; ++k) m(k / cols, k % cols) = v[k];
  return m;
}

/// Result of reduced row echelon form.
struct Echelon {
  Matrix reduced;
  std::vector<std::size_t> pivots;  // pivot column of each nonzero row
};

inline Echelon rref(Matrix m) {
  Echelon e;
  std::size_t row = 0;
  for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
    std::size_t p = row;
    while (p < m.rows() && m(p, col) == 0) ++p;
    if (p == m.rows()) continue;
    if (p != row)
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(p, j), m(row, j));
    const Rational inv = 1 / m(row, col);
    for (std::size_t j = col; j < m.cols(); ++j) m(row, j) *= inv;
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == row || m(i, col) == 0) continue;
      const Rational f = m(i, col);
      for (std::size_t j = col; j < m.cols(); ++j) m(i, j) -= f * m(row, j);
    }
    e.pivots.push_back(col);
    ++row;
  }
  e.reduced = std::move(m);
  return e;
}

/// Rank by fraction-free (Bareiss) elimination.
///
/// Each row is scaled to integers by the lcm of its denominators, so all
/// intermediate quantities stay integral.
inline std::size_t rank(const Matrix& m) {
  const std::size_t R = m.rows(), C = m.cols();
  std::vector<Integer> a(R * C);
  for (std::size_t i = 0; i < R; ++i) {
    Integer l = 1;
    for (std::size_t j = 0; j < C; ++j) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m(i, j).get_den_mpz_t());
    for (std::size_t j = 0; j < C; ++j) a[i * C + j] = m(i, j).get_num() * (l / m(i, j).get_den());
  }
  auto at = [&](std::size_t i, std::size_t j) -> Integer& { return a[i * C + j]; };
  Integer prev = 1;
  std::size_t r = 0;
  for (std::size_t col = 0; col < C && r < R; ++col) {
    std::size_t p = r;
    while (p < R && at(p, col) == 0) ++p;
    if (p == R) continue;
    if (p != r)
      for (std::size_t j = 0; j < C; ++j) std::swap(at(p, j), at(r, j));
    for (std::size_t i = r + 1; i < R; ++i) {
      for (std::size_t j = col + 1; j < C; ++j) {
        at(i, j) = at(r, col) * at(i, j) - at(i, col) * at(r, j);
        mpz_divexact(at(i, j).get_mpz_t(), at(i, j).get_mpz_t(), prev.get_mpz_t());
      }
      at(i, col) = 0;
    }
    prev = at(r, col);
    ++r;
  }
  return r;
}

inline Rational determinant(const Matrix& m) {
  if (!m.square()) throw std::invalid_argument("determinant of non-square matrix");
  const std::size_t n = m.rows();
  Matrix a = m;
  Rational det = 1;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t p = col;
    while (p < n && a(p, col) == 0) ++p;
    if (p == n) return 0;
    if (p != col) {
      for (std::size_t j = 0; j < n; ++j) std::swap(a(p, j), a(col, j));
      det = -det;
    }
    det *= a(col, col);
    for (std::size_t i = col + 1; i < n; ++i) {
      if (a(i, col) == 0) continue;
      const Rational f = a(i, col) / a(col, col);
      for (std::size_t j = col; j < n; ++j) a(i, j) -= f * a(col, j);
    }
  }
  return det;
}

/// Basis of the right kernel {v : m v = 0}, as column vectors.
inline std::vector<std::vector<Rational>> nullspace(const Matrix& m) {
  const Echelon e = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : e.pivots) is_pivot[p] = true;
  std::vector<std::vector<Rational>> basis;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    std::vector<Rational> v(m.cols());
    v[free] = 1;
    for (std::size_t r = 0; r < e.pivots.size(); ++r) v[e.pivots[r]] = -e.reduced(r, free);
    basis.push_back(std::move(v));
  }
  return basis;
}

/// Some solution of m x = b, or nullopt if inconsistent.
inline std::optional<std::vector<Rational>> solve(const Matrix& m, std::span<const Rational> b) {
  if (b.size() != m.rows()) throw std::invalid_argument("solve: rhs size mismatch");
  Matrix aug(m.rows(), m.cols() + 1);
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) aug(i, j) = m(i, j);
    aug(i, m.cols()) = b[i];
  }
  const Echelon e = rref(std::move(aug));
  if (!e.pivots.empty() && e.pivots.back() == m.cols()) return std::nullopt;
  std::vector<Rational> x(m.cols());
  for (std::size_t r = 0; r < e.pivots.size(); ++r) x[e.pivots[r]] = e.reduced(r, m.cols());
  return x;
}

inline Matrix inverse(const Matrix& m) {
  if (!m.square()) throw std::invalid_argument("inverse of non-square matrix");
  const std::size_t n = m.rows();
  Matrix aug(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
    aug(i, n + i) = 1;
  }
  const Echelon e = rref(std::move(aug));
  if (e.pivots.size() < n || e.pivots[n - 1] != n - 1) throw std::domain_error("singular matrix");
  Matrix inv(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv(i, j) = e.reduced(i, n + j);
  return inv;
}

/// Coefficients c_0..c_n of det(t I - m) = sum_k c_k t^(n-k), with c_0 = 1.
///
/// Faddeev-LeVerrier recursion; exact over the rationals.
inline std::vector<Rational> characteristic_coefficients(const Matrix& m) {
  if (!m.square()) throw std::invalid_argument("characteristic polynomial of non-square matrix");
  const std::size_t n = m.rows();
  // Similarity reduction to upper Hessenberg form.
  Matrix h = m;
  for (std::size_t j = 0; j + 2 < n; ++j) {
    std::size_t piv = j + 1;
    while (piv < n && h(piv, j) == 0) ++piv;
    if (piv == n) continue;
    if (piv != j + 1) {
      for (std::size_t k = 0; k < n; ++k) std::swap(h(piv, k), h(j + 1, k));
      for (std::size_t k = 0; k < n; ++k) std::swap(h(k, piv), h(k, j + 1));
    }
    for (std::size_t i = j + 2; i < n; ++i) {
      if (h(i, j) == 0) continue;
      const Rational u = h(i, j) / h(j + 1, j);
      for (std::size_t k = 0; k < n; ++k) h(i, k) -= u * h(j + 1, k);
      for (std::size_t k = 0; k < n; ++k) h(k, j + 1) += u * h(k, i);
    }
  }
  // p_k = (t - h_kk) p_{k-1} - sum_i h_ik (h_{i+1,i} ... h_{k,k-1}) p_{i-1}, ascending coefficients.
  std::vector<std::vector<Rational>> p(n + 1);
  p[0] = {Rational(1)};
  for (std::size_t k = 1; k <= n; ++k) {
    std::vector<Rational> next(k + 1);
    for (std::size_t d = 0; d < k; ++d) {
      next[d + 1] += p[k - 1][d];
      next[d] -= h(k - 1, k - 1) * p[k - 1][d];
    }
    Rational prod = 1;
    for (std::size_t i = k - 1; i-- > 0;) {
      prod *= h(i + 1, i);
      if (prod == 0) break;
      const Rational coef = h(i, k - 1) * prod;
      for (std::size_t d = 0; d < p[i].size(); ++d) next[d] -= coef * p[i][d];
    }
    p[k] = std::move(next);
  }
  std::vector<Rational> c(n + 1);
  for (std::size_t k = 0; k <= n; ++k) c[k] = p[n][n - k];
  return c;
}

/// Dimension of span of the given (flattened) vectors.
inline std::size_t span_dimension(std::span<const Matrix> vs) {
  if (vs.empty()) return 0;
  return rank(columns_of(vs));
}

/// A basis (subset-independent, reduced) of the span of the given matrices.
inline std::vector<Matrix> span_basis(std::span<const Matrix> vs) {
  if (vs.empty()) return {};
  const std::size_t r = vs.front().rows(), c = vs.front().cols();
  const Echelon e = rref(columns_of(vs).transpose());
  std::vector<Matrix> basis;
  for (std::size_t i = 0; i < e.pivots.size(); ++i) {
    std::vector<Rational> row(r * c);
    for (std::size_t k = 0; k < r * c; ++k) row[k] = e.reduced(i, k);
    basis.push_back(reshape(row, r, c));
  }
  return basis;
}

}  // namespace nullcone

#endif  // NULLCONE_LINALG_HPP
