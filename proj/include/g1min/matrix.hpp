#pragma once

#include <initializer_list>
#include <optional>
#include <type_traits>
#include <utility>
#include <vector>

#include "g1min/arith.hpp"

namespace g1min {

inline bool is_zero(const Rat& x) { return x == 0; }
inline bool is_zero(const Fp& x) { return x.is_zero(); }
inline Rat field_inverse(const Rat& x) { return 1 / x; }
inline Fp field_inverse(const Fp& x) { return x.inv(); }

// Dense matrix over a field, row-major.
template <class T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(int rows, int cols, const T& zero) : r_(rows), c_(cols), zero_(zero), a_(rows * cols, zero) {}
  Matrix(std::initializer_list<std::initializer_list<T>> rows, const T& zero) : zero_(zero) {
    r_ = static_cast<int>(rows.size());
    c_ = r_ ? static_cast<int>(rows.begin()->size()) : 0;
    for (auto& row : rows)
      for (auto& x : row) a_.push_back(x);
  }

  static Matrix identity(int n, const T& zero, const T& one) {
    Matrix m(n, n, zero);
    for (int i = 0; i < n; ++i) m(i, i) = one;
    return m;
  }
  static Matrix diagonal(const std::vector<T>& d, const T& zero) {
    Matrix m(static_cast<int>(d.size()), static_cast<int>(d.size()), zero);
    for (size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
    return m;
  }

  int rows() const { return r_; }
  int cols() const { return c_; }
  const T& zero() const { return zero_; }
  T& operator()(int i, int j) { return a_[i * c_ + j]; }
  const T& operator()(int i, int j) const { return a_[i * c_ + j]; }

  friend bool operator==(const Matrix& x, const Matrix& y) {
    return x.r_ == y.r_ && x.c_ == y.c_ && x.a_ == y.a_;
  }

  friend Matrix operator*(const Matrix& x, const Matrix& y) {
    if (x.c_ != y.r_) throw Error(ErrorCode::DimensionMismatch, "matrix product");
    Matrix z(x.r_, y.c_, x.zero_);
    for (int i = 0; i < x.r_; ++i)
      for (int k = 0; k < x.c_; ++k) {
        if (is_zero(x(i, k))) continue;
        for (int j = 0; j < y.c_; ++j) z(i, j) += x(i, k) * y(k, j);
      }
    return z;
  }
  friend Matrix operator*(const T& s, const Matrix& x) {
    Matrix z = x;
    for (auto& e : z.a_) e = s * e;
    return z;
  }

  Matrix transpose() const {
    Matrix t(c_, r_, zero_);
    for (int i = 0; i < r_; ++i)
      for (int j = 0; j < c_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  T det() const {
    if (r_ != c_) throw Error(ErrorCode::DimensionMismatch, "det of non-square matrix");
    Matrix m = *this;
    T d = one_like();
    for (int col = 0; col < r_; ++col) {
      int piv = -1;
      for (int i = col; i < r_; ++i)
        if (!is_zero(m(i, col))) { piv = i; break; }
      if (piv < 0) return zero_;
      if (piv != col) {
        m.swap_rows(piv, col);
        d = zero_ - d;
      }
      d = d * m(col, col);
      T inv = field_inverse(m(col, col));
      for (int i = col + 1; i < r_; ++i) {
        if (is_zero(m(i, col))) continue;
        T f = m(i, col) * inv;
        for (int j = col; j < c_; ++j) m(i, j) -= f * m(col, j);
      }
    }
    return d;
  }

  std::optional<Matrix> inverse() const {
    if (r_ != c_) throw Error(ErrorCode::DimensionMismatch, "inverse of non-square matrix");
    int n = r_;
    Matrix m = *this;
    Matrix inv = identity(n, zero_, one_like());
    for (int col = 0; col < n; ++col) {
      int piv = -1;
      for (int i = col; i < n; ++i)
        if (!is_zero(m(i, col))) { piv = i; break; }
      if (piv < 0) return std::nullopt;
      m.swap_rows(piv, col);
      inv.swap_rows(piv, col);
      T s = field_inverse(m(col, col));
      for (int j = 0; j < n; ++j) {
        m(col, j) = m(col, j) * s;
        inv(col, j) = inv(col, j) * s;
      }
      for (int i = 0; i < n; ++i) {
        if (i == col || is_zero(m(i, col))) continue;
        T f = m(i, col);
        for (int j = 0; j < n; ++j) {
          m(i, j) -= f * m(col, j);
          inv(i, j) -= f * inv(col, j);
        }
      }
    }
    return inv;
  }

  // Reduced row echelon form; returns pivot columns.
  std::vector<int> rref() {
    std::vector<int> pivots;
    int row = 0;
    for (int col = 0; col < c_ && row < r_; ++col) {
      int piv = -1;
      for (int i = row; i < r_; ++i)
        if (!is_zero((*this)(i, col))) { piv = i; break; }
      if (piv < 0) continue;
      swap_rows(piv, row);
      T s = field_inverse((*this)(row, col));
      for (int j = 0; j < c_; ++j) (*this)(row, j) = (*this)(row, j) * s;
      for (int i = 0; i < r_; ++i) {
        if (i == row || is_zero((*this)(i, col))) continue;
        T f = (*this)(i, col);
        for (int j = 0; j < c_; ++j) (*this)(i, j) -= f * (*this)(row, j);
      }
      pivots.push_back(col);
      ++row;
    }
    return pivots;
  }

  int rank() const {
    Matrix m = *this;
    return static_cast<int>(m.rref().size());
  }

  // Basis of the right kernel {v : M v = 0}, as column vectors.
  std::vector<std::vector<T>> kernel() const {
    Matrix m = *this;
    auto piv = m.rref();
    std::vector<bool> is_piv(c_, false);
    for (int c : piv) is_piv[c] = true;
    std::vector<std::vector<T>> basis;
    for (int free = 0; free < c_; ++free) {
      if (is_piv[free]) continue;
      std::vector<T> v(c_, zero_);
      v[free] = one_like();
      for (size_t k = 0; k < piv.size(); ++k) v[piv[k]] = zero_ - m(static_cast<int>(k), free);
      basis.push_back(v);
    }
    return basis;
  }

  void swap_rows(int i, int j) {
    if (i == j) return;
    for (int k = 0; k < c_; ++k) std::swap((*this)(i, k), (*this)(j, k));
  }

  T one_like() const {
    if constexpr (std::is_same_v<T, Fp>) {
      return Fp(1, zero_.p);
    } else {
      return T(1);
    }
  }

 private:
  int r_ = 0, c_ = 0;
  T zero_{};
  std::vector<T> a_;
};

using RatMatrix = Matrix<Rat>;
using FpMatrix = Matrix<Fp>;

inline RatMatrix rat_identity(int n) { return RatMatrix::identity(n, Rat(0), Rat(1)); }
inline RatMatrix rat_zero(int r, int c) { return RatMatrix(r, c, Rat(0)); }
inline RatMatrix rat_diag(const std::vector<Rat>& d) { return RatMatrix::diagonal(d, Rat(0)); }
inline FpMatrix fp_zero(int r, int c, long p) { return FpMatrix(r, c, Fp(0, p)); }
inline FpMatrix fp_identity(int n, long p) { return FpMatrix::identity(n, Fp(0, p), Fp(1, p)); }

inline RatMatrix rat_inverse(const RatMatrix& m) {
  auto inv = m.inverse();
  if (!inv) throw Error(ErrorCode::SingularInput, "singular matrix");
  return *inv;
}

// Entrywise lift of a matrix over F_p to integers in [0, p).
inline RatMatrix lift(const FpMatrix& m) {
  RatMatrix r = rat_zero(m.rows(), m.cols());
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) r(i, j) = m(i, j).v;
  return r;
}

inline FpMatrix reduce(const RatMatrix& m, const LocalContext& ctx) {
  FpMatrix r = fp_zero(m.rows(), m.cols(), ctx.p());
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) r(i, j) = Fp(residue_small(m(i, j), ctx), ctx.p());
  return r;
}

}  // namespace g1min
