#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "bform/scalar.hpp"

namespace bform {

/// Dense matrix over an exact field (Scalar in practice; any type with
/// +,-,*,/ and is_zero works). Small sizes only, row-major.
template <class F>
class Mat {
 public:
  Mat() : rows_(0), cols_(0) {}
  Mat(std::size_t r, std::size_t c) : rows_(r), cols_(c), a_(r * c) {}

  static Mat identity(std::size_t n) {
    Mat m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = F(1);
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  F& operator()(std::size_t r, std::size_t c) { return a_[r * cols_ + c]; }
  const F& operator()(std::size_t r, std::size_t c) const { return a_[r * cols_ + c]; }

  friend bool operator==(const Mat& x, const Mat& y) {
    return x.rows_ == y.rows_ && x.cols_ == y.cols_ && x.a_ == y.a_;
  }
  friend bool operator!=(const Mat& x, const Mat& y) { return !(x == y); }

  Mat operator+(const Mat& o) const {
    Mat r = *this;
    for (std::size_t k = 0; k < a_.size(); ++k) r.a_[k] += o.a_[k];
    return r;
  }
  Mat operator-(const Mat& o) const {
    Mat r = *this;
    for (std::size_t k = 0; k < a_.size(); ++k) r.a_[k] -= o.a_[k];
    return r;
  }
  Mat operator-() const {
    Mat r = *this;
    for (auto& v : r.a_) v = -v;
    return r;
  }
  Mat operator*(const Mat& o) const {
    if (cols_ != o.rows_) throw error("Mat: shape mismatch in product");
    Mat r(rows_, o.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t k = 0; k < cols_; ++k) {
        const F& v = (*this)(i, k);
        if (v.is_zero()) continue;
        for (std::size_t j = 0; j < o.cols_; ++j) r(i, j) += v * o(k, j);
      }
    return r;
  }
  Mat scaled(const F& s) const {
    Mat r = *this;
    for (auto& v : r.a_) v = v * s;
    return r;
  }

  std::vector<F> apply(const std::vector<F>& x) const {
    if (x.size() != cols_) throw error("Mat: shape mismatch in apply");
    std::vector<F> y(rows_, F(0));
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j)
        if (!(*this)(i, j).is_zero()) y[i] += (*this)(i, j) * x[j];
    return y;
  }

  Mat transpose() const {
    Mat r(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) r(j, i) = (*this)(i, j);
    return r;
  }

  bool is_zero() const {
    for (const auto& v : a_)
      if (!v.is_zero()) return false;
    return true;
  }

  // Reduced row echelon form in place; returns the pivot columns in order.
  std::vector<std::size_t> rref() {
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t col = 0; col < cols_ && row < rows_; ++col) {
      std::size_t sel = row;
      while (sel < rows_ && (*this)(sel, col).is_zero()) ++sel;
      if (sel == rows_) continue;
      if (sel != row)
        for (std::size_t j = 0; j < cols_; ++j)
          std::swap((*this)(sel, j), (*this)(row, j));
      F p = (*this)(row, col);
      for (std::size_t j = col; j < cols_; ++j) (*this)(row, j) = (*this)(row, j) / p;
      for (std::size_t i = 0; i < rows_; ++i) {
        if (i == row) continue;
        F f = (*this)(i, col);
        if (f.is_zero()) continue;
        for (std::size_t j = col; j < cols_; ++j)
          (*this)(i, j) -= f * (*this)(row, j);
      }
      pivots.push_back(col);
      ++row;
    }
    return pivots;
  }

  std::size_t rank() const {
    Mat tmp = *this;
    return tmp.rref().size();
  }

  // Basis of the right kernel, one row per basis vector.
  Mat kernel() const {
    Mat r = *this;
    std::vector<std::size_t> pivots = r.rref();
    std::vector<bool> is_pivot(cols_, false);
    for (auto p : pivots) is_pivot[p] = true;
    Mat ker(cols_ - pivots.size(), cols_);
    std::size_t kr = 0;
    for (std::size_t free = 0; free < cols_; ++free) {
      if (is_pivot[free]) continue;
      ker(kr, free) = F(1);
      for (std::size_t pi = 0; pi < pivots.size(); ++pi)
        ker(kr, pivots[pi]) = -r(pi, free);
      ++kr;
    }
    return ker;
  }

  F det() const {
    if (rows_ != cols_) throw error("Mat: det of non-square matrix");
    Mat m = *this;
    F d(1);
    for (std::size_t col = 0; col < cols_; ++col) {
      std::size_t sel = col;
      while (sel < rows_ && m(sel, col).is_zero()) ++sel;
      if (sel == rows_) return F(0);
      if (sel != col) {
        for (std::size_t j = 0; j < cols_; ++j) std::swap(m(sel, j), m(col, j));
        d = -d;
      }
      d = d * m(col, col);
      F p = m(col, col);
      for (std::size_t i = col + 1; i < rows_; ++i) {
        F f = m(i, col) / p;
        if (f.is_zero()) continue;
        for (std::size_t j = col; j < cols_; ++j) m(i, j) -= f * m(col, j);
      }
    }
    return d;
  }

  std::optional<Mat> inverse() const {
    if (rows_ != cols_) throw error("Mat: inverse of non-square matrix");
    Mat aug(rows_, 2 * cols_);
    for (std::size_t i = 0; i < rows_; ++i) {
      for (std::size_t j = 0; j < cols_; ++j) aug(i, j) = (*this)(i, j);
      aug(i, cols_ + i) = F(1);
    }
    if (aug.rref().size() != rows_) return std::nullopt;
    Mat inv(rows_, cols_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) inv(i, j) = aug(i, cols_ + j);
    return inv;
  }

 private:
  std::size_t rows_, cols_;
  std::vector<F> a_;
};

using SMat = Mat<Scalar>;

inline SMat conj(const SMat& m) {
  SMat r(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) r(i, j) = m(i, j).conj();
  return r;
}

inline SMat conj_transpose(const SMat& m) { return conj(m).transpose(); }

inline bool is_real(const SMat& m) {
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      if (m(i, j).im != 0) return false;
  return true;
}

/// Definiteness of a Hermitian matrix by exact LDL* pivots. Pivot k equals
/// minor_k / minor_{k-1}, so the pivot signs carry exactly the leading
/// principal minor sign data. On failure `witness` is a vector w with
/// w* H w = pivot <= 0 (or an isotropic direction when a pivot vanishes).
struct Definiteness {
  bool positive = false;
  bool negative = false;
  std::vector<Scalar> witness;  // nonempty iff not definite of the asked sign
  Rational witness_value = 0;   // w* H w for the witness
};

inline Definiteness check_definite(const SMat& h, bool want_positive) {
  const std::size_t n = h.rows();
  Definiteness out;
  SMat m = want_positive ? h : -h;  // test positive-definiteness of m
  // basis[k] = coordinates of the k-th LDL basis vector in the original basis
  SMat basis = SMat::identity(n);
  for (std::size_t k = 0; k < n; ++k) {
    Scalar pivot = m(k, k);
    if (pivot.im != 0) throw error("check_definite: matrix is not Hermitian");
    if (pivot.re <= 0) {
      // m = B H B^*, so m(k,k) = w^* H w for w = conj(basis row k).
      out.witness.assign(n, Scalar(0));
      for (std::size_t j = 0; j < n; ++j) out.witness[j] = basis(k, j).conj();
      out.witness_value = want_positive ? pivot.re : -pivot.re;
      return out;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      Scalar f = m(i, k) / pivot;
      if (f.is_zero()) continue;
      for (std::size_t j = 0; j < n; ++j) {
        m(i, j) -= f * m(k, j);
        basis(i, j) -= f * basis(k, j);
      }
      for (std::size_t r = 0; r < n; ++r) m(r, i) -= f.conj() * m(r, k);
    }
  }
  out.positive = want_positive;
  out.negative = !want_positive;
  return out;
}

}  // namespace bform
