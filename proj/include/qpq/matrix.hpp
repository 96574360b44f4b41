#pragma once

#include <cstddef>
#include <stdexcept>
#include <vector>

#include "qpq/laurent.hpp"
#include "qpq/rational_fn.hpp"

namespace qpq {

/// Dense matrix, sized for the handful-of-generators presentations that
/// occur here (nothing larger than 8x8).
template <class T>
class Mat {
 public:
  Mat() = default;
  Mat(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols) {}

  static Mat identity(std::size_t n, const T& one) {
    Mat m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = one;
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const T& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }
  bool operator==(const Mat& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
  }

  Mat operator*(const Mat& o) const {
    if (cols_ != o.rows_) throw std::invalid_argument("Mat: shape mismatch");
    Mat r(rows_, o.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t k = 0; k < cols_; ++k)
        for (std::size_t j = 0; j < o.cols_; ++j)
          r(i, j) = r(i, j) + (*this)(i, k) * o(k, j);
    return r;
  }

  Mat transpose() const {
    Mat r(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) r(j, i) = (*this)(i, j);
    return r;
  }

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<T> data_;
};

using LPMatrix = Mat<LaurentPoly>;
using RFMatrix = Mat<RationalFn>;

RFMatrix to_rational_matrix(const LPMatrix& m);

/// Cofactor-expansion determinant; fine at this scale.
LaurentPoly lp_det(const LPMatrix& m);

/// Exact inverse over Q(t) by Gauss-Jordan elimination; throws
/// std::domain_error on a singular matrix (non-Alexander presentation).
RFMatrix matrix_inverse_rational(const LPMatrix& m);

}  // namespace qpq
