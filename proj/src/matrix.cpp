#include "qpq/matrix.hpp"

namespace qpq {

RFMatrix to_rational_matrix(const LPMatrix& m) {
  RFMatrix r(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) r(i, j) = RationalFn(m(i, j));
  return r;
}

LaurentPoly lp_det(const LPMatrix& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("lp_det: not square");
  const std::size_t n = m.rows();
  if (n == 0) return LaurentPoly::constant(1);
  if (n == 1) return m(0, 0);
  LaurentPoly det;
  for (std::size_t j = 0; j < n; ++j) {
    if (m(0, j).is_zero()) continue;
    LPMatrix minor(n - 1, n - 1);
    for (std::size_t i = 1; i < n; ++i) {
      std::size_t cc = 0;
      for (std::size_t c = 0; c < n; ++c) {
        if (c == j) continue;
        minor(i - 1, cc++) = m(i, c);
      }
    }
    LaurentPoly term = m(0, j) * lp_det(minor);
    det = (j % 2 == 0) ? det + term : det - term;
  }
  return det;
}

RFMatrix matrix_inverse_rational(const LPMatrix& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("matrix_inverse_rational: not square");
  const std::size_t n = m.rows();
  RFMatrix a = to_rational_matrix(m);
  RFMatrix inv = RFMatrix::identity(n, RationalFn(LaurentPoly::constant(1)));
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && a(pivot, col).is_zero()) ++pivot;
    if (pivot == n) throw std::domain_error("matrix_inverse_rational: singular matrix");
    if (pivot != col) {
      for (std::size_t j = 0; j < n; ++j) {
        std::swap(a(pivot, j), a(col, j));
        std::swap(inv(pivot, j), inv(col, j));
      }
    }
    const RationalFn p = a(col, col);
    for (std::size_t j = 0; j < n; ++j) {
      a(col, j) = a(col, j) / p;
      inv(col, j) = inv(col, j) / p;
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (i == col || a(i, col).is_zero()) continue;
      const RationalFn f = a(i, col);
      for (std::size_t j = 0; j < n; ++j) {
        a(i, j) = a(i, j) - f * a(col, j);
        inv(i, j) = inv(i, j) - f * inv(col, j);
      }
    }
  }
  return inv;
}

}  // namespace qpq
