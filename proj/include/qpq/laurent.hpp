#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <utility>

#include "qpq/rational.hpp"

namespace qpq {

/// Sparse Laurent polynomial over the rationals: a finite map from integer
/// exponents to nonzero coefficients. Zero coefficients are pruned eagerly,
/// so representation equality is value equality.
class LaurentPoly {
 public:
  LaurentPoly() = default;

  static LaurentPoly constant(const Rational& c);
  static LaurentPoly term(const Rational& c, long exp);
  static LaurentPoly variable();  // t

  bool is_zero() const { return coeffs_.empty(); }
  const std::map<long, Rational>& terms() const { return coeffs_; }
  Rational coeff(long exp) const;

  // Both require a nonzero polynomial.
  long min_exp() const;
  long max_exp() const;

  bool is_polynomial() const { return coeffs_.empty() || min_exp() >= 0; }
  /// Degree as an ordinary polynomial; -1 for zero. Requires min_exp() >= 0.
  long degree() const;

  LaurentPoly operator+(const LaurentPoly& o) const;
  LaurentPoly operator-(const LaurentPoly& o) const;
  LaurentPoly operator*(const LaurentPoly& o) const;
  LaurentPoly operator-() const;
  bool operator==(const LaurentPoly& o) const { return coeffs_ == o.coeffs_; }
  bool operator!=(const LaurentPoly& o) const { return !(*this == o); }

  /// The involution t -> t^{-1}.
  LaurentPoly conjugate() const;

  /// The substitution t -> t^w; rejects w = 0.
  LaurentPoly substitute_power(long w) const;

  /// Multiply by t^k.
  LaurentPoly shifted(long k) const;

  LaurentPoly scaled(const Rational& c) const;

  /// Unique associate under multiplication by units c*t^k of Q[t^{±1}]:
  /// min exponent 0 and leading coefficient 1. Zero maps to zero.
  LaurentPoly unit_normalized() const;

  /// Canonical text form, terms sorted by ascending exponent,
  /// e.g. `-1*t^-1 + 2 + 3*t^2`.
  std::string str() const;

 private:
  std::map<long, Rational> coeffs_;

  void set(long exp, Rational c);
};

/// Polynomial division with remainder over Q[t]. Both operands must have
/// min_exp >= 0 and b must be nonzero. Returns (quotient, remainder) with
/// deg r < deg b.
std::pair<LaurentPoly, LaurentPoly> poly_divmod(const LaurentPoly& a,
                                                const LaurentPoly& b);

/// Monic gcd in Q[t]; both operands must have min_exp >= 0.
LaurentPoly poly_gcd(LaurentPoly a, LaurentPoly b);

}  // namespace qpq
