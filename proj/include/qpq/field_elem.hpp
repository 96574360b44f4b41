#pragma once

#include <string>

#include "qpq/laurent.hpp"
#include "qpq/rational.hpp"

namespace qpq {

/// Element c0 + c1*t of the field F = Q[t]/(t^2 - t + 1). The defining
/// relation gives t^2 = t - 1 and t^{-1} = 1 - t; conjugation t -> t^{-1}
/// is therefore t -> 1 - t.
class FieldElem {
 public:
  FieldElem() = default;
  FieldElem(Rational c0, Rational c1) : c0_(std::move(c0)), c1_(std::move(c1)) {}

  static FieldElem zero() { return {}; }
  static FieldElem one() { return {1, 0}; }
  static FieldElem t() { return {0, 1}; }

  /// Reduce an arbitrary Laurent polynomial modulo t^2 - t + 1.
  static FieldElem from_laurent(const LaurentPoly& p);

  const Rational& c0() const { return c0_; }
  const Rational& c1() const { return c1_; }
  bool is_zero() const { return c0_ == 0 && c1_ == 0; }

  FieldElem operator+(const FieldElem& o) const { return {c0_ + o.c0_, c1_ + o.c1_}; }
  FieldElem operator-(const FieldElem& o) const { return {c0_ - o.c0_, c1_ - o.c1_}; }
  FieldElem operator-() const { return {-c0_, -c1_}; }
  FieldElem operator*(const FieldElem& o) const;
  bool operator==(const FieldElem& o) const { return c0_ == o.c0_ && c1_ == o.c1_; }
  bool operator!=(const FieldElem& o) const { return !(*this == o); }

  FieldElem conjugate() const { return {c0_ + c1_, -c1_}; }

  /// Rational norm (c0 + c1 t)(c0 + c1 (1-t)) = c0^2 + c0 c1 + c1^2.
  Rational norm() const { return c0_ * c0_ + c0_ * c1_ + c1_ * c1_; }

  /// Multiplicative inverse; throws on zero (degenerate module element).
  FieldElem inverse() const;

  /// Canonical degree-<=1 representative in Q[t^{±1}].
  LaurentPoly to_laurent() const;

  /// `c0 + c1*t` with exact rationals.
  std::string str() const;

 private:
  Rational c0_{0}, c1_{0};
};

}  // namespace qpq
