#pragma once

#include <string>

#include "qpq/laurent.hpp"

namespace qpq {

/// Element of Q(t) as a quotient of Laurent polynomials. Construction cancels
/// common factors and normalizes the denominator for display, but equality is
/// defined by cross-multiplication, independent of representation.
class RationalFn {
 public:
  RationalFn() : num_(), den_(LaurentPoly::constant(1)) {}
  explicit RationalFn(LaurentPoly num) : num_(std::move(num)), den_(LaurentPoly::constant(1)) {}
  RationalFn(LaurentPoly num, LaurentPoly den);

  static RationalFn from_rational(const Rational& r) {
    return RationalFn(LaurentPoly::constant(r));
  }

  const LaurentPoly& num() const { return num_; }
  const LaurentPoly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }

  RationalFn operator+(const RationalFn& o) const;
  RationalFn operator-(const RationalFn& o) const;
  RationalFn operator*(const RationalFn& o) const;
  RationalFn operator/(const RationalFn& o) const;
  RationalFn operator-() const;
  bool operator==(const RationalFn& o) const;
  bool operator!=(const RationalFn& o) const { return !(*this == o); }

  RationalFn conjugate() const;  // t -> t^{-1}

  std::string str() const;

 private:
  LaurentPoly num_, den_;

  void reduce();
};

/// Element of the torsion quotient Q(t)/Q[t^{±1}], stored as the unique
/// proper-fraction representative r/d with d monic, d(0) != 0, gcd(r, d) = 1
/// and deg r < deg d. Zero iff the underlying rational function is itself a
/// Laurent polynomial. For the pairing values arising here this canonical
/// form is num(t)/(t^2 - t + 1) with deg num <= 1.
class TorsionPairingValue {
 public:
  TorsionPairingValue() = default;
  explicit TorsionPairingValue(const RationalFn& value);

  bool is_zero() const { return num_.is_zero(); }
  const LaurentPoly& num() const { return num_; }
  const LaurentPoly& den() const { return den_; }

  bool operator==(const TorsionPairingValue& o) const {
    return num_ == o.num_ && den_ == o.den_;
  }
  bool operator!=(const TorsionPairingValue& o) const { return !(*this == o); }

  TorsionPairingValue operator+(const TorsionPairingValue& o) const;
  TorsionPairingValue operator-(const TorsionPairingValue& o) const;
  TorsionPairingValue scaled(const Rational& c) const;
  TorsionPairingValue scaled(const LaurentPoly& p) const;
  TorsionPairingValue conjugate() const;

  std::string str() const;

 private:
  LaurentPoly num_;                              // zero for the trivial class
  LaurentPoly den_ = LaurentPoly::constant(1);

  RationalFn as_fn() const { return RationalFn(num_, den_); }
};

}  // namespace qpq
