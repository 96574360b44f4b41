#include "qpq/rational_fn.hpp"

#include <stdexcept>
#include <tuple>

namespace qpq {

namespace {

// Extended Euclid in Q[t]: returns (g, u) with u*a + v*b = g, g the monic gcd.
std::pair<LaurentPoly, LaurentPoly> ext_gcd_first(const LaurentPoly& a,
                                                  const LaurentPoly& b) {
  LaurentPoly r0 = a, r1 = b;
  LaurentPoly u0 = LaurentPoly::constant(1), u1;
  while (!r1.is_zero()) {
    auto [q, r2] = poly_divmod(r0, r1);
    LaurentPoly u2 = u0 - q * u1;
    r0 = r1;
    r1 = r2;
    u0 = u1;
    u1 = u2;
  }
  const Rational lead = r0.coeff(r0.degree());
  return {r0.scaled(1 / lead), u0.scaled(1 / lead)};
}

// Inverse of a modulo d, for gcd(a, d) = 1.
LaurentPoly inverse_mod(const LaurentPoly& a, const LaurentPoly& d) {
  auto [g, u] = ext_gcd_first(a, d);
  if (g.degree() != 0) throw std::logic_error("inverse_mod: operands not coprime");
  return poly_divmod(u, d).second;
}

}  // namespace

RationalFn::RationalFn(LaurentPoly num, LaurentPoly den)
    : num_(std::move(num)), den_(std::move(den)) {
  reduce();
}

void RationalFn::reduce() {
  if (den_.is_zero()) throw std::invalid_argument("RationalFn: zero denominator");
  if (num_.is_zero()) {
    den_ = LaurentPoly::constant(1);
    return;
  }
  const long sn = num_.min_exp();
  const long sd = den_.min_exp();
  LaurentPoly n = num_.shifted(-sn);
  LaurentPoly d = den_.shifted(-sd);
  const LaurentPoly g = poly_gcd(n, d);
  if (g.degree() > 0) {
    n = poly_divmod(n, g).first;
    d = poly_divmod(d, g).first;
  }
  const Rational lead = d.coeff(d.degree());
  num_ = n.shifted(sn - sd).scaled(1 / lead);
  den_ = d.scaled(1 / lead);
}

RationalFn RationalFn::operator+(const RationalFn& o) const {
  return RationalFn(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

RationalFn RationalFn::operator-(const RationalFn& o) const {
  return RationalFn(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
}

RationalFn RationalFn::operator*(const RationalFn& o) const {
  return RationalFn(num_ * o.num_, den_ * o.den_);
}

RationalFn RationalFn::operator/(const RationalFn& o) const {
  if (o.is_zero()) throw std::invalid_argument("RationalFn: division by zero");
  return RationalFn(num_ * o.den_, den_ * o.num_);
}

RationalFn RationalFn::operator-() const {
  RationalFn r = *this;
  r.num_ = -r.num_;
  return r;
}

bool RationalFn::operator==(const RationalFn& o) const {
  return num_ * o.den_ == o.num_ * den_;
}

RationalFn RationalFn::conjugate() const {
  return RationalFn(num_.conjugate(), den_.conjugate());
}

std::string RationalFn::str() const {
  if (den_ == LaurentPoly::constant(1)) return num_.str();
  return "(" + num_.str() + ") / (" + den_.str() + ")";
}

TorsionPairingValue::TorsionPairingValue(const RationalFn& value) {
  LaurentPoly d = value.den();  // monic polynomial, d(0) != 0
  if (d.degree() == 0) return;  // a Laurent polynomial: the trivial class
  LaurentPoly n = value.num();
  if (n.is_zero()) return;
  long a = 0;
  if (n.min_exp() < 0) {
    a = -n.min_exp();
    n = n.shifted(a);
  }
  // value = n / (t^a d); strip the Q[t^{±1}] part by reducing n * (t^a)^{-1}
  // modulo d, which leaves the unique proper-fraction representative.
  LaurentPoly r = n;
  if (a > 0) r = r * inverse_mod(LaurentPoly::term(1, a), d);
  r = poly_divmod(r, d).second;
  if (r.is_zero()) return;
  const LaurentPoly g = poly_gcd(r, d);
  if (g.degree() > 0) {
    r = poly_divmod(r, g).first;
    d = poly_divmod(d, g).first;
  }
  if (d.degree() == 0) return;
  const Rational lead = d.coeff(d.degree());
  num_ = r.scaled(1 / lead);
  den_ = d.scaled(1 / lead);
}

TorsionPairingValue TorsionPairingValue::operator+(const TorsionPairingValue& o) const {
  return TorsionPairingValue(as_fn() + o.as_fn());
}

TorsionPairingValue TorsionPairingValue::operator-(const TorsionPairingValue& o) const {
  return TorsionPairingValue(as_fn() - o.as_fn());
}

TorsionPairingValue TorsionPairingValue::scaled(const Rational& c) const {
  return TorsionPairingValue(as_fn() * RationalFn::from_rational(c));
}

TorsionPairingValue TorsionPairingValue::scaled(const LaurentPoly& p) const {
  return TorsionPairingValue(as_fn() * RationalFn(p));
}

TorsionPairingValue TorsionPairingValue::conjugate() const {
  return TorsionPairingValue(as_fn().conjugate());
}

std::string TorsionPairingValue::str() const {
  if (is_zero()) return "0";
  return "(" + num_.str() + ") / (" + den_.str() + ")";
}

}  // namespace qpq
