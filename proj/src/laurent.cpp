#include "qpq/laurent.hpp"

#include <sstream>

namespace qpq {

void LaurentPoly::set(long exp, Rational c) {
  if (c == 0) {
    coeffs_.erase(exp);
  } else {
    coeffs_[exp] = std::move(c);
  }
}

LaurentPoly LaurentPoly::constant(const Rational& c) {
  LaurentPoly p;
  p.set(0, c);
  return p;
}

LaurentPoly LaurentPoly::term(const Rational& c, long exp) {
  LaurentPoly p;
  p.set(exp, c);
  return p;
}

LaurentPoly LaurentPoly::variable() { return term(1, 1); }

Rational LaurentPoly::coeff(long exp) const {
  auto it = coeffs_.find(exp);
  return it == coeffs_.end() ? Rational(0) : it->second;
}

long LaurentPoly::min_exp() const {
  if (coeffs_.empty()) throw std::logic_error("min_exp of zero polynomial");
  return coeffs_.begin()->first;
}

long LaurentPoly::max_exp() const {
  if (coeffs_.empty()) throw std::logic_error("max_exp of zero polynomial");
  return coeffs_.rbegin()->first;
}

long LaurentPoly::degree() const {
  if (coeffs_.empty()) return -1;
  if (min_exp() < 0) throw std::logic_error("degree of non-polynomial");
  return max_exp();
}

LaurentPoly LaurentPoly::operator+(const LaurentPoly& o) const {
  LaurentPoly r = *this;
  for (const auto& [e, c] : o.coeffs_) r.set(e, r.coeff(e) + c);
  return r;
}

LaurentPoly LaurentPoly::operator-(const LaurentPoly& o) const {
  LaurentPoly r = *this;
  for (const auto& [e, c] : o.coeffs_) r.set(e, r.coeff(e) - c);
  return r;
}

LaurentPoly LaurentPoly::operator*(const LaurentPoly& o) const {
  LaurentPoly r;
  for (const auto& [e1, c1] : coeffs_)
    for (const auto& [e2, c2] : o.coeffs_) r.set(e1 + e2, r.coeff(e1 + e2) + c1 * c2);
  return r;
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly r;
  for (const auto& [e, c] : coeffs_) r.coeffs_[e] = -c;
  return r;
}

LaurentPoly LaurentPoly::conjugate() const {
  LaurentPoly r;
  for (const auto& [e, c] : coeffs_) r.coeffs_[-e] = c;
  return r;
}

LaurentPoly LaurentPoly::substitute_power(long w) const {
  if (w == 0) throw std::invalid_argument("substitute_power: w must be nonzero");
  LaurentPoly r;
  for (const auto& [e, c] : coeffs_) r.coeffs_[e * w] = c;
  return r;
}

LaurentPoly LaurentPoly::shifted(long k) const {
  LaurentPoly r;
  for (const auto& [e, c] : coeffs_) r.coeffs_[e + k] = c;
  return r;
}

LaurentPoly LaurentPoly::scaled(const Rational& c) const {
  LaurentPoly r;
  if (c == 0) return r;
  for (const auto& [e, k] : coeffs_) r.coeffs_[e] = k * c;
  return r;
}

LaurentPoly LaurentPoly::unit_normalized() const {
  if (is_zero()) return *this;
  return shifted(-min_exp()).scaled(1 / coeffs_.rbegin()->second);
}

std::string LaurentPoly::str() const {
  if (coeffs_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [e, c] : coeffs_) {
    if (!first) out << (c > 0 ? " + " : " - ");
    Rational a = (!first && c < 0) ? Rational(-c) : c;
    first = false;
    if (e == 0) {
      out << a.str();
    } else {
      if (a != 1) out << a.str() << "*";
      out << "t";
      if (e != 1) out << "^" << e;
    }
  }
  return out.str();
}

std::pair<LaurentPoly, LaurentPoly> poly_divmod(const LaurentPoly& a,
                                                const LaurentPoly& b) {
  if (b.is_zero()) throw std::invalid_argument("poly_divmod: division by zero");
  if (!a.is_polynomial() || !b.is_polynomial())
    throw std::invalid_argument("poly_divmod: operands must be polynomials");
  LaurentPoly q, r = a;
  const long db = b.degree();
  const Rational lb = b.coeff(db);
  while (!r.is_zero() && r.degree() >= db) {
    const long k = r.degree() - db;
    LaurentPoly m = LaurentPoly::term(r.coeff(r.degree()) / lb, k);
    q = q + m;
    r = r - m * b;
  }
  return {q, r};
}

LaurentPoly poly_gcd(LaurentPoly a, LaurentPoly b) {
  while (!b.is_zero()) {
    LaurentPoly r = poly_divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  if (a.is_zero()) return a;
  return a.scaled(1 / a.coeff(a.degree()));
}

}  // namespace qpq
