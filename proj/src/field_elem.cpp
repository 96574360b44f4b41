#include "qpq/field_elem.hpp"

#include <sstream>
#include <stdexcept>

namespace qpq {

FieldElem FieldElem::operator*(const FieldElem& o) const {
  // (a + bt)(c + dt) = ac + (ad + bc)t + bd t^2,  t^2 = t - 1.
  const Rational bd = c1_ * o.c1_;
  return {c0_ * o.c0_ - bd, c0_ * o.c1_ + c1_ * o.c0_ + bd};
}

FieldElem FieldElem::inverse() const {
  if (is_zero()) throw std::domain_error("FieldElem: inverse of zero");
  const Rational n = norm();
  FieldElem c = conjugate();
  return {c.c0_ / n, c.c1_ / n};
}

FieldElem FieldElem::from_laurent(const LaurentPoly& p) {
  FieldElem acc;
  const FieldElem t_pos = t();
  const FieldElem t_neg{1, -1};  // t^{-1} = 1 - t
  for (const auto& [e, c] : p.terms()) {
    FieldElem pw = one();
    const FieldElem base = e >= 0 ? t_pos : t_neg;
    for (long i = 0; i < (e >= 0 ? e : -e); ++i) pw = pw * base;
    acc = acc + FieldElem(c, 0) * pw;
  }
  return acc;
}

LaurentPoly FieldElem::to_laurent() const {
  return LaurentPoly::constant(c0_) + LaurentPoly::term(c1_, 1);
}

std::string FieldElem::str() const {
  std::ostringstream out;
  out << c0_.str() << (c1_ >= 0 ? " + " : " - ")
      << (c1_ >= 0 ? c1_ : Rational(-c1_)).str() << "*t";
  return out.str();
}

}  // namespace qpq
