#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "qpq/field_elem.hpp"
#include "qpq/laurent.hpp"
#include "qpq/matrix.hpp"
#include "qpq/rational_fn.hpp"

using namespace qpq;

namespace {

LaurentPoly t_pow(long k) { return LaurentPoly::term(1, k); }

LaurentPoly phi() {  // t^2 - t + 1
  return t_pow(2) - t_pow(1) + LaurentPoly::constant(1);
}

LaurentPoly random_laurent(std::mt19937& rng) {
  LaurentPoly p;
  const int terms = static_cast<int>(rng() % 4);
  for (int i = 0; i < terms; ++i)
    p = p + LaurentPoly::term(static_cast<long>(rng() % 11) - 5,
                              static_cast<long>(rng() % 7) - 3);
  return p;
}

FieldElem random_field_elem(std::mt19937& rng) {
  return FieldElem(static_cast<long>(rng() % 11) - 5, static_cast<long>(rng() % 11) - 5);
}

}  // namespace

TEST_CASE("laurent arithmetic examples") {
  const LaurentPoly one_minus_t = LaurentPoly::constant(1) - t_pow(1);
  const LaurentPoly one_minus_tinv = LaurentPoly::constant(1) - t_pow(-1);
  // (1-t)(1-t^{-1}) = 2 - t - t^{-1}
  CHECK(one_minus_t * one_minus_tinv ==
        LaurentPoly::constant(2) - t_pow(1) - t_pow(-1));

  const LaurentPoly p = phi();
  CHECK(p + LaurentPoly() == p);
  CHECK((p - p).is_zero());
}

TEST_CASE("laurent conjugation and power substitution") {
  const LaurentPoly ct_plus_d = LaurentPoly::term(3, 1) + LaurentPoly::constant(7);
  CHECK(ct_plus_d.conjugate() == LaurentPoly::term(3, -1) + LaurentPoly::constant(7));
  CHECK(LaurentPoly::constant(1).conjugate() == LaurentPoly::constant(1));
  CHECK(phi().conjugate() == t_pow(-2) - t_pow(-1) + LaurentPoly::constant(1));

  CHECK(phi().substitute_power(2) == t_pow(4) - t_pow(2) + LaurentPoly::constant(1));
  CHECK(phi().substitute_power(1) == phi());
  CHECK((t_pow(1) - LaurentPoly::constant(1)).substitute_power(-1) ==
        t_pow(-1) - LaurentPoly::constant(1));
  CHECK_THROWS_AS(phi().substitute_power(0), std::invalid_argument);
}

TEST_CASE("laurent ring properties on random triples") {
  std::mt19937 rng(12345u);
  for (int i = 0; i < 200; ++i) {
    const LaurentPoly a = random_laurent(rng), b = random_laurent(rng), c = random_laurent(rng);
    CHECK((a + b) + c == a + (b + c));
    CHECK(a * b == b * a);
    CHECK(a * (b + c) == a * b + a * c);
    CHECK((a * b).conjugate() == a.conjugate() * b.conjugate());
  }
}

TEST_CASE("substitution composes multiplicatively") {
  std::mt19937 rng(777u);
  for (int i = 0; i < 100; ++i) {
    const LaurentPoly a = random_laurent(rng);
    const long v = static_cast<long>(rng() % 3) + 1;
    const long w = (rng() % 2 ? 1 : -1) * (static_cast<long>(rng() % 3) + 1);
    CHECK(a.substitute_power(v).substitute_power(w) == a.substitute_power(v * w));
  }
}

TEST_CASE("field elements obey the defining relation") {
  const FieldElem t = FieldElem::t();
  CHECK(t * t == FieldElem(-1, 1));                     // t^2 = t - 1
  CHECK(t + t.conjugate() == FieldElem::one());         // t + (1 - t) = 1
  CHECK(t.inverse() == FieldElem(1, -1));               // t^{-1} = 1 - t
  CHECK_THROWS_AS(FieldElem::zero().inverse(), std::domain_error);
}

TEST_CASE("field properties on random elements") {
  std::mt19937 rng(999u);
  for (int i = 0; i < 200; ++i) {
    const FieldElem a = random_field_elem(rng);
    CHECK(a.conjugate().conjugate() == a);
    if (!a.is_zero()) CHECK(a * a.inverse() == FieldElem::one());
    const FieldElem b = random_field_elem(rng);
    CHECK(FieldElem::from_laurent(a.to_laurent() * b.to_laurent()) == a * b);
  }
}

TEST_CASE("from_laurent reduces high and negative powers") {
  CHECK(FieldElem::from_laurent(phi()).is_zero());
  CHECK(FieldElem::from_laurent(t_pow(-1)) == FieldElem(1, -1));
  CHECK(FieldElem::from_laurent(t_pow(6)) == FieldElem::one());  // t has order 6
}

TEST_CASE("rational functions compare representation-independently") {
  const RationalFn half(LaurentPoly::constant(1), LaurentPoly::constant(2));
  const RationalFn half2(t_pow(3), t_pow(3) + t_pow(3));
  CHECK(half == half2);
  CHECK(RationalFn(phi(), phi()) == RationalFn(LaurentPoly::constant(1)));
  CHECK_THROWS_AS(RationalFn(t_pow(1), LaurentPoly()), std::invalid_argument);
}

TEST_CASE("matrix inverse over Q(t)") {
  // [[t-1, 1], [-t, t-1]] has det t^2 - t + 1 and adjugate inverse.
  LPMatrix m(2, 2);
  m(0, 0) = t_pow(1) - LaurentPoly::constant(1);
  m(0, 1) = LaurentPoly::constant(1);
  m(1, 0) = -t_pow(1);
  m(1, 1) = t_pow(1) - LaurentPoly::constant(1);
  const RFMatrix inv = matrix_inverse_rational(m);
  CHECK(inv(0, 0) == RationalFn(t_pow(1) - LaurentPoly::constant(1), phi()));
  CHECK(inv(0, 1) == RationalFn(-LaurentPoly::constant(1), phi()));
  CHECK(inv(1, 0) == RationalFn(t_pow(1), phi()));
  CHECK(inv(1, 1) == RationalFn(t_pow(1) - LaurentPoly::constant(1), phi()));

  LPMatrix one_by_one(1, 1);
  one_by_one(0, 0) = t_pow(1);
  CHECK(matrix_inverse_rational(one_by_one)(0, 0) ==
        RationalFn(LaurentPoly::constant(1), t_pow(1)));

  LPMatrix singular(2, 2);
  singular(0, 0) = t_pow(1);
  singular(1, 0) = t_pow(1);
  CHECK_THROWS_AS(matrix_inverse_rational(singular), std::domain_error);
}

TEST_CASE("random matrices invert exactly") {
  std::mt19937 rng(4242u);
  const RationalFn one(LaurentPoly::constant(1));
  for (int trial = 0; trial < 20; ++trial) {
    const std::size_t n = trial % 2 == 0 ? 2 : 4;
    LPMatrix m(n, n);
    do {
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) m(i, j) = random_laurent(rng);
    } while (lp_det(m).is_zero());
    const RFMatrix inv = matrix_inverse_rational(m);
    const RFMatrix prod = to_rational_matrix(m) * inv;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        CHECK(prod(i, j) == (i == j ? one : RationalFn()));
  }
}

TEST_CASE("torsion pairing values canonicalize") {
  // (t-1)^2 / (t^2-t+1) = -t/(t^2-t+1) modulo Laurent polynomials
  const LaurentPoly tm1 = t_pow(1) - LaurentPoly::constant(1);
  const TorsionPairingValue v(RationalFn(tm1 * tm1, phi()));
  CHECK(v == TorsionPairingValue(RationalFn(-t_pow(1), phi())));
  CHECK_FALSE(v.is_zero());
  CHECK(v.num() == -t_pow(1));
  CHECK(v.den() == phi());

  // Laurent polynomials are the zero class.
  CHECK(TorsionPairingValue(RationalFn(t_pow(-3) + t_pow(5))).is_zero());
  // (t - 1 + t^{-1}) * t/(t^2-t+1) = 1 in the quotient.
  const TorsionPairingValue unit =
      TorsionPairingValue(RationalFn(t_pow(1), phi()))
          .scaled(t_pow(1) - LaurentPoly::constant(1) + t_pow(-1));
  CHECK(unit.is_zero());
}

TEST_CASE("canonical serialization") {
  const LaurentPoly p = LaurentPoly::term(-1, -1) + LaurentPoly::constant(2) +
                        LaurentPoly::term(3, 2);
  CHECK(p.str() == "-1*t^-1 + 2 + 3*t^2");
  CHECK(LaurentPoly().str() == "0");
  CHECK(FieldElem(Rational(1, 2), Rational(-2, 3)).str() == "1/2 - 2/3*t");
}
