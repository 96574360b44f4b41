#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "qpq/alexander.hpp"

using namespace qpq;

namespace {

LaurentPoly t_pow(long k) { return LaurentPoly::term(1, k); }

LaurentPoly phi() { return t_pow(2) - t_pow(1) + LaurentPoly::constant(1); }

TorsionPairingValue bl_line(const FieldElem& x, const FieldElem& y) {
  return blanchfield_pair(embed_module_vector({FieldElem::zero(), x}),
                          embed_module_vector({FieldElem::zero(), y}),
                          seifert_square_knot());
}

FieldElem random_field_elem(std::mt19937& rng) {
  return FieldElem(Rational(static_cast<long>(rng() % 9) - 4,
                            1 + static_cast<long>(rng() % 3)),
                   Rational(static_cast<long>(rng() % 9) - 4,
                            1 + static_cast<long>(rng() % 3)));
}

}  // namespace

TEST_CASE("seifert data") {
  const SeifertData s = seifert_square_knot();
  REQUIRE(s.A.rows() == 4);
  CHECK(s.genus == 2);
  CHECK(s.A(1, 0) == -1);
  CHECK(s.A(1, 1) == 1);
  CHECK(s.A(2, 2) == -1);
  CHECK(s.A(3, 2) == 1);
  CHECK(s.A(0, 2) == 0);

  // A - A^T is the standard symplectic intersection form, up to block signs.
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j) {
      const long v = s.A(i, j) - s.A(j, i);
      if ((i == 1 && j == 0) || (i == 2 && j == 3))
        CHECK(v == -1);
      else if ((i == 0 && j == 1) || (i == 3 && j == 2))
        CHECK(v == 1);
      else
        CHECK(v == 0);
    }
}

TEST_CASE("presentation matrix and order ideal") {
  const ModulePresentation trefoil = presentation_matrix(seifert_trefoil());
  CHECK(trefoil(0, 0) == t_pow(1) - LaurentPoly::constant(1));
  CHECK(trefoil(0, 1) == LaurentPoly::constant(1));
  CHECK(trefoil(1, 0) == -t_pow(1));
  CHECK(trefoil(1, 1) == t_pow(1) - LaurentPoly::constant(1));
  CHECK(order_ideal(trefoil) == phi());

  // The square knot presentation is block diagonal with ideal phi^2.
  CHECK(order_ideal(presentation_matrix(seifert_square_knot())) == phi() * phi());

  // Non-square presentations take the gcd of maximal minors.
  ModulePresentation wide(2, 3);
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j) wide(i, j) = trefoil(i, j);
  CHECK(order_ideal(wide) == phi());
  CHECK(order_ideal(ModulePresentation(0, 0)) == LaurentPoly::constant(1));
}

TEST_CASE("module vectors from intersection data") {
  // (x1, y1, x2, y2) = (1, 0, 0, 1) maps to (t, 1).
  CHECK(module_from_int_vector({1, 0, 0, 1}) ==
        ModuleVector{FieldElem::t(), FieldElem::one()});

  // gamma_0 = [1, 0, 1, -1] maps to (t, t - 1).
  CHECK(gamma_k(0).x1 == 1);
  CHECK(gamma_k(0).y2 == -1);
  CHECK(module_from_int_vector(gamma_k(0)) ==
        ModuleVector{FieldElem::t(), FieldElem(-1, 1)});
  CHECK_THROWS_AS(gamma_k(-1), std::invalid_argument);
}

TEST_CASE("normalized kernel elements w_k") {
  CHECK(w_k(0) == ModuleVector{FieldElem::one(), FieldElem::t()});
  CHECK(w_k(1) == ModuleVector{FieldElem::one(), FieldElem(Rational(5, 7), Rational(3, 7))});

  // w_k is gamma_k's module vector rescaled to first coordinate 1:
  // (2k+1 + t*(-k)) * w_k.second = 2k+1 + t*(-k-1), coordinatewise in F.
  for (long k = 0; k <= 100; ++k) {
    const ModuleVector g = module_from_int_vector(gamma_k(k));
    CHECK(g.first * w_k(k).second == g.second);
  }
  CHECK_THROWS_AS(w_k(-2), std::invalid_argument);
}

TEST_CASE("blanchfield pairing examples") {
  // Trefoil: Bl(a1, a1) = (t-1)^2/phi = -t/phi.
  const std::vector<LaurentPoly> e0 = {LaurentPoly::constant(1), LaurentPoly()};
  CHECK(blanchfield_pair(e0, e0, seifert_trefoil()) ==
        TorsionPairingValue(RationalFn(-t_pow(1), phi())));

  // Square knot, second summand: Bl((0,1),(0,1)) = t/phi.
  const TorsionPairingValue unit = bl_line(FieldElem::one(), FieldElem::one());
  CHECK(unit == TorsionPairingValue(RationalFn(t_pow(1), phi())));

  CHECK(bl_line(FieldElem::zero(), FieldElem::t()).is_zero());
  CHECK_THROWS_AS(blanchfield_pair(e0, e0, seifert_square_knot()), std::invalid_argument);
}

TEST_CASE("blanchfield pairing is sesquilinear and hermitian") {
  std::mt19937 rng(271828u);
  const TorsionPairingValue unit = bl_line(FieldElem::one(), FieldElem::one());
  for (int i = 0; i < 100; ++i) {
    const FieldElem x = random_field_elem(rng), y = random_field_elem(rng);
    const TorsionPairingValue b = bl_line(x, y);
    CHECK(bl_line(y, x) == b.conjugate());
    CHECK(bl_line(x + y, y) == b + bl_line(y, y));
    // Scaling the second slot by a Laurent representative is linear.
    const LaurentPoly c = LaurentPoly::constant(static_cast<long>(rng() % 7) - 3);
    CHECK(bl_line(x, FieldElem::from_laurent(c) * y) == b.scaled(c));
  }

  // Quadratic identity: Bl((0, ct+d), (0, ct+d)) = (c^2+cd+d^2) * t/phi.
  for (long c = -6; c <= 6; ++c)
    for (long d = -6; d <= 6; ++d) {
      const FieldElem v{Rational(d), Rational(c)};
      CHECK(bl_line(v, v) == unit.scaled(v.norm()));
    }
}

TEST_CASE("embedding and projection") {
  std::mt19937 rng(161803u);
  for (int i = 0; i < 50; ++i) {
    const ModuleVector v{random_field_elem(rng), random_field_elem(rng)};
    CHECK(project_to_module(embed_module_vector(v)) == v);
  }
  // b-coordinates are eliminated by b_i = (1-t) a_i.
  const std::vector<LaurentPoly> pure_b = {LaurentPoly(), LaurentPoly::constant(1),
                                           LaurentPoly(), LaurentPoly()};
  CHECK(project_to_module(pure_b).first == FieldElem(1, -1));
  CHECK_THROWS_AS(project_to_module({LaurentPoly()}), std::invalid_argument);
}

TEST_CASE("kernel distinctness verdicts") {
  CHECK_FALSE(kernels_distinct(0, 0).distinct);
  CHECK_FALSE(kernels_distinct(7, 7).distinct);

  const KernelVerdict v = kernels_distinct(0, 1);
  CHECK(v.distinct);
  CHECK(v.difference_second == FieldElem(Rational(-5, 7), Rational(4, 7)));
  CHECK(v.quadratic_coefficient == Rational(3, 7));
  CHECK(v.pairing_route_distinct);
  CHECK(v.line_route_distinct);
  CHECK_FALSE(v.self_pairing.is_zero());

  CHECK(kernels_distinct(3, 17).distinct);
  CHECK(v.to_json().find("\"distinct\":true") != std::string::npos);
}

TEST_CASE("litherland direct sums") {
  const ModulePresentation trefoil = presentation_matrix(seifert_trefoil());
  const ModulePresentation sum = litherland_sum(trefoil, trefoil, 2);
  REQUIRE(sum.rows() == 4);
  CHECK(sum(0, 0) == trefoil(0, 0));
  CHECK(sum(0, 2).is_zero());
  CHECK(sum(2, 2) == t_pow(2) - LaurentPoly::constant(1));
  CHECK(sum(2, 3) == LaurentPoly::constant(1));
  CHECK(sum(3, 2) == -t_pow(2));
  CHECK(sum(3, 3) == t_pow(2) - LaurentPoly::constant(1));

  // Order ideal multiplies: phi(t) * phi(t^w).
  for (long w : {1L, 2L, 3L}) {
    const LaurentPoly expected = phi() * (t_pow(2 * w) - t_pow(w) + LaurentPoly::constant(1));
    CHECK(order_ideal(litherland_sum(trefoil, trefoil, w)) == expected);
  }

  // An empty companion presentation leaves the pattern untouched.
  const ModulePresentation with_unknot = litherland_sum(trefoil, ModulePresentation(0, 0), 3);
  CHECK(with_unknot.rows() == 2);
  CHECK(order_ideal(with_unknot) == phi());

  CHECK_THROWS_AS(litherland_sum(trefoil, trefoil, 0), std::invalid_argument);
}

TEST_CASE("f is strictly decreasing") {
  CHECK(f_monotone(10000));
  const auto f = [](long k) { return Rational(2 * k + 1) / Rational(3 * k * k + 3 * k + 1); };
  CHECK(f(0) == 1);
  CHECK(f(1) == Rational(3, 7));
  CHECK(f(2) == Rational(5, 19));
}
