#include "qpq/alexander.hpp"

#include <stdexcept>
#include <vector>

#include <nlohmann/json.hpp>

namespace qpq {

SeifertData seifert_square_knot() {
  Mat<long> a(4, 4);
  a(0, 0) = 1;
  a(1, 0) = -1;
  a(1, 1) = 1;
  a(2, 2) = -1;
  a(3, 2) = 1;
  a(3, 3) = -1;
  return {a, 2};
}

SeifertData seifert_trefoil() {
  Mat<long> a(2, 2);
  a(0, 0) = 1;
  a(1, 0) = -1;
  a(1, 1) = 1;
  return {a, 1};
}

ModulePresentation presentation_matrix(const SeifertData& s) {
  const std::size_t n = s.A.rows();
  ModulePresentation m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      m(i, j) = LaurentPoly::term(s.A(i, j), 1) - LaurentPoly::constant(s.A(j, i));
  return m;
}

namespace {

void minor_combinations(std::size_t n, std::size_t k, std::size_t start,
                        std::vector<std::size_t>& cur,
                        std::vector<std::vector<std::size_t>>& out) {
  if (cur.size() == k) {
    out.push_back(cur);
    return;
  }
  for (std::size_t i = start; i < n; ++i) {
    cur.push_back(i);
    minor_combinations(n, k, i + 1, cur, out);
    cur.pop_back();
  }
}

LaurentPoly laurent_gcd(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.is_zero()) return b.unit_normalized();
  if (b.is_zero()) return a.unit_normalized();
  return poly_gcd(a.shifted(-a.min_exp()), b.shifted(-b.min_exp())).unit_normalized();
}

}  // namespace

LaurentPoly order_ideal(const ModulePresentation& m) {
  const std::size_t k = std::min(m.rows(), m.cols());
  if (k == 0) return LaurentPoly::constant(1);
  if (m.rows() == m.cols()) return lp_det(m).unit_normalized();
  std::vector<std::vector<std::size_t>> row_sets, col_sets;
  std::vector<std::size_t> cur;
  minor_combinations(m.rows(), k, 0, cur, row_sets);
  minor_combinations(m.cols(), k, 0, cur, col_sets);
  LaurentPoly g;
  for (const auto& rs : row_sets) {
    for (const auto& cs : col_sets) {
      LPMatrix sub(k, k);
      for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j) sub(i, j) = m(rs[i], cs[j]);
      g = laurent_gcd(g, lp_det(sub));
    }
  }
  return g;
}

ModuleVector module_from_int_vector(const IntersectionVector& v) {
  return {FieldElem(v.y1, v.x1), FieldElem(v.y2, v.x2)};
}

IntersectionVector gamma_k(long k) {
  if (k < 0) throw std::invalid_argument("gamma_k: k must be nonnegative");
  return {2 * k + 1, -k, 2 * k + 1, -k - 1};
}

ModuleVector w_k(long k) {
  if (k < 0) throw std::invalid_argument("w_k: k must be nonnegative");
  const Rational den = 3 * Rational(k) * k + 3 * k + 1;
  return {FieldElem::one(),
          FieldElem(Rational(3 * k * k + 2 * k) / den, Rational(2 * k + 1) / den)};
}

namespace {

const RFMatrix& square_knot_inverse() {
  static const RFMatrix inv =
      matrix_inverse_rational(presentation_matrix(seifert_square_knot()));
  return inv;
}

}  // namespace

TorsionPairingValue blanchfield_pair(const std::vector<LaurentPoly>& x,
                                     const std::vector<LaurentPoly>& y,
                                     const SeifertData& s) {
  const std::size_t n = s.A.rows();
  if (x.size() != n || y.size() != n)
    throw std::invalid_argument("blanchfield_pair: coordinate size mismatch");
  const bool is_square_knot = s.A == seifert_square_knot().A;
  const RFMatrix inv = is_square_knot
                           ? square_knot_inverse()
                           : matrix_inverse_rational(presentation_matrix(s));
  const RationalFn t_minus_1(LaurentPoly::variable() - LaurentPoly::constant(1));
  RationalFn acc;
  for (std::size_t i = 0; i < n; ++i) {
    if (x[i].is_zero()) continue;
    const RationalFn xi(x[i].conjugate());
    for (std::size_t j = 0; j < n; ++j) {
      if (y[j].is_zero()) continue;
      acc = acc + xi * inv(i, j) * RationalFn(y[j]);
    }
  }
  return TorsionPairingValue(acc * t_minus_1);
}

std::vector<LaurentPoly> embed_module_vector(const ModuleVector& v) {
  return {v.first.to_laurent(), LaurentPoly(), v.second.to_laurent(), LaurentPoly()};
}

ModuleVector project_to_module(const std::vector<LaurentPoly>& full) {
  if (full.size() != 4) throw std::invalid_argument("project_to_module: need 4 coordinates");
  const LaurentPoly one_minus_t = LaurentPoly::constant(1) - LaurentPoly::variable();
  return {FieldElem::from_laurent(full[0] + one_minus_t * full[1]),
          FieldElem::from_laurent(full[2] + one_minus_t * full[3])};
}

KernelVerdict kernels_distinct(long k1, long k2) {
  const ModuleVector w1 = w_k(k1);
  const ModuleVector w2 = w_k(k2);
  const FieldElem diff = w1.second - w2.second;  // first coordinates cancel
  const Rational c = diff.c1();
  const Rational d = diff.c0();

  KernelVerdict v;
  v.difference_second = diff;
  v.quadratic_coefficient = c * c + c * d + d * d;
  v.self_pairing = blanchfield_pair(embed_module_vector({FieldElem::zero(), diff}),
                                    embed_module_vector({FieldElem::zero(), diff}),
                                    seifert_square_knot());
  v.pairing_route_distinct = !v.self_pairing.is_zero();
  // Independent route: the lines spanned by w_{k1} and w_{k2} over F.
  v.line_route_distinct =
      !(w1.first * w2.second - w1.second * w2.first).is_zero();
  if (v.pairing_route_distinct != v.line_route_distinct)
    throw std::logic_error("kernels_distinct: verification routes disagree");
  v.distinct = v.pairing_route_distinct;
  return v;
}

std::string KernelVerdict::to_json() const {
  nlohmann::json j = {
      {"distinct", distinct},
      {"difference_second", difference_second.str()},
      {"quadratic_coefficient", quadratic_coefficient.str()},
      {"self_pairing", self_pairing.str()},
      {"pairing_route_distinct", pairing_route_distinct},
      {"line_route_distinct", line_route_distinct},
  };
  return j.dump();
}

ModulePresentation litherland_sum(const ModulePresentation& pattern,
                                  const ModulePresentation& companion, long w) {
  if (w == 0) throw std::invalid_argument("litherland_sum: winding number must be nonzero");
  const std::size_t r1 = pattern.rows(), c1 = pattern.cols();
  const std::size_t r2 = companion.rows(), c2 = companion.cols();
  ModulePresentation out(r1 + r2, c1 + c2);
  for (std::size_t i = 0; i < r1; ++i)
    for (std::size_t j = 0; j < c1; ++j) out(i, j) = pattern(i, j);
  for (std::size_t i = 0; i < r2; ++i)
    for (std::size_t j = 0; j < c2; ++j)
      out(r1 + i, c1 + j) = companion(i, j).substitute_power(w);
  return out;
}

bool f_monotone(long kmax) {
  if (kmax < 1) throw std::invalid_argument("f_monotone: kmax must be >= 1");
  auto f = [](long k) {
    return Rational(2 * k + 1) / Rational(3 * k * k + 3 * k + 1);
  };
  for (long k = 0; k < kmax; ++k)
    if (!(f(k) > f(k + 1))) return false;
  return true;
}

}  // namespace qpq
