#pragma once

#include <string>

#include "qpq/field_elem.hpp"
#include "qpq/matrix.hpp"
#include "qpq/rational_fn.hpp"

namespace qpq {

/// Seifert matrix data: a 2g x 2g integer matrix whose antisymmetrization is
/// the (unimodular) intersection form of the surface.
struct SeifertData {
  Mat<long> A;
  long genus;
};

/// The genus-2 Seifert matrix of the square knot: [[1,0],[-1,1]] (+) its
/// negative-transpose mirror block [[-1,0],[1,-1]].
SeifertData seifert_square_knot();

/// The 2x2 Seifert block of the trefoil, as its own SeifertData (g = 1).
SeifertData seifert_trefoil();

/// Presentation matrix tA - A^T over Laurent polynomials.
using ModulePresentation = LPMatrix;
ModulePresentation presentation_matrix(const SeifertData& s);

/// gcd of the maximal minors, unit-normalized (min exponent 0, monic).
LaurentPoly order_ideal(const ModulePresentation& m);

/// Intersection numbers of a curve on the surface with the (a1, b1, a2, b2)
/// basis duals.
struct IntersectionVector {
  long x1, y1, x2, y2;
};

/// Element of the rationalized Alexander module of the square knot in
/// (a1, a2)-coordinates; the b-generators are eliminated by b_i = (1-t)a_i.
struct ModuleVector {
  FieldElem first, second;

  bool operator==(const ModuleVector&) const = default;
  std::string str() const { return "(" + first.str() + ", " + second.str() + ")"; }
};

/// (t x1 + y1, t x2 + y2).
ModuleVector module_from_int_vector(const IntersectionVector& v);

/// Intersection vector [2k+1, -k, 2k+1, -k-1] of the k-times-twisted curve.
IntersectionVector gamma_k(long k);

/// The normalized kernel element (1, (2k+1)/(3k^2+3k+1) t + (3k^2+2k)/(3k^2+3k+1)).
ModuleVector w_k(long k);

/// Blanchfield pairing conj(x)^T (t-1) (tA - A^T)^{-1} y, reduced into
/// Q(t)/Q[t^{±1}]. Inputs are coordinate vectors in the full generator basis
/// of presentation_matrix(s); conjugate-linear in the first slot.
TorsionPairingValue blanchfield_pair(const std::vector<LaurentPoly>& x,
                                     const std::vector<LaurentPoly>& y,
                                     const SeifertData& s);

/// Embed (a1, a2)-coordinates into the four-generator basis (a1, b1, a2, b2).
std::vector<LaurentPoly> embed_module_vector(const ModuleVector& v);

/// Section inverse of embed_module_vector: eliminate b_i = (1-t)a_i.
ModuleVector project_to_module(const std::vector<LaurentPoly>& full);

/// Self-pairing of a difference w_{k1} - w_{k2} on the square knot, plus the
/// independent line-comparison verdict; the two routes must agree.
struct KernelVerdict {
  bool distinct;
  FieldElem difference_second;       // w_{k1} - w_{k2} = (0, c t + d)
  Rational quadratic_coefficient;    // c^2 + cd + d^2
  TorsionPairingValue self_pairing;
  bool pairing_route_distinct;
  bool line_route_distinct;

  std::string to_json() const;
};

KernelVerdict kernels_distinct(long k1, long k2);

/// Block direct sum of the pattern presentation with the companion
/// presentation substituted t -> t^w.
ModulePresentation litherland_sum(const ModulePresentation& pattern,
                                  const ModulePresentation& companion, long w);

/// Exhaustive check that f(k) = (2k+1)/(3k^2+3k+1) strictly decreases on
/// 0 <= k < kmax.
bool f_monotone(long kmax);

}  // namespace qpq
