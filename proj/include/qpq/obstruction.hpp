#pragma once

#include <string>

#include "qpq/slopes.hpp"
#include "qpq/words.hpp"

namespace qpq {

/// Parameters of the torus knot T_{p,q} together with the unique (a, b)
/// solving ap + bq = 1 with 0 < a < q.
struct TorusKnotParams {
  long p, q, a, b;

  static TorusKnotParams make(long p, long q);
};

/// The word y^a x^b (abelianizes to 1 under weights x -> q, y -> p).
GroupWord meridian_word(const TorusKnotParams& t);

/// The slope relator with u -> x^b, v -> y^a substituted and freely reduced.
GroupWord relator_in_xy(const SlopeParam& s, const TorusKnotParams& t);

/// End-to-end verdict for one slope: relator in the disk group, projection
/// to Z_p * Z_q, syllable count, and the triviality decision.
struct ObstructionReport {
  TorusKnotParams params;
  SlopeParam slope;
  GroupWord relator_uv;
  GroupWord relator_xy;
  FreeProductWord normal_form;
  std::size_t syllable_count;
  bool nontrivial;

  std::string to_json() const;
};

ObstructionReport obstruct_triviality(const SlopeParam& s, const TorusKnotParams& t);

/// The computable part of the kernel-comparison argument for two slopes.
/// When both slopes are nonzero and distinct, the conclusion leans on an
/// external diffeomorphism that is out of scope here; the certificate only
/// records that dependency.
struct KernelCertificate {
  ObstructionReport first;
  ObstructionReport second;
  bool kernels_equal_known;     // true only for identical slopes
  bool kernels_distinct_known;  // certified without external input
  bool requires_external_diffeomorphism;

  std::string to_json() const;
};

KernelCertificate kernel_distinctness_certificate(const SlopeParam& s1,
                                                  const SlopeParam& s2,
                                                  const TorusKnotParams& t);

}  // namespace qpq
