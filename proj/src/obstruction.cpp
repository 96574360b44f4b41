#include "qpq/obstruction.hpp"

#include <numeric>
#include <sstream>
#include <stdexcept>

#include <nlohmann/json.hpp>

namespace qpq {

TorusKnotParams TorusKnotParams::make(long p, long q) {
  if (!(p > q && q > 1)) throw std::invalid_argument("torus knot: need p > q > 1");
  if (std::gcd(p, q) != 1) throw std::invalid_argument("torus knot: p, q must be coprime");
  // ap + bq = 1 with 0 < a < q, via extended Euclid and a range shift.
  long r0 = p, r1 = q, a0 = 1, a1 = 0;
  while (r1 != 0) {
    const long k = r0 / r1;
    std::tie(r0, r1) = std::pair{r1, r0 - k * r1};
    std::tie(a0, a1) = std::pair{a1, a0 - k * a1};
  }
  long a = a0 % q;
  if (a <= 0) a += q;
  const long b = (1 - a * p) / q;
  return {p, q, a, b};
}

GroupWord meridian_word(const TorusKnotParams& t) {
  return GroupWord::letter("y", t.a) * GroupWord::letter("x", t.b);
}

GroupWord relator_in_xy(const SlopeParam& s, const TorusKnotParams& t) {
  const std::map<std::string, GroupWord> images = {
      {"u", GroupWord::letter("x", t.b)},
      {"v", GroupWord::letter("y", t.a)},
  };
  return slope_relator(s).substitute(images);
}

ObstructionReport obstruct_triviality(const SlopeParam& s, const TorusKnotParams& t) {
  ObstructionReport r{t, s, slope_relator(s), relator_in_xy(s, t),
                      FreeProductWord(t.p, t.q), 0, false};
  r.normal_form = fp_normal_form(r.relator_xy, t.p, t.q);
  r.syllable_count = r.normal_form.syllable_length();
  r.nontrivial = r.syllable_count > 0;
  if (r.nontrivial != !s.is_zero() ||
      (r.nontrivial && r.syllable_count != 2 * static_cast<std::size_t>(std::abs(s.c()))))
    throw std::logic_error("obstruct_triviality: syllable-length invariant violated for " +
                           s.str() + ": " + r.relator_xy.str());
  return r;
}

static nlohmann::json report_json(const ObstructionReport& r) {
  return {
      {"p", r.params.p},
      {"q", r.params.q},
      {"a", r.params.a},
      {"b", r.params.b},
      {"c", r.slope.c()},
      {"d", r.slope.d()},
      {"relator_uv", r.relator_uv.str()},
      {"relator_xy", r.relator_xy.str()},
      {"normal_form", r.normal_form.str()},
      {"syllables", r.syllable_count},
      {"nontrivial", r.nontrivial},
  };
}

std::string ObstructionReport::to_json() const { return report_json(*this).dump(); }

KernelCertificate kernel_distinctness_certificate(const SlopeParam& s1,
                                                  const SlopeParam& s2,
                                                  const TorusKnotParams& t) {
  KernelCertificate cert{obstruct_triviality(s1, t), obstruct_triviality(s2, t),
                         false, false, false};
  if (s1 == s2) {
    cert.kernels_equal_known = true;
  } else if (s1.is_zero() || s2.is_zero()) {
    // One relator is trivial and the other is not, so the kernels differ
    // with no external input.
    cert.kernels_distinct_known = true;
  } else {
    cert.requires_external_diffeomorphism = true;
  }
  return cert;
}

std::string KernelCertificate::to_json() const {
  nlohmann::json j = {
      {"first", report_json(first)},
      {"second", report_json(second)},
      {"kernels_equal_known", kernels_equal_known},
      {"kernels_distinct_known", kernels_distinct_known},
      {"requires_external_diffeomorphism", requires_external_diffeomorphism},
  };
  return j.dump();
}

}  // namespace qpq
