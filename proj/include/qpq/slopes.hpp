#pragma once

#include <string>
#include <vector>

#include "qpq/words.hpp"

namespace qpq {

/// A pillowcase slope c/d with c even. Canonical storage has d >= 1 and the
/// sign carried by c; gcd(|c|, d) = 1, and c = 0 forces d = 1.
class SlopeParam {
 public:
  static SlopeParam make(long c, long d);
  static SlopeParam parse(const std::string& text);  // `c/d` or bare `c`

  long c() const { return c_; }
  long d() const { return d_; }
  bool is_zero() const { return c_ == 0; }

  SlopeParam negated() const;  // the mirror slope -c/d

  bool operator==(const SlopeParam&) const = default;

  std::string str() const { return std::to_string(c_) + "/" + std::to_string(d_); }

 private:
  SlopeParam(long c, long d) : c_(c), d_(d) {}
  long c_, d_;
};

/// The sequence (eps_i) of crossing signs, length |c| - 1; empty for c = 0.
struct SignSequence {
  std::vector<int> signs;

  bool operator==(const SignSequence&) const = default;
  std::string str() const;  // e.g. `+-++-++-+`
  std::pair<std::size_t, std::size_t> sign_counts() const;
};

/// eps_i = (-1)^{floor(id/c)} for c > 0, with the ceiling variant for c < 0;
/// floors are exact integer floors toward minus infinity.
SignSequence epsilon_sequence(const SlopeParam& s);

/// The alternating word v^{eps_1} u^{eps_2} ... v^{eps_{c-1}}; empty for c = 0.
GroupWord omega_word(const SlopeParam& s);

/// The relator u * omega * u^{-1} * omega^{-1}, freely reduced.
GroupWord slope_relator(const SlopeParam& s);

/// Independent check of the sign sequence: walks the straight arc across the
/// unrolled seam grid cell by cell with exact integer comparisons, recording
/// signed seam crossings. Mirrored walk (right-to-left) for c < 0.
SignSequence grid_walk_oracle(const SlopeParam& s);

/// The slope c/(d - 2nc), renormalized; represents the same word.
SlopeParam twist_equivalent(const SlopeParam& s, long n);

}  // namespace qpq
