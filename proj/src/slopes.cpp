#include "qpq/slopes.hpp"

#include <numeric>
#include <sstream>
#include <stdexcept>

namespace qpq {

namespace {

long floordiv(long a, long b) {
  // b > 0; floor toward minus infinity
  return a >= 0 ? a / b : -((-a + b - 1) / b);
}

long ceildiv_neg(long a, long b) {
  // ceiling of a/b with b < 0: a/b = (-a)/(-b) and ceil(x) = -floor(-x)
  return -floordiv(a, -b);
}

}  // namespace

SlopeParam SlopeParam::make(long c, long d) {
  if (c % 2 != 0) throw std::invalid_argument("slope: numerator must be even");
  if (d == 0) throw std::invalid_argument("slope: denominator must be nonzero");
  if (d < 0) {
    c = -c;
    d = -d;
  }
  if (c == 0) return SlopeParam(0, 1);
  if (std::gcd(std::abs(c), d) != 1)
    throw std::invalid_argument("slope: c and d must be coprime");
  return SlopeParam(c, d);
}

SlopeParam SlopeParam::parse(const std::string& text) {
  const auto slash = text.find('/');
  try {
    if (slash == std::string::npos) return make(std::stol(text), 1);
    return make(std::stol(text.substr(0, slash)), std::stol(text.substr(slash + 1)));
  } catch (const std::invalid_argument&) {
    throw;
  } catch (const std::exception&) {
    throw std::invalid_argument("slope: cannot parse '" + text + "'");
  }
}

SlopeParam SlopeParam::negated() const { return make(-c_, d_); }

std::string SignSequence::str() const {
  std::string s;
  for (int v : signs) s += (v > 0 ? '+' : '-');
  return s;
}

std::pair<std::size_t, std::size_t> SignSequence::sign_counts() const {
  std::size_t pos = 0;
  for (int v : signs)
    if (v > 0) ++pos;
  return {pos, signs.size() - pos};
}

SignSequence epsilon_sequence(const SlopeParam& s) {
  SignSequence seq;
  const long c = s.c();
  const long d = s.d();
  if (c == 0) return seq;
  const long n = std::abs(c) - 1;
  seq.signs.reserve(n);
  for (long i = 1; i <= n; ++i) {
    const long e = c > 0 ? floordiv(i * d, c) : ceildiv_neg(i * d, c);
    seq.signs.push_back(e % 2 == 0 ? 1 : -1);
  }
  return seq;
}

GroupWord omega_word(const SlopeParam& s) {
  const SignSequence eps = epsilon_sequence(s);
  std::vector<Letter> raw;
  raw.reserve(eps.signs.size());
  for (std::size_t i = 0; i < eps.signs.size(); ++i)
    raw.push_back({i % 2 == 0 ? "v" : "u", eps.signs[i]});  // i + 1 odd -> v
  return GroupWord::from_letters(raw);
}

GroupWord slope_relator(const SlopeParam& s) {
  return commutator(GroupWord::letter("u"), omega_word(s));
}

SignSequence grid_walk_oracle(const SlopeParam& s) {
  if (s.c() == 0) throw std::invalid_argument("grid_walk_oracle: requires c != 0");
  const long C = std::abs(s.c());
  const long d = s.d();
  SignSequence seq;
  seq.signs.reserve(C - 1);
  if (s.c() > 0) {
    // Straight arc from the bottom-left to the top-right corner of the
    // unrolled seam grid; the crossing of seam i sits in column m, advanced
    // cell by cell with exact integer comparisons.
    long m = 0;
    for (long i = 1; i < C; ++i) {
      if ((i * d) % C == 0)
        throw std::logic_error("grid_walk_oracle: arc hits a lattice point");
      while ((m + 1) * C <= i * d) ++m;
      seq.signs.push_back(m % 2 == 0 ? 1 : -1);
    }
  } else {
    // Mirror arc, from the bottom-right to the top-left corner.
    long m = d - 1;
    for (long i = 1; i < C; ++i) {
      if ((i * d) % C == 0)
        throw std::logic_error("grid_walk_oracle: arc hits a lattice point");
      while (m * C > d * C - i * d) --m;
      seq.signs.push_back(((m % 2) + 2) % 2 == 0 ? 1 : -1);
    }
  }
  return seq;
}

SlopeParam twist_equivalent(const SlopeParam& s, long n) {
  return SlopeParam::make(s.c(), s.d() - 2 * n * s.c());
}

}  // namespace qpq
