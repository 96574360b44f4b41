#pragma once

#include <map>
#include <string>
#include <vector>

#include "qpq/rational.hpp"

namespace qpq {

/// One letter of a group word: a named generator raised to a nonzero power.
struct Letter {
  std::string gen;
  long exp = 1;
  bool operator==(const Letter&) const = default;
};

/// Freely reduced word in named generators: adjacent letters have distinct
/// generators and no letter has exponent zero. Construction reduces.
class GroupWord {
 public:
  GroupWord() = default;

  static GroupWord letter(const std::string& gen, long exp = 1);
  static GroupWord from_letters(const std::vector<Letter>& raw);

  const std::vector<Letter>& letters() const { return letters_; }
  bool is_empty() const { return letters_.empty(); }
  std::size_t length() const { return letters_.size(); }

  GroupWord operator*(const GroupWord& o) const;  // concatenate and reduce
  bool operator==(const GroupWord& o) const { return letters_ == o.letters_; }
  bool operator!=(const GroupWord& o) const { return !(*this == o); }

  GroupWord inverse() const;

  /// Homomorphic image under generator -> word; throws on a missing image.
  GroupWord substitute(const std::map<std::string, GroupWord>& images) const;

  /// w = conjugator * core * conjugator^{-1} with the core cyclically reduced.
  std::pair<GroupWord, GroupWord> cyclic_reduce() const;

  /// Sum over letters of exponent * weight; throws on a missing weight.
  long abelianize(const std::map<std::string, long>& weights) const;

  /// Compact grammar `u v^-1 u^2`; the empty word prints as `1`.
  std::string str() const;
  static GroupWord parse(const std::string& text);

 private:
  std::vector<Letter> letters_;

  void push_reduced(const std::string& gen, long exp);
};

GroupWord commutator(const GroupWord& g, const GroupWord& h);

/// Normal-form word in Z_p * Z_q: syllables strictly alternate between the
/// x-generator (exponents in 1..p-1) and the y-generator (exponents in
/// 1..q-1). The empty list is the identity; normal forms are unique.
class FreeProductWord {
 public:
  struct Syllable {
    bool is_x = true;
    long exp = 1;
    bool operator==(const Syllable&) const = default;
  };

  FreeProductWord(long p, long q) : p_(p), q_(q) {}

  long p() const { return p_; }
  long q() const { return q_; }
  const std::vector<Syllable>& syllables() const { return syl_; }
  std::size_t syllable_length() const { return syl_.size(); }
  bool is_trivial() const { return syl_.empty(); }

  bool operator==(const FreeProductWord& o) const {
    return p_ == o.p_ && q_ == o.q_ && syl_ == o.syl_;
  }
  bool operator!=(const FreeProductWord& o) const { return !(*this == o); }

  /// Append one generator power, reducing modulo p or q and merging with the
  /// previous syllable when types match; keeps the normal form invariant.
  void push(bool is_x, long exp);

  /// True if the first and last syllables are powers of the same generator
  /// (and there are at least two syllables).
  bool cyclically_reducible() const;

  /// `x^2 y x y`; identity prints as `1`.
  std::string str() const;

 private:
  long p_, q_;
  std::vector<Syllable> syl_;
};

/// Image of a word over generators {x, y} under the projection that adds the
/// relations x^p = y^q = 1; throws on any other generator.
FreeProductWord fp_normal_form(const GroupWord& w, long p, long q);

}  // namespace qpq
