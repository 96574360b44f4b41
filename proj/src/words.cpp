#include "qpq/words.hpp"

#include <cctype>
#include <sstream>
#include <stdexcept>

namespace qpq {

void GroupWord::push_reduced(const std::string& gen, long exp) {
  if (exp == 0) return;
  if (!letters_.empty() && letters_.back().gen == gen) {
    letters_.back().exp += exp;
    if (letters_.back().exp == 0) letters_.pop_back();
  } else {
    letters_.push_back({gen, exp});
  }
}

GroupWord GroupWord::letter(const std::string& gen, long exp) {
  GroupWord w;
  w.push_reduced(gen, exp);
  return w;
}

GroupWord GroupWord::from_letters(const std::vector<Letter>& raw) {
  GroupWord w;
  for (const auto& l : raw) w.push_reduced(l.gen, l.exp);
  return w;
}

GroupWord GroupWord::operator*(const GroupWord& o) const {
  GroupWord w = *this;
  for (const auto& l : o.letters_) w.push_reduced(l.gen, l.exp);
  return w;
}

GroupWord GroupWord::inverse() const {
  GroupWord w;
  for (auto it = letters_.rbegin(); it != letters_.rend(); ++it)
    w.push_reduced(it->gen, -it->exp);
  return w;
}

GroupWord GroupWord::substitute(const std::map<std::string, GroupWord>& images) const {
  GroupWord out;
  for (const auto& l : letters_) {
    auto it = images.find(l.gen);
    if (it == images.end())
      throw std::invalid_argument("substitute: no image for generator " + l.gen);
    const GroupWord img = l.exp >= 0 ? it->second : it->second.inverse();
    const long reps = l.exp >= 0 ? l.exp : -l.exp;
    for (long i = 0; i < reps; ++i) out = out * img;
  }
  return out;
}

std::pair<GroupWord, GroupWord> GroupWord::cyclic_reduce() const {
  GroupWord core = *this;
  GroupWord conj;
  // Rotate the leading power past the tail while the first and last letters
  // share a generator: a^e m a^f = a^e (m a^{f+e}) a^{-e}. Each pass drops at
  // least one letter, so this terminates with a cyclically reduced core.
  while (core.letters_.size() >= 2 &&
         core.letters_.front().gen == core.letters_.back().gen) {
    const Letter first = core.letters_.front();
    const Letter last = core.letters_.back();
    GroupWord inner;
    for (std::size_t i = 1; i + 1 < core.letters_.size(); ++i)
      inner.push_reduced(core.letters_[i].gen, core.letters_[i].exp);
    inner.push_reduced(last.gen, last.exp + first.exp);
    conj = conj * GroupWord::letter(first.gen, first.exp);
    core = inner;
  }
  return {core, conj};
}

long GroupWord::abelianize(const std::map<std::string, long>& weights) const {
  long sum = 0;
  for (const auto& l : letters_) {
    auto it = weights.find(l.gen);
    if (it == weights.end())
      throw std::invalid_argument("abelianize: no weight for generator " + l.gen);
    sum += l.exp * it->second;
  }
  return sum;
}

std::string GroupWord::str() const {
  if (letters_.empty()) return "1";
  std::ostringstream out;
  bool first = true;
  for (const auto& l : letters_) {
    if (!first) out << " ";
    first = false;
    out << l.gen;
    if (l.exp != 1) out << "^" << l.exp;
  }
  return out.str();
}

GroupWord GroupWord::parse(const std::string& text) {
  std::vector<Letter> raw;
  std::size_t i = 0;
  const std::size_t n = text.size();
  while (i < n) {
    if (std::isspace(static_cast<unsigned char>(text[i]))) {
      ++i;
      continue;
    }
    if (text[i] == '1' && (i + 1 == n || std::isspace(static_cast<unsigned char>(text[i + 1])))) {
      ++i;  // explicit identity
      continue;
    }
    if (!std::isalpha(static_cast<unsigned char>(text[i])) && text[i] != '_')
      throw std::invalid_argument("GroupWord::parse: bad character in '" + text + "'");
    std::string gen;
    while (i < n && (std::isalnum(static_cast<unsigned char>(text[i])) || text[i] == '_'))
      gen += text[i++];
    long exp = 1;
    if (i < n && text[i] == '^') {
      ++i;
      std::size_t start = i;
      if (i < n && (text[i] == '-' || text[i] == '+')) ++i;
      while (i < n && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
      if (i == start) throw std::invalid_argument("GroupWord::parse: missing exponent");
      exp = std::stol(text.substr(start, i - start));
    }
    raw.push_back({gen, exp});
  }
  return from_letters(raw);
}

GroupWord commutator(const GroupWord& g, const GroupWord& h) {
  return g * h * g.inverse() * h.inverse();
}

void FreeProductWord::push(bool is_x, long exp) {
  const long m = is_x ? p_ : q_;
  long e = exp % m;
  if (e < 0) e += m;
  if (e == 0) return;
  if (!syl_.empty() && syl_.back().is_x == is_x) {
    long merged = (syl_.back().exp + e) % m;
    syl_.pop_back();
    if (merged != 0) push(is_x, merged);  // at most one level: neighbors re-merge
  } else {
    syl_.push_back({is_x, e});
  }
}

bool FreeProductWord::cyclically_reducible() const {
  return syl_.size() >= 2 && syl_.front().is_x == syl_.back().is_x;
}

std::string FreeProductWord::str() const {
  if (syl_.empty()) return "1";
  std::ostringstream out;
  bool first = true;
  for (const auto& s : syl_) {
    if (!first) out << " ";
    first = false;
    out << (s.is_x ? "x" : "y");
    if (s.exp != 1) out << "^" << s.exp;
  }
  return out.str();
}

FreeProductWord fp_normal_form(const GroupWord& w, long p, long q) {
  if (p <= 1 || q <= 1) throw std::invalid_argument("fp_normal_form: p, q must exceed 1");
  FreeProductWord nf(p, q);
  for (const auto& l : w.letters()) {
    if (l.gen == "x") {
      nf.push(true, l.exp);
    } else if (l.gen == "y") {
      nf.push(false, l.exp);
    } else {
      throw std::invalid_argument("fp_normal_form: unknown generator " + l.gen);
    }
  }
  return nf;
}

}  // namespace qpq
