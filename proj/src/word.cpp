#include "mcg/word.hpp"

#include <algorithm>
#include <cctype>

#include "mcg/curve_system.hpp"
#include "mcg/errors.hpp"

namespace mcg {

bool natural_less(const std::string& lhs, const std::string& rhs) {
  std::size_t i = 0, j = 0;
  while (i < lhs.size() && j < rhs.size()) {
    const bool di = std::isdigit(static_cast<unsigned char>(lhs[i]));
    const bool dj = std::isdigit(static_cast<unsigned char>(rhs[j]));
    if (di && dj) {
      std::size_t ie = i, je = j;
      while (ie < lhs.size() && std::isdigit(static_cast<unsigned char>(lhs[ie]))) ++ie;
      while (je < rhs.size() && std::isdigit(static_cast<unsigned char>(rhs[je]))) ++je;
      std::string a = lhs.substr(i, ie - i), b = rhs.substr(j, je - j);
      a.erase(0, std::min(a.find_first_not_of('0'), a.size()));
      b.erase(0, std::min(b.find_first_not_of('0'), b.size()));
      if (a.size() != b.size()) return a.size() < b.size();
      if (a != b) return a < b;
      i = ie;
      j = je;
    } else {
      if (lhs[i] != rhs[j]) return lhs[i] < rhs[j];
      ++i;
      ++j;
    }
  }
  if ((lhs.size() - i) != (rhs.size() - j))
    return (lhs.size() - i) < (rhs.size() - j);
  return lhs < rhs;
}

namespace {

bool generator_less(const Generator& a, const Generator& b) {
  if (a.curve != b.curve) return natural_less(a.curve, b.curve);
  return a.exponent > b.exponent;  // x before x^-1
}

// Can g[i] be shuffled past every entry in [from, to)?
bool passes(const CurveSystem& sys, const Conjugator& g, std::size_t i,
            std::size_t from, std::size_t to, std::size_t skip = SIZE_MAX) {
  for (std::size_t k = from; k < to; ++k)
    if (k != skip && !sys.commutes(g[k].curve, g[i].curve)) return false;
  return true;
}

// Cancels x^e ... x^-e whenever x commutes with everything in between.
bool cancel_once(const CurveSystem& sys, Conjugator& g) {
  for (std::size_t i = 0; i < g.size(); ++i) {
    for (std::size_t j = i + 1; j < g.size(); ++j) {
      if (g[j].curve == g[i].curve) {
        if (g[j].exponent == -g[i].exponent) {
          g.erase(g.begin() + j);
          g.erase(g.begin() + i);
          return true;
        }
      } else if (!sys.commutes(g[j].curve, g[i].curve)) {
        break;
      }
    }
  }
  return false;
}

void graph_group_reduce(const CurveSystem& sys, Conjugator& g) {
  while (cancel_once(sys, g)) {
  }
}

// Lexicographically least shuffle of a reduced word.
Conjugator canonical_order(const CurveSystem& sys, Conjugator g) {
  Conjugator out;
  out.reserve(g.size());
  while (!g.empty()) {
    std::size_t best = 0;
    for (std::size_t i = 1; i < g.size(); ++i)
      if (passes(sys, g, i, 0, i) && generator_less(g[i], g[best])) best = i;
    out.push_back(g[best]);
    g.erase(g.begin() + best);
  }
  return out;
}

// Removes one symbol that can reach the right end and fixes `base`.
bool drop_fixer(const CurveSystem& sys, Conjugator& g, const std::string& base) {
  for (std::size_t i = g.size(); i-- > 0;) {
    if (sys.fixes(g[i].curve, base) && passes(sys, g, i, i + 1, g.size())) {
      g.erase(g.begin() + i);
      return true;
    }
  }
  return false;
}

// [U a^e b^e] a  ->  [U] b  when a and b meet once.
bool collapse_braid_pair(const CurveSystem& sys, Conjugator& g,
                         std::string& base) {
  for (std::size_t j = g.size(); j-- > 0;) {
    if (!sys.meets_once(g[j].curve, base)) continue;
    if (!passes(sys, g, j, j + 1, g.size())) continue;
    for (std::size_t i = j; i-- > 0;) {
      if (g[i].curve != base || g[i].exponent != g[j].exponent) continue;
      if (!passes(sys, g, i, i + 1, g.size(), j)) continue;
      base = g[j].curve;
      g.erase(g.begin() + j);
      g.erase(g.begin() + i);
      return true;
    }
  }
  return false;
}

// [U g^e]a = [U a^-e]g when g meets a once; keep the larger base.
bool flip_meet_once(const CurveSystem& sys, Conjugator& g, std::string& base) {
  for (std::size_t j = g.size(); j-- > 0;) {
    if (!sys.meets_once(g[j].curve, base) || !natural_less(base, g[j].curve))
      continue;
    if (!passes(sys, g, j, j + 1, g.size())) continue;
    Generator moved{base, -g[j].exponent};
    base = g[j].curve;
    g.erase(g.begin() + j);
    g.push_back(std::move(moved));
    return true;
  }
  return false;
}

SystemId merge_system(SystemId a, SystemId b) {
  if (a == 0) return b;
  if (b == 0 || a == b) return a;
  throw SystemMismatch();
}

}  // namespace

std::string Letter::str() const {
  if (conj_.empty()) return base_;
  std::string out = "[";
  for (std::size_t i = 0; i < conj_.size();) {
    std::size_t j = i;
    while (j < conj_.size() && conj_[j] == conj_[i]) ++j;
    const long e = long(j - i) * conj_[i].exponent;
    if (i) out += ' ';
    out += conj_[i].curve;
    if (e != 1) out += "^" + std::to_string(e);
    i = j;
  }
  return out + "]" + base_;
}

Conjugator reduce_conjugator(const CurveSystem& sys, Conjugator conj) {
  for (auto const& g : conj)
    if (!sys.has_curve(g.curve)) throw UnknownCurve(g.curve);
  graph_group_reduce(sys, conj);
  return canonical_order(sys, std::move(conj));
}

Letter make_letter(const CurveSystem& sys, Conjugator conj, std::string base) {
  if (!sys.has_curve(base)) throw UnknownCurve(base);
  for (auto const& g : conj) {
    if (!sys.has_curve(g.curve)) throw UnknownCurve(g.curve);
    if (g.exponent != 1 && g.exponent != -1)
      throw Error("conjugator exponents must be +1 or -1");
  }
  for (;;) {
    graph_group_reduce(sys, conj);
    if (drop_fixer(sys, conj, base)) continue;
    if (collapse_braid_pair(sys, conj, base)) continue;
    if (flip_meet_once(sys, conj, base)) continue;
    break;
  }
  Letter l;
  l.conj_ = canonical_order(sys, std::move(conj));
  l.base_ = std::move(base);
  l.system_ = sys.id();
  return l;
}

Letter plain_letter(const CurveSystem& sys, const std::string& name) {
  return make_letter(sys, {}, name);
}

std::vector<Factor> free_reduce(std::vector<Factor> factors) {
  std::vector<Factor> out;
  out.reserve(factors.size());
  for (auto& f : factors) {
    if (!out.empty() && out.back().sign == -f.sign &&
        out.back().letter == f.letter) {
      out.pop_back();
    } else {
      out.push_back(std::move(f));
    }
  }
  return out;
}

Word make_word(std::vector<Factor> factors) {
  SystemId sys = 0;
  for (auto const& f : factors) {
    if (f.sign != 1 && f.sign != -1) throw Error("word signs must be +1 or -1");
    sys = merge_system(sys, f.letter.system());
  }
  Word w;
  w.factors_ = free_reduce(std::move(factors));
  w.system_ = w.factors_.empty() ? 0 : sys;
  return w;
}

Word make_word(const std::vector<Letter>& letters) {
  std::vector<Factor> fs;
  fs.reserve(letters.size());
  for (auto const& l : letters) fs.push_back({l, 1});
  return make_word(std::move(fs));
}

std::string Word::str() const {
  std::string out;
  for (std::size_t i = 0; i < factors_.size(); ++i) {
    if (i) out += ' ';
    out += factors_[i].letter.str();
    if (factors_[i].sign < 0) out += "^-1";
  }
  return out;
}

Word compose(const Word& u, const Word& v) {
  merge_system(u.system(), v.system());
  std::vector<Factor> fs = u.factors();
  fs.insert(fs.end(), v.factors().begin(), v.factors().end());
  return make_word(std::move(fs));
}

Word invert(const Word& u) {
  std::vector<Factor> fs(u.factors().rbegin(), u.factors().rend());
  for (auto& f : fs) f.sign = -f.sign;
  return make_word(std::move(fs));
}

Word power(const Word& u, int exponent) {
  Word base = exponent < 0 ? invert(u) : u;
  Word out;
  for (int i = 0; i < std::abs(exponent); ++i) out = compose(out, base);
  return out;
}

bool is_positive(const Word& w) {
  return std::all_of(w.factors().begin(), w.factors().end(),
                     [](const Factor& f) { return f.sign == 1; });
}

Conjugator invert(const Conjugator& c) {
  Conjugator out(c.rbegin(), c.rend());
  for (auto& g : out) g.exponent = -g.exponent;
  return out;
}

Conjugator flatten(const Word& w) {
  Conjugator out;
  for (auto const& f : w.factors()) {
    auto const& conj = f.letter.conjugator();
    out.insert(out.end(), conj.begin(), conj.end());
    out.push_back({f.letter.base(), f.sign});
    auto inv = invert(conj);
    out.insert(out.end(), inv.begin(), inv.end());
  }
  return out;
}

Letter twist_conjugate_letter(const CurveSystem& sys, const Word& w,
                              const Letter& c) {
  merge_system(w.system(), c.system());
  if (c.system() != 0 && c.system() != sys.id()) throw SystemMismatch();
  Conjugator conj = flatten(w);
  conj.insert(conj.end(), c.conjugator().begin(), c.conjugator().end());
  return make_letter(sys, std::move(conj), c.base());
}

Word push_forward_word(const CurveSystem& sys, const Word& w, const Word& v) {
  merge_system(w.system(), v.system());
  std::vector<Factor> fs;
  fs.reserve(v.size());
  for (auto const& f : v.factors())
    fs.push_back({twist_conjugate_letter(sys, w, f.letter), f.sign});
  return make_word(std::move(fs));
}

Word conjugator_word(const CurveSystem& sys, const Conjugator& conj) {
  std::vector<Factor> fs;
  for (auto const& g : conj) fs.push_back({plain_letter(sys, g.curve), g.exponent});
  return make_word(std::move(fs));
}

PositiveWord::PositiveWord(Word w) : word_(std::move(w)) {
  if (!is_positive(word_))
    throw Error("word has a negative exponent: " + word_.str());
}

PositiveWord::PositiveWord(const std::vector<Letter>& letters)
    : word_(make_word(letters)) {}

std::vector<Letter> PositiveWord::letters() const {
  std::vector<Letter> out;
  out.reserve(word_.size());
  for (auto const& f : word_.factors()) out.push_back(f.letter);
  return out;
}

}  // namespace mcg
