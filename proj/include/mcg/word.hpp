#ifndef MCG_WORD_HPP_
#define MCG_WORD_HPP_

// Words in the free group on simple closed curves.
//
// A letter is a curve transported by a twist word, written [W]c for the
// curve t_{a_r}^{e_r} ... t_{a_1}^{e_1}(c) where W = a_r^{e_r} ... a_1^{e_1}.
// The rightmost conjugator symbol acts first.  Conjugators are always stored
// flattened to plain curve symbols (a conjugated letter [U]a inside a
// conjugator expands to U a U^-1) and in normal form:
//
//   * reduced in the graph group whose commuting pairs are the declared
//     disjoint pairs;
//   * no symbol that fixes the base curve can be shuffled to the right end;
//   * no pair a^e b^e (b rightmost) with a the base and a, b meeting once,
//     since t_a^e t_b^e (a) = b;
//   * written as the lexicographically least shuffle.
//
// Equality of letters is syntactic on this normal form.  It is sound but not
// complete for isotopy; homology classes refute (never confirm) equality.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace mcg {

class CurveSystem;

using SystemId = std::uint64_t;

// A signed occurrence of a plain curve in a conjugator.
struct Generator {
  std::string curve;
  int exponent = 1;  // +1 or -1

  bool operator==(const Generator&) const = default;
};

using Conjugator = std::vector<Generator>;

// Orders curve names so that c2 < c10.
bool natural_less(const std::string& lhs, const std::string& rhs);

class Letter {
 public:
  Letter() = default;

  const Conjugator& conjugator() const noexcept { return conj_; }
  const std::string& base() const noexcept { return base_; }
  SystemId system() const noexcept { return system_; }
  bool plain() const noexcept { return conj_.empty(); }

  // "[c3 c4^-1]x" or "c5".
  std::string str() const;

  bool operator==(const Letter& other) const {
    return base_ == other.base_ && conj_ == other.conj_;
  }

  // Normalizes `conj` acting on `base`.  Throws UnknownCurve.
  friend Letter make_letter(const CurveSystem& sys, Conjugator conj,
                            std::string base);

 private:
  Conjugator conj_;
  std::string base_;
  SystemId system_ = 0;
};

Letter make_letter(const CurveSystem& sys, Conjugator conj, std::string base);
Letter plain_letter(const CurveSystem& sys, const std::string& name);

struct Factor {
  Letter letter;
  int sign = 1;  // +1 or -1

  bool operator==(const Factor&) const = default;
};

// Cancels adjacent letter/inverse pairs with identical normal forms.
std::vector<Factor> free_reduce(std::vector<Factor> factors);

// A freely reduced word.  Immutable; operations return new words.
class Word {
 public:
  Word() = default;

  const std::vector<Factor>& factors() const noexcept { return factors_; }
  std::size_t size() const noexcept { return factors_.size(); }
  bool empty() const noexcept { return factors_.empty(); }
  const Factor& operator[](std::size_t i) const { return factors_[i]; }
  // 0 when the word is empty and so compatible with every system.
  SystemId system() const noexcept { return system_; }

  std::string str() const;

  bool operator==(const Word& other) const {
    return factors_ == other.factors_;
  }

  friend Word make_word(std::vector<Factor> factors);

 private:
  std::vector<Factor> factors_;
  SystemId system_ = 0;
};

// Builds a freely reduced word.  Throws SystemMismatch when the letters come
// from different systems.
Word make_word(std::vector<Factor> factors);
Word make_word(const std::vector<Letter>& letters);

Word compose(const Word& u, const Word& v);
Word invert(const Word& u);
Word power(const Word& u, int exponent);
bool is_positive(const Word& w);

// Expands every letter [U]a^e into U a^e U^-1 over plain curves.
Conjugator flatten(const Word& w);
Conjugator invert(const Conjugator& c);

// Normal form of the conjugator word in the graph group (no base curve, so
// nothing is dropped).
Conjugator reduce_conjugator(const CurveSystem& sys, Conjugator conj);

// The word [W]c; satisfies [W1]([W2]c) = [W1 W2]c.
Letter twist_conjugate_letter(const CurveSystem& sys, const Word& w,
                              const Letter& c);

// [W]V := [W]c_1 ... [W]c_s, letterwise.
Word push_forward_word(const CurveSystem& sys, const Word& w, const Word& v);

// Word of plain letters from a conjugator, e.g. "f1^-1".
Word conjugator_word(const CurveSystem& sys, const Conjugator& conj);

// A word whose every sign is +1: a candidate monodromy factorization.
class PositiveWord {
 public:
  PositiveWord() = default;
  // Throws Error if `w` has a negative exponent.
  explicit PositiveWord(Word w);
  explicit PositiveWord(const std::vector<Letter>& letters);

  const Word& word() const noexcept { return word_; }
  std::size_t size() const noexcept { return word_.size(); }
  bool empty() const noexcept { return word_.empty(); }
  const Letter& operator[](std::size_t i) const { return word_[i].letter; }
  std::vector<Letter> letters() const;
  std::string str() const { return word_.str(); }

  bool operator==(const PositiveWord& other) const = default;

 private:
  Word word_;
};

}  // namespace mcg

#endif  // MCG_WORD_HPP_
