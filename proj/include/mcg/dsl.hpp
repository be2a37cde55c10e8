#ifndef MCG_DSL_HPP_
#define MCG_DSL_HPP_

// Line-oriented text format for curve systems, words and scripts.
//
//   genus 2
//   curve c1 = a1          curve k = 0          curve x1   (no class)
//   disjoint c1 c3         disjoint c1 : c3 c4 c5
//   meet1 c1 c2
//   septype k 1
//   lantern L1 : d1 d2 d3 d4 => a b c      (or  a b c <= d1 d2 d3 d4)
//   braid B : a b     commute C : a b     chain2 K : a b => c
//   word rho = (c5 c4 c3 c2 c1^2 c2 c3 c4 c5)^2
//   script s on rho:
//     elem 3 R
//     conj c1^-1 f1
//     rot -1
//     subst L1 @ 9 fwd
//     expect rho2
//
// A trailing `expect` is the script's expected final word; earlier ones are
// checkpoints.

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "mcg/curve_system.hpp"
#include "mcg/moves.hpp"
#include "mcg/word.hpp"

namespace mcg {

struct Inputs {
  std::shared_ptr<CurveSystem> system;
  std::map<std::string, PositiveWord> words;
  std::vector<std::string> word_order;
  std::map<std::string, DerivationScript> scripts;
  std::vector<std::string> script_order;

  const CurveSystem& sys() const { return *system; }
  const PositiveWord& word(const std::string& name) const;
  const DerivationScript& script(const std::string& name) const;
};

// Throws ParseError (syntax, unresolved names) and ValidationError.
Inputs parse_text(const std::string& text, const std::string& filename = "<input>");
// Files are read in order as one stream of statements.
Inputs parse_inputs(const std::vector<std::string>& paths);

// EXPR over the system; NAME may be a curve or a word in `words`.  Powers and
// exponents may be negative here, unlike `word` statements.
Word parse_word_expr(const CurveSystem& sys, const std::string& expr,
                     const std::map<std::string, PositiveWord>& words = {});

// Text that parse_word_expr reads back to the same word.
std::string render_word(const Word& w);
std::string render_word(const PositiveWord& w);

}  // namespace mcg

#endif  // MCG_DSL_HPP_
