#ifndef MCG_MOVES_HPP_
#define MCG_MOVES_HPP_

// Hurwitz moves, simultaneous conjugation and relation substitution on
// positive words, plus replayable derivation scripts.

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "mcg/curve_system.hpp"
#include "mcg/word.hpp"

namespace mcg {

// Right: (c_i, c_{i+1}) -> (c_{i+1}, [c_{i+1}^-1]c_i).
// Left:  (c_i, c_{i+1}) -> ([c_i]c_{i+1}, c_i).
enum class Side { Left, Right };
enum class Direction { Forward, Reverse };

struct ElemMove {
  std::size_t index = 1;  // 1-based position of c_i
  Side side = Side::Right;
};

struct ConjMove {
  Word conjugator;
};

// k > 0 moves the first k letters to the end; k < 0 moves the last |k|
// letters to the front.  Compiled to elementary moves and one conjugation
// per letter.
struct RotateMove {
  long k = 0;
};

struct SubstMove {
  std::string relation;
  std::size_t position = 1;  // 1-based start of the consumed subword
  Direction direction = Direction::Forward;
};

using Move = std::variant<ElemMove, ConjMove, RotateMove, SubstMove>;

std::string describe(const Move& m);

PositiveWord elementary_transformation(const CurveSystem& sys,
                                       const PositiveWord& w, std::size_t index,
                                       Side side);

PositiveWord simultaneous_conjugation(const CurveSystem& sys,
                                      const PositiveWord& w, const Word& by);

// Rotation as a sequence of primitive moves.
std::vector<Move> compile_rotation(const PositiveWord& w, long k);

// Replaces the relation's source side at `position` by its target side.
// Throws SubstMismatch, InvalidRelation, IndexOutOfRange.  Relations whose
// curves carry no classes are accepted unverified.
PositiveWord substitute(const CurveSystem& sys, const PositiveWord& w,
                        const RelationDecl& relation, std::size_t position,
                        Direction direction);

struct Site {
  std::size_t position = 1;
  Direction direction = Direction::Forward;

  bool operator==(const Site&) const = default;
};

// Every position where substitute() would succeed, in both directions.
std::vector<Site> find_sites(const CurveSystem& sys, const PositiveWord& w,
                             const RelationDecl& relation);

// Applies one move (Rotate expands to primitives).
PositiveWord apply_move(const CurveSystem& sys, const PositiveWord& w,
                        const Move& m);

// `expect WORD` inside a script: asserts equality at that point.
struct Checkpoint {
  std::string word;
};

using ScriptStep = std::variant<Move, Checkpoint>;

struct DerivationScript {
  std::string name;
  std::string source;
  std::vector<ScriptStep> steps;
  std::optional<std::string> expected;
};

enum class RhoCheck {
  Relator,     // every letter has a class and rho(w) = I
  Preserved,   // rho (or its shadow) changed exactly as the move dictates
  Unchecked,   // substitution with a relation lacking homology data
};

std::string to_string(RhoCheck c);

struct StepRecord {
  std::size_t index = 0;  // 1-based over script steps
  std::string move;
  PositiveWord word;
  std::size_t length = 0;
  long euler = 0;
  std::optional<long> sigma;
  long delta_euler = 0;
  std::optional<long> delta_sigma;
  RhoCheck rho = RhoCheck::Preserved;
  std::optional<RelationKind> substitution;
  std::optional<Direction> direction;
};

struct ReplayFailure {
  std::size_t step = 0;  // 1-based
  std::string move;
  std::string message;
};

struct ReplayResult {
  std::string script;
  PositiveWord source;
  PositiveWord final_word;
  std::vector<StepRecord> steps;
  std::optional<ReplayFailure> failure;
  long initial_euler = 0;
  std::optional<long> initial_sigma;

  bool ok() const { return !failure.has_value(); }
};

struct ReplayOptions {
  // Compute the signature after every step when the word is a fully
  // classed homological relator.
  bool track_sigma = true;
};

// Runs the script step by step, checking positivity and the rho-image after
// every step.  Step failures are reported in the result; unresolved names
// throw.
ReplayResult replay_script(const CurveSystem& sys,
                           const std::map<std::string, PositiveWord>& words,
                           const DerivationScript& script,
                           const ReplayOptions& options = {});

}  // namespace mcg

#endif  // MCG_MOVES_HPP_
