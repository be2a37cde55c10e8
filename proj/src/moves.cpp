#include "mcg/moves.hpp"

#include <algorithm>
#include <cstdlib>

#include "mcg/errors.hpp"
#include "mcg/homology.hpp"
#include "mcg/meyer.hpp"

namespace mcg {

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

Word single(const Letter& l, int sign = 1) { return make_word({Factor{l, sign}}); }

std::string join_letters(const std::vector<Letter>& ls) {
  std::string out;
  for (std::size_t i = 0; i < ls.size(); ++i) out += (i ? " " : "") + ls[i].str();
  return out;
}

long euler_of(const CurveSystem& sys, const PositiveWord& w) {
  return 4 - 4 * long(sys.genus()) + long(w.size());
}

}  // namespace

std::string describe(const Move& m) {
  return std::visit(
      overloaded{
          [](const ElemMove& e) {
            return "elem " + std::to_string(e.index) +
                   (e.side == Side::Left ? " L" : " R");
          },
          [](const ConjMove& c) { return "conj " + c.conjugator.str(); },
          [](const RotateMove& r) { return "rot " + std::to_string(r.k); },
          [](const SubstMove& s) {
            return "subst " + s.relation + " @ " + std::to_string(s.position) +
                   (s.direction == Direction::Forward ? " fwd" : " rev");
          }},
      m);
}

std::string to_string(RhoCheck c) {
  switch (c) {
    case RhoCheck::Relator: return "relator";
    case RhoCheck::Preserved: return "preserved";
    case RhoCheck::Unchecked: return "unchecked";
  }
  return "?";
}

PositiveWord elementary_transformation(const CurveSystem& sys,
                                       const PositiveWord& w, std::size_t index,
                                       Side side) {
  if (index < 1 || index >= w.size())
    throw IndexOutOfRange("elementary transformation at " +
                          std::to_string(index) + " in a word of length " +
                          std::to_string(w.size()));
  std::vector<Letter> ls = w.letters();
  Letter& a = ls[index - 1];
  Letter& b = ls[index];
  if (side == Side::Right) {
    Letter moved = twist_conjugate_letter(sys, single(b, -1), a);
    a = b;
    b = std::move(moved);
  } else {
    Letter moved = twist_conjugate_letter(sys, single(a), b);
    b = a;
    a = std::move(moved);
  }
  return PositiveWord(ls);
}

PositiveWord simultaneous_conjugation(const CurveSystem& sys,
                                      const PositiveWord& w, const Word& by) {
  return PositiveWord(push_forward_word(sys, by, w.word()));
}

namespace {

// One rotation by a single letter, as primitives for the given word.
std::vector<Move> single_rotation(const PositiveWord& w, bool front_to_back) {
  std::vector<Move> out;
  const std::size_t n = w.size();
  if (n < 2) return out;
  if (front_to_back) {
    const Letter l = w[0];
    for (std::size_t i = 1; i < n; ++i) out.push_back(ElemMove{i, Side::Left});
    out.push_back(ConjMove{single(l, -1)});
  } else {
    const Letter l = w[n - 1];
    for (std::size_t i = n - 1; i >= 1; --i) out.push_back(ElemMove{i, Side::Right});
    out.push_back(ConjMove{single(l)});
  }
  return out;
}

PositiveWord apply_primitive(const CurveSystem& sys, const PositiveWord& w,
                             const Move& m) {
  return std::visit(
      overloaded{
          [&](const ElemMove& e) {
            return elementary_transformation(sys, w, e.index, e.side);
          },
          [&](const ConjMove& c) {
            return simultaneous_conjugation(sys, w, c.conjugator);
          },
          [&](const RotateMove&) -> PositiveWord {
            throw Error("rotation is not a primitive move");
          },
          [&](const SubstMove& s) {
            return substitute(sys, w, sys.relation(s.relation), s.position,
                              s.direction);
          }},
      m);
}

}  // namespace

std::vector<Move> compile_rotation(const PositiveWord& w, long k) {
  // Primitive lists depend on the current first or last letter, which
  // returns to its original value after each full single rotation.
  std::vector<Move> out;
  const long n = long(w.size());
  if (n < 2 || k == 0) return out;
  std::vector<Letter> ls = w.letters();
  for (long r = 0; r < std::abs(k); ++r) {
    PositiveWord cur(ls);
    auto part = single_rotation(cur, k > 0);
    out.insert(out.end(), part.begin(), part.end());
    if (k > 0) {
      std::rotate(ls.begin(), ls.begin() + 1, ls.end());
    } else {
      std::rotate(ls.rbegin(), ls.rbegin() + 1, ls.rend());
    }
  }
  return out;
}

PositiveWord substitute(const CurveSystem& sys, const PositiveWord& w,
                        const RelationDecl& relation, std::size_t position,
                        Direction direction) {
  const RelationStatus status = relation_status(sys, relation);
  if (status == RelationStatus::Invalid) throw InvalidRelation(relation.name);
  auto [consumed, emitted] = relation_sides(relation);
  if (direction == Direction::Reverse) std::swap(consumed, emitted);

  if (position < 1 || position - 1 + consumed.size() > w.size())
    throw IndexOutOfRange("substitution of " + relation.name + " at " +
                          std::to_string(position) + " overruns a word of length " +
                          std::to_string(w.size()));
  std::vector<Letter> ls = w.letters();
  std::vector<Letter> found(ls.begin() + (position - 1),
                            ls.begin() + (position - 1 + consumed.size()));
  if (found != consumed)
    throw SubstMismatch(join_letters(consumed), join_letters(found));

  std::vector<Letter> out(ls.begin(), ls.begin() + (position - 1));
  out.insert(out.end(), emitted.begin(), emitted.end());
  out.insert(out.end(), ls.begin() + (position - 1 + consumed.size()), ls.end());
  PositiveWord result(out);
  if (status == RelationStatus::Valid &&
      !(rho_shadow(sys, result.word()) == rho_shadow(sys, w.word())))
    throw Error("substitution of " + relation.name + " changed the rho-image");
  return result;
}

std::vector<Site> find_sites(const CurveSystem& sys, const PositiveWord& w,
                             const RelationDecl& relation) {
  (void)sys;
  std::vector<Site> out;
  auto [fwd, rev] = relation_sides(relation);
  const std::vector<Letter> ls = w.letters();
  auto matches = [&](const std::vector<Letter>& pat, std::size_t at) {
    if (at + pat.size() > ls.size()) return false;
    for (std::size_t i = 0; i < pat.size(); ++i)
      if (!(ls[at + i] == pat[i])) return false;
    return true;
  };
  for (std::size_t at = 0; at < ls.size(); ++at) {
    if (matches(fwd, at)) out.push_back({at + 1, Direction::Forward});
    if (matches(rev, at)) out.push_back({at + 1, Direction::Reverse});
  }
  return out;
}

PositiveWord apply_move(const CurveSystem& sys, const PositiveWord& w,
                        const Move& m) {
  if (auto const* r = std::get_if<RotateMove>(&m)) {
    PositiveWord cur = w;
    for (long i = 0; i < std::abs(r->k); ++i)
      for (auto const& prim : single_rotation(cur, r->k > 0))
        cur = apply_primitive(sys, cur, prim);
    return cur;
  }
  return apply_primitive(sys, w, m);
}

namespace {

struct CheckedStep {
  PositiveWord word;
  RhoCheck rho;
};

// Applies a primitive move and checks how the rho shadow moved.
CheckedStep checked_primitive(const CurveSystem& sys, const PositiveWord& w,
                              const Move& m) {
  const SpMatrix before = rho_shadow(sys, w.word());
  PositiveWord next = apply_primitive(sys, w, m);
  const SpMatrix after = rho_shadow(sys, next.word());
  bool checked = true;
  SpMatrix expected = before;
  if (auto const* c = std::get_if<ConjMove>(&m)) {
    SpMatrix by = rho_shadow(sys, c->conjugator);
    expected = by * before * by.inverse();
  } else if (auto const* s = std::get_if<SubstMove>(&m)) {
    checked = relation_status(sys, sys.relation(s->relation)) ==
              RelationStatus::Valid;
  }
  if (checked && !(after == expected))
    throw Error("rho-image not preserved by " + describe(m));
  return {std::move(next), checked ? RhoCheck::Preserved : RhoCheck::Unchecked};
}

CheckedStep checked_move(const CurveSystem& sys, const PositiveWord& w,
                         const Move& m) {
  if (auto const* r = std::get_if<RotateMove>(&m)) {
    CheckedStep cur{w, RhoCheck::Preserved};
    for (long i = 0; i < std::abs(r->k); ++i)
      for (auto const& prim : single_rotation(cur.word, r->k > 0))
        cur = checked_primitive(sys, cur.word, prim);
    return cur;
  }
  return checked_primitive(sys, w, m);
}

std::optional<long> sigma_if_available(const CurveSystem& sys,
                                       const PositiveWord& w) {
  if (!fully_classed(sys, w.word())) return std::nullopt;
  if (!is_homological_relator(sys, w.word())) return std::nullopt;
  return factorization_signature(sys, w);
}

const PositiveWord& lookup(const std::map<std::string, PositiveWord>& words,
                           const std::string& name) {
  auto it = words.find(name);
  if (it == words.end()) throw Error("unknown word '" + name + "'");
  return it->second;
}

}  // namespace

ReplayResult replay_script(const CurveSystem& sys,
                           const std::map<std::string, PositiveWord>& words,
                           const DerivationScript& script,
                           const ReplayOptions& options) {
  ReplayResult result;
  result.script = script.name;
  result.source = lookup(words, script.source);
  result.initial_euler = euler_of(sys, result.source);
  if (options.track_sigma) result.initial_sigma = sigma_if_available(sys, result.source);

  // Resolve every referenced name before running anything.
  for (auto const& step : script.steps) {
    if (auto const* c = std::get_if<Checkpoint>(&step)) lookup(words, c->word);
    if (auto const* m = std::get_if<Move>(&step))
      if (auto const* s = std::get_if<SubstMove>(m)) sys.relation(s->relation);
  }
  if (script.expected) lookup(words, *script.expected);

  PositiveWord current = result.source;
  long euler = result.initial_euler;
  std::optional<long> sigma = result.initial_sigma;

  for (std::size_t i = 0; i < script.steps.size(); ++i) {
    StepRecord rec;
    rec.index = i + 1;
    if (auto const* c = std::get_if<Checkpoint>(&script.steps[i])) {
      rec.move = "expect " + c->word;
      if (!(current == lookup(words, c->word))) {
        result.failure = ReplayFailure{
            rec.index, rec.move,
            "word differs from " + c->word + ": got " + current.str() +
                "; expected " + lookup(words, c->word).str()};
        break;
      }
      rec.word = current;
      rec.rho = RhoCheck::Preserved;
    } else {
      const Move& m = std::get<Move>(script.steps[i]);
      rec.move = describe(m);
      try {
        CheckedStep step = checked_move(sys, current, m);
        rec.word = std::move(step.word);
        rec.rho = step.rho;
      } catch (const Error& e) {
        result.failure = ReplayFailure{rec.index, rec.move, e.what()};
        break;
      }
      if (auto const* s = std::get_if<SubstMove>(&m)) {
        rec.substitution = sys.relation(s->relation).kind;
        rec.direction = s->direction;
      }
    }
    if (fully_classed(sys, rec.word.word()) &&
        is_homological_relator(sys, rec.word.word()))
      rec.rho = RhoCheck::Relator;

    rec.length = rec.word.size();
    rec.euler = euler_of(sys, rec.word);
    rec.delta_euler = rec.euler - euler;
    if (options.track_sigma) {
      rec.sigma = sigma_if_available(sys, rec.word);
      if (rec.sigma && sigma) rec.delta_sigma = *rec.sigma - *sigma;
    }
    euler = rec.euler;
    sigma = rec.sigma;
    current = rec.word;
    result.steps.push_back(std::move(rec));
  }

  result.final_word = current;
  if (!result.failure && script.expected &&
      !(current == lookup(words, *script.expected))) {
    result.failure = ReplayFailure{
        script.steps.size() + 1, "expect " + *script.expected,
        "final word differs: got " + current.str() + "; expected " +
            lookup(words, *script.expected).str()};
  }
  return result;
}

}  // namespace mcg
