#include "mcg/invariants.hpp"

#include <set>

#include "mcg/errors.hpp"
#include "mcg/meyer.hpp"

namespace mcg {

long Census::separating() const {
  long s = separating_unknown;
  for (auto const& [h, count] : nh) s += count;
  return s;
}

Census singular_fiber_census(const CurveSystem& sys, const PositiveWord& w) {
  Census c;
  for (int h = 1; h <= sys.genus() / 2; ++h) c.nh[h] = 0;
  for (auto const& l : w.letters()) {
    const LetterClass lc = classify_letter(sys, l);
    switch (lc.type) {
      case CurveType::Nonseparating: ++c.n0; break;
      case CurveType::Separating:
        if (lc.genus_split) ++c.nh[*lc.genus_split];
        else ++c.separating_unknown;
        break;
      case CurveType::Unclassified: ++c.unclassified; break;
    }
  }
  return c;
}

long euler_characteristic(const CurveSystem& sys, const PositiveWord& w) {
  return 4 - 4 * long(sys.genus()) + long(w.size());
}

namespace {

void require_relator_if_classed(const CurveSystem& sys, const PositiveWord& w) {
  if (fully_classed(sys, w.word()) && !is_homological_relator(sys, w.word()))
    throw NotARelator();
}

std::string signed_str(long v) { return (v > 0 ? "+" : "") + std::to_string(v); }

}  // namespace

PositiveWord fiber_sum(const CurveSystem& sys, const PositiveWord& rho,
                       const PositiveWord& sigma, const Word& w) {
  for (auto const* part : {&rho.word(), &sigma.word(), &w})
    if (part->system() != 0 && part->system() != sys.id())
      throw SystemMismatch();
  require_relator_if_classed(sys, rho);
  require_relator_if_classed(sys, sigma);
  return PositiveWord(compose(rho.word(), push_forward_word(sys, w, sigma.word())));
}

BettiSplit betti_split(long euler, long sigma) {
  const long plus2 = euler + sigma - 2;
  const long minus2 = euler - sigma - 2;
  if (plus2 % 2 != 0 || minus2 % 2 != 0 || plus2 < 0 || minus2 < 0)
    throw Error("no b2 split for e = " + std::to_string(euler) +
                ", sigma = " + std::to_string(sigma));
  return {plus2 / 2, minus2 / 2};
}

InvariantReport full_report(const CurveSystem& sys, const PositiveWord& w) {
  InvariantReport r;
  r.genus = sys.genus();
  r.letters = w.size();
  r.census = singular_fiber_census(sys, w);
  r.euler = euler_characteristic(sys, w);
  r.has_separating_factor = r.census.separating() > 0;

  if (!fully_classed(sys, w.word())) {
    std::set<std::string> opaque;
    for (auto const& l : w.letters()) {
      if (!sys.class_of(l.base())) opaque.insert(l.base());
      for (auto const& g : l.conjugator())
        if (!sys.class_of(g.curve)) opaque.insert(g.curve);
    }
    std::string names;
    for (auto const& n : opaque) names += (names.empty() ? "" : " ") + n;
    r.annotations.push_back("signature and H1 not computed: no homology class for " +
                            names);
    return r;
  }
  if (!is_homological_relator(sys, w.word())) throw NotARelator();

  r.signature = factorization_signature(sys, w);
  r.sigma_mod16 = ((*r.signature % 16) + 16) % 16;
  r.h1 = h1_total_space(sys, w);
  r.b1 = long(r.h1->rank);
  if (r.h1->trivial()) {
    const BettiSplit b = betti_split(r.euler, *r.signature);
    r.b2_plus = b.b2_plus;
    r.b2_minus = b.b2_minus;
    r.annotations.push_back(
        "H1 = 0 (necessary condition); simple connectivity is not verified");
  }
  return r;
}

SubstitutionReport substitution_delta_report(const CurveSystem& sys,
                                             const ReplayResult& replay) {
  SubstitutionReport rep;
  for (auto const& s : replay.steps) {
    if (!s.substitution) continue;
    if (*s.substitution == RelationKind::Lantern) {
      if (s.direction == Direction::Forward) ++rep.k;
      else ++rep.lantern_reverse;
    } else {
      ++rep.other[*s.substitution];
    }
  }
  rep.delta_euler = long(replay.final_word.size()) - long(replay.source.size());
  std::optional<long> final_sigma =
      replay.steps.empty() ? replay.initial_sigma : replay.steps.back().sigma;
  if (replay.initial_sigma && final_sigma)
    rep.delta_sigma = *final_sigma - *replay.initial_sigma;

  // Commutativity and braid substitutions keep the length; 2-chains do not
  // and have no predicted signature change.
  const long net = rep.k - rep.lantern_reverse;
  rep.deltas_verified = !rep.other.count(RelationKind::Chain2) &&
                        rep.delta_euler == -net &&
                        (!rep.delta_sigma || *rep.delta_sigma == net);

  std::string head = std::to_string(rep.k) + " L-substitutions";
  if (rep.lantern_reverse)
    head += ", " + std::to_string(rep.lantern_reverse) + " reverse";
  head += ", Δe=" + signed_str(rep.delta_euler);
  head += rep.delta_sigma ? ", Δσ=" + signed_str(*rep.delta_sigma)
                          : std::string(", Δσ unknown");
  rep.lines.push_back(head);
  if (!rep.other.empty()) {
    std::string more = "other substitutions:";
    for (auto const& [kind, count] : rep.other)
      more += " " + std::to_string(count) + " " + to_string(kind);
    rep.lines.push_back(more);
  }
  if (rep.k > 0) {
    auto const& m = relation_manifolds(RelationKind::Lantern);
    rep.lines.push_back("result is a rational blowdown along " +
                        std::to_string(rep.k) + " copies of " + m.lhs +
                        " (boundary " + m.boundary + ", replaced by " + m.rhs + ")");
  }
  for (auto const& [kind, count] : rep.other) {
    auto const& m = relation_manifolds(kind);
    rep.lines.push_back(to_string(kind) + ": " + m.lhs + " replaced by " + m.rhs +
                        " along " + m.boundary);
  }

  const PositiveWord& fin = replay.final_word;
  const bool classed = fully_classed(sys, fin.word()) &&
                       is_homological_relator(sys, fin.word());
  ChecklistItem h1{"H1 of the result is trivial", "not-machine-checkable"};
  ChecklistItem spin{"separating factor present or signature not divisible by 16",
                     "not-machine-checkable"};
  if (classed) {
    h1.status = h1_total_space(sys, fin).trivial() ? "verified" : "failed";
    const long sig = factorization_signature(sys, fin);
    const bool sep = singular_fiber_census(sys, fin).separating() > 0;
    spin.status = (sep || sig % 16 != 0) ? "verified" : "failed";
  }
  rep.checklist.push_back(h1);
  rep.checklist.push_back(spin);
  rep.checklist.push_back({"fundamental group trivial", "not-machine-checkable"});
  rep.checklist.push_back(
      {"homeomorphic but not diffeomorphic to a blowup", "not-machine-checkable"});
  return rep;
}

const RelationManifolds& relation_manifolds(RelationKind kind) {
  static const std::map<RelationKind, RelationManifolds> table = {
      {RelationKind::Commute, {"D4 + D4", "D4 + D4", "S3 + S3"}},
      {RelationKind::Braid, {"X(S2,-2)", "X(S2,-2)", "RP3"}},
      {RelationKind::Chain2, {"M_c(2,3,6)", "X(T2,-1)", "Sigma(2,3,6)"}},
      {RelationKind::Lantern, {"C2", "B2", "L(4,1)"}},
  };
  return table.at(kind);
}

}  // namespace mcg
