#include <doctest.h>

#include "mcg/errors.hpp"
#include "mcg/homology.hpp"
#include "mcg/invariants.hpp"
#include "mcg/meyer.hpp"
#include "mcg/moves.hpp"
#include "support.hpp"

using namespace mcg;
using namespace mcg::testing;

namespace {

PositiveWord cyclic_shift(const PositiveWord& w, long k) {
  auto ls = w.letters();
  const long n = long(ls.size());
  k = ((k % n) + n) % n;
  std::vector<Letter> out(ls.begin() + k, ls.end());
  out.insert(out.end(), ls.begin(), ls.begin() + k);
  return PositiveWord(out);
}

// Short conjugators keep the letters small during long walks.
Move random_move(const CurveSystem& s, const PositiveWord& w) {
  switch (pick(6)) {
    case 0:
      return ConjMove{gens(s, {{s.curve_names()[pick(5)], coin()}})};
    case 1:
      return RotateMove{long(pick(5)) - 2};
    default:
      return ElemMove{1 + pick(w.size() - 1), coin() > 0 ? Side::Left : Side::Right};
  }
}

DerivationScript script_of(const std::string& source, std::vector<ScriptStep> steps,
                           std::optional<std::string> expected = std::nullopt) {
  return DerivationScript{"t", source, std::move(steps), std::move(expected)};
}

}  // namespace

TEST_CASE("elementary transformations") {
  const CurveSystem& s = load("genus2_chain.mcg").sys();
  PositiveWord w = plain_word(s, {"c1", "c2", "c3"});
  // [c2^-1]c1 and [c1]c2 are the same curve
  CHECK(elementary_transformation(s, w, 1, Side::Right).str() == "c2 [c1]c2 c3");
  CHECK(elementary_transformation(s, w, 2, Side::Left).str() == "c1 [c2]c3 c2");
  CHECK(elementary_transformation(s, elementary_transformation(s, w, 2, Side::Right), 2,
                                  Side::Left) == w);
  // disjoint neighbours just swap
  CHECK(elementary_transformation(s, plain_word(s, {"c1", "c3"}), 1, Side::Right).str() ==
        "c3 c1");
  CHECK_THROWS_AS(elementary_transformation(s, w, 3, Side::Right), IndexOutOfRange);
  CHECK_THROWS_AS(elementary_transformation(s, w, 0, Side::Left), IndexOutOfRange);
}

TEST_CASE("moves are inverse to each other") {
  const CurveSystem& s = load("genus2_chain.mcg").sys();
  for (int it = 0; it < 500; ++it) {
    PositiveWord w(random_word(s, 6, true));
    if (w.size() < 2) continue;
    const std::size_t i = 1 + pick(w.size() - 1);
    CHECK(elementary_transformation(
              s, elementary_transformation(s, w, i, Side::Right), i, Side::Left) == w);
    CHECK(elementary_transformation(
              s, elementary_transformation(s, w, i, Side::Left), i, Side::Right) == w);
    Word by = random_word(s, 3);
    CHECK(simultaneous_conjugation(s, simultaneous_conjugation(s, w, by), invert(by)) == w);
  }
}

TEST_CASE("rotation is a cyclic shift") {
  const CurveSystem& s = load("genus2_chain.mcg").sys();
  for (int it = 0; it < 300; ++it) {
    PositiveWord w(random_word(s, 7, true));
    if (w.size() < 2) continue;
    const long k = long(pick(2 * w.size() + 1)) - long(w.size());
    CHECK(apply_move(s, w, RotateMove{k}) == cyclic_shift(w, k));
    PositiveWord step = w;
    for (auto const& m : compile_rotation(w, k)) step = apply_move(s, step, m);
    CHECK(step == cyclic_shift(w, k));
  }
  CHECK(compile_rotation(plain_word(s, {"c1", "c2", "c3"}), 0).empty());
}

TEST_CASE("describe") {
  const CurveSystem& s = load("genus2_chain.mcg").sys();
  CHECK(describe(ElemMove{3, Side::Left}) == "elem 3 L");
  CHECK(describe(RotateMove{-1}) == "rot -1");
  CHECK(describe(SubstMove{"L1", 9, Direction::Forward}) == "subst L1 @ 9 fwd");
  CHECK(describe(ConjMove{gens(s, {{"c1", -1}})}) == "conj c1^-1");
}

TEST_CASE("Hurwitz invariance along random walks") {
  const Inputs& g2 = load("genus2_chain.mcg");
  const CurveSystem& s = g2.sys();
  for (auto name : {"rho", "rho_prime"}) {
    const InvariantReport base = full_report(s, g2.word(name));
    for (int walk = 0; walk < 6; ++walk) {
      PositiveWord w = g2.word(name);
      for (int it = 0; it < 100; ++it) {
        w = apply_move(s, w, random_move(s, w));
        CHECK(is_homological_relator(s, w.word()));
        const InvariantReport r = full_report(s, w);
        CHECK(r.euler == base.euler);
        CHECK(r.signature == base.signature);
        CHECK(r.census == base.census);
        CHECK(r.h1 == base.h1);
      }
    }
  }
}

TEST_CASE("walks on opaque words keep the shadow") {
  const Inputs& g3 = load("genus3_chain.mcg");
  const CurveSystem& s = g3.sys();
  PositiveWord w = g3.word("rho3");
  const SpMatrix before = rho_shadow(s, w.word());
  for (int it = 0; it < 200; ++it) {
    // conjugation and rotation conjugate the shadow
    w = elementary_transformation(s, w, 1 + pick(w.size() - 1),
                                  coin() > 0 ? Side::Left : Side::Right);
    CHECK(rho_shadow(s, w.word()) == before);
    CHECK(euler_characteristic(s, w) == 28);
  }
}

TEST_CASE("sites and substitution agree") {
  const Inputs& rel = load("relations_g2.mcg");
  const CurveSystem& s = rel.sys();
  for (auto wn : {"rho", "chain5", "chain4"}) {
    const PositiveWord& w = rel.word(wn);
    for (auto const& r : s.relations()) {
      auto sites = find_sites(s, w, r);
      for (std::size_t p = 1; p <= w.size(); ++p)
        for (auto d : {Direction::Forward, Direction::Reverse}) {
          const bool listed =
              std::find(sites.begin(), sites.end(), Site{p, d}) != sites.end();
          bool ok = true;
          try {
            PositiveWord out = substitute(s, w, r, p, d);
            auto [src, dst] = relation_sides(r);
            if (d == Direction::Reverse) std::swap(src, dst);
            CHECK(out.size() == w.size() - src.size() + dst.size());
            const Direction back =
                d == Direction::Forward ? Direction::Reverse : Direction::Forward;
            CHECK(substitute(s, out, r, p, back) == w);
          } catch (const SubstMismatch&) {
            ok = false;
          } catch (const IndexOutOfRange&) {
            ok = false;
          }
          CHECK(ok == listed);
        }
    }
  }
  CHECK(find_sites(s, rel.word("chain4"), s.relation("C14")).size() == 9);
  CHECK(find_sites(s, rel.word("rho"), s.relation("B12")).empty());
}

TEST_CASE("invalid relations are refused") {
  const Inputs& g2 = load("genus2_chain.mcg");
  const CurveSystem& s = g2.sys();
  RelationDecl bad{"bad", RelationKind::Braid,
                   {plain_letter(s, "c1"), plain_letter(s, "c3")}, {}};
  CHECK_THROWS_AS(substitute(s, plain_word(s, {"c1", "c3", "c1"}), bad, 1,
                             Direction::Forward),
                  InvalidRelation);
  CHECK_THROWS_AS(substitute(s, g2.word("rho"), s.relation("L1"), 19, Direction::Forward),
                  IndexOutOfRange);
  CHECK_THROWS_AS(substitute(s, g2.word("rho"), s.relation("L1"), 1, Direction::Forward),
                  SubstMismatch);
}

TEST_CASE("lantern substitutions change e by -1 and sigma by +1") {
  const Inputs& g2 = load("genus2_chain.mcg");
  ReplayResult r = replay_script(g2.sys(), g2.words, g2.script("ex53"));
  REQUIRE(r.ok());
  int lanterns = 0, braids = 0;
  for (auto const& st : r.steps) {
    if (!st.substitution) {
      CHECK(st.delta_euler == 0);
      CHECK(st.delta_sigma == 0);
      continue;
    }
    if (*st.substitution == RelationKind::Lantern) {
      ++lanterns;
      CHECK(st.direction == Direction::Forward);
      CHECK(st.delta_euler == -1);
      CHECK(st.delta_sigma == 1);
    } else {
      ++braids;
      CHECK(st.delta_euler == 0);
      CHECK(st.delta_sigma == 0);
    }
    CHECK(st.rho == RhoCheck::Relator);
  }
  CHECK(lanterns == 4);
  CHECK(braids == 1);
  CHECK(r.initial_sigma == -12);
  CHECK(r.steps.back().sigma == -8);
  CHECK(r.final_word == g2.word("rho_prime"));
}

TEST_CASE("lantern delta does not depend on the surrounding word") {
  const Inputs& g2 = load("genus2_chain.mcg");
  const CurveSystem& s = g2.sys();
  const RelationDecl& l1 = s.relation("L1");
  // every L1 site in random Hurwitz images of s01
  int seen = 0;
  for (int walk = 0; walk < 40; ++walk) {
    PositiveWord w = g2.word("s01");
    for (int it = 0; it < 3; ++it) w = apply_move(s, w, random_move(s, w));
    for (auto const& site : find_sites(s, w, l1)) {
      PositiveWord out = substitute(s, w, l1, site.position, site.direction);
      const long sign = site.direction == Direction::Forward ? 1 : -1;
      CHECK(euler_characteristic(s, out) - euler_characteristic(s, w) == -sign);
      CHECK(factorization_signature(s, out) - factorization_signature(s, w) == sign);
      ++seen;
    }
  }
  CHECK(seen > 0);
}

TEST_CASE("chain substitutions change sigma by +7 in every context") {
  const Inputs& rel = load("relations_g2.mcg");
  const CurveSystem& s = rel.sys();
  for (auto [wn, rn] : {std::pair{"k12_rho", "K12"}, std::pair{"rho_k45", "K45"}}) {
    const PositiveWord& w = rel.word(wn);
    auto sites = find_sites(s, w, s.relation(rn));
    REQUIRE_FALSE(sites.empty());
    for (auto const& site : sites) {
      if (site.direction != Direction::Forward) continue;
      PositiveWord out = substitute(s, w, s.relation(rn), site.position, site.direction);
      CHECK(euler_characteristic(s, out) - euler_characteristic(s, w) == -11);
      CHECK(factorization_signature(s, out) - factorization_signature(s, w) == 7);
      CHECK(factorization_signature(s, out) == -13);
    }
  }
}

TEST_CASE("replay edge cases") {
  const Inputs& g2 = load("genus2_chain.mcg");
  const CurveSystem& s = g2.sys();

  ReplayResult empty = replay_script(s, g2.words, script_of("rho", {}));
  CHECK(empty.ok());
  CHECK(empty.steps.empty());
  CHECK(empty.final_word == g2.word("rho"));
  CHECK(empty.initial_euler == 16);

  ReplayResult same = replay_script(s, g2.words, script_of("rho", {}, "rho"));
  CHECK(same.ok());

  ReplayResult wrong = replay_script(s, g2.words, script_of("rho", {}, "rho_prime"));
  REQUIRE_FALSE(wrong.ok());
  CHECK(wrong.failure->step == 1);

  ReplayResult bad = replay_script(
      s, g2.words,
      script_of("rho", {Move{ElemMove{8, Side::Left}},
                        Move{SubstMove{"L1", 2, Direction::Forward}}}));
  REQUIRE_FALSE(bad.ok());
  CHECK(bad.failure->step == 2);
  CHECK(bad.failure->move == "subst L1 @ 2 fwd");
  CHECK(bad.steps.size() == 1);

  ReplayResult range = replay_script(
      s, g2.words, script_of("rho", {Move{ElemMove{20, Side::Right}}}));
  REQUIRE_FALSE(range.ok());
  CHECK(range.failure->step == 1);

  ReplayResult check = replay_script(
      s, g2.words, script_of("rho", {Move{ElemMove{1, Side::Right}}, Checkpoint{"rho"}}));
  REQUIRE_FALSE(check.ok());
  CHECK(check.failure->step == 2);

  CHECK_THROWS_AS(replay_script(s, g2.words, script_of("nope", {})), Error);
  CHECK_THROWS_AS(replay_script(s, g2.words,
                                script_of("rho", {Move{SubstMove{"L9", 1, Direction::Forward}}})),
                  Error);
}

TEST_CASE("genus 3 derivations replay") {
  const Inputs& g3 = load("genus3_chain.mcg");
  for (auto sn : {"ex52_tau", "ex52_tauprime", "ex52"}) {
    ReplayResult r = replay_script(g3.sys(), g3.words, g3.script(sn));
    CHECK_MESSAGE(r.ok(), sn);
  }
  ReplayResult r = replay_script(g3.sys(), g3.words, g3.script("ex52"));
  long subs = 0;
  for (auto const& st : r.steps)
    if (st.substitution) {
      ++subs;
      CHECK(st.rho == RhoCheck::Unchecked);
      CHECK(st.delta_euler == -1);
      CHECK_FALSE(st.delta_sigma.has_value());
    }
  CHECK(subs == 3);
  CHECK(find_sites(g3.sys(), g3.word("tau"), g3.sys().relation("Lf")) ==
        std::vector<Site>{{3, Direction::Forward},
                          {15, Direction::Forward},
                          {27, Direction::Forward}});
}
