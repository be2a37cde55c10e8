#include <doctest.h>

#include "mcg/errors.hpp"
#include "mcg/homology.hpp"
#include "support.hpp"

using namespace mcg;
using namespace mcg::testing;

namespace {

IntVector vec(std::initializer_list<long> xs) {
  IntVector v;
  for (long x : xs) v.push_back(x);
  return v;
}

IntVector random_class(std::size_t dim, long range = 3) {
  std::uniform_int_distribution<long> d(-range, range);
  IntVector v(dim);
  for (auto& x : v) x = d(rng());
  return v;
}

}  // namespace

TEST_CASE("pairing on the standard basis") {
  const IntVector a1 = vec({1, 0, 0, 0}), b1 = vec({0, 1, 0, 0}),
                  a2 = vec({0, 0, 1, 0});
  CHECK(symplectic_pairing(a1, b1) == 1);
  CHECK(symplectic_pairing(b1, a1) == -1);
  CHECK(symplectic_pairing(a1, a2) == 0);
  CHECK(symplectic_pairing(a1, a1) == 0);
}

TEST_CASE("transvection formula") {
  const IntVector a1 = vec({1, 0, 0, 0}), b1 = vec({0, 1, 0, 0});
  // T_a(x) = x + <x,a> a
  CHECK(transvection(a1) * b1 == vec({-1, 1, 0, 0}));
  CHECK(transvection(b1) * a1 == vec({1, 1, 0, 0}));
  CHECK(transvection(a1) * a1 == a1);
  CHECK(transvection(-a1) == transvection(a1));
  CHECK((transvection(a1) * inverse_transvection(a1)).is_identity());
  CHECK_THROWS_AS(transvection(vec({1, 0, 0})), DimensionError);
}

TEST_CASE("random transvection products are symplectic") {
  for (int it = 0; it < 300; ++it) {
    const std::size_t dim = 2 * (1 + pick(3));
    SpMatrix m = SpMatrix::identity(dim);
    for (std::size_t k = pick(6); k > 0; --k)
      m = m * (coin() > 0 ? transvection(random_class(dim))
                          : inverse_transvection(random_class(dim)));
    CHECK(is_symplectic(m.matrix()));
    CHECK((m * m.inverse()).is_identity());
    CHECK((m.inverse() * m).is_identity());
    const IntVector x = random_class(dim), y = random_class(dim);
    CHECK(symplectic_pairing(m * x, m * y) == symplectic_pairing(x, y));
  }
  CHECK_THROWS_AS(SpMatrix(IntMatrix{{2, 0}, {0, 1}}), NotSymplectic);
}

TEST_CASE("braid relation in Sp") {
  const IntVector a = vec({1, 0, 0, 0}), b = vec({0, 1, 0, 0}), c = vec({0, 0, 1, 0});
  CHECK(transvection(a) * transvection(b) * transvection(a) ==
        transvection(b) * transvection(a) * transvection(b));
  CHECK(transvection(a) * transvection(c) == transvection(c) * transvection(a));
  // (T_a T_b)^6 = I for a, b meeting once
  SpMatrix ab = transvection(a) * transvection(b), p = SpMatrix::identity(4);
  for (int i = 0; i < 6; ++i) p = p * ab;
  CHECK(p.is_identity());
}

TEST_CASE("rho of the known relators") {
  const Inputs& g2 = load("genus2_chain.mcg");
  CHECK(rho_image(g2.sys(), g2.word("rho").word()).is_identity());
  CHECK(rho_image(g2.sys(), g2.word("rho_prime").word()).is_identity());
  CHECK(is_homological_relator(g2.sys(), g2.word("s08").word()));
  CHECK_FALSE(is_homological_relator(g2.sys(), gens(g2.sys(), {{"c1", 1}})));

  const Inputs& rel = load("relations_g2.mcg");
  for (auto n : {"rho", "chain5", "chain4", "k12_rho", "rho_k45"})
    CHECK(is_homological_relator(rel.sys(), rel.word(n).word()));

  const Inputs& g3 = load("genus3_chain.mcg");
  CHECK(is_homological_relator(g3.sys(), g3.word("sigma3").word()));
  CHECK_FALSE(fully_classed(g3.sys(), g3.word("rho3").word()));
  CHECK_THROWS_AS(rho_image(g3.sys(), g3.word("rho3").word()), NoHomologyData);
}

TEST_CASE("rho is a homomorphism on words") {
  const CurveSystem& s = load("genus2_chain.mcg").sys();
  for (int it = 0; it < 300; ++it) {
    Word u = random_word(s, 6), v = random_word(s, 6);
    CHECK(rho_image(s, compose(u, v)) == rho_image(s, u) * rho_image(s, v));
    CHECK(rho_image(s, invert(u)) == rho_image(s, u).inverse());
  }
}

TEST_CASE("shadow ignores opaque curves") {
  const CurveSystem& s = load("genus3_chain.mcg").sys();
  Word w = gens(s, {{"c1", 1}, {"x1", 1}, {"c2", -1}, {"f1", 1}});
  CHECK(rho_shadow(s, w) == rho_image(s, gens(s, {{"c1", 1}, {"c2", -1}})));
}

TEST_CASE("first homology of total spaces") {
  const Inputs& g2 = load("genus2_chain.mcg");
  CHECK(h1_total_space(g2.sys(), g2.word("rho")).trivial());
  CHECK(h1_total_space(g2.sys(), g2.word("rho_prime")).trivial());
  CHECK(h1_total_space(g2.sys(), plain_word(g2.sys(), {"c1", "c1"})) ==
        AbelianGroup{3, {}});
  // a1 + 2a2 and a2 kill a1 and a2
  CHECK(h1_total_space(g2.sys(), plain_word(g2.sys(), {"h", "c5", "c2"})) ==
        AbelianGroup{1, {}});
  CHECK(h1_total_space(g2.sys(), plain_word(g2.sys(), {"h", "hb"})) ==
        AbelianGroup{2, {3}});
  CHECK(h1_total_space(g2.sys(), PositiveWord{}) == AbelianGroup{4, {}});
  const Inputs& g3 = load("genus3_chain.mcg");
  CHECK(h1_total_space(g3.sys(), g3.word("sigma3")).trivial());
}

TEST_CASE("abelian group text") {
  CHECK(AbelianGroup{}.str() == "0");
  CHECK(AbelianGroup{2, {}}.str() == "Z^2");
  CHECK(AbelianGroup{1, {2}}.str() == "Z + Z/2");
}
