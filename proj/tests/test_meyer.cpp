#include <doctest.h>

#include <cstdlib>

#include "mcg/errors.hpp"
#include "mcg/meyer.hpp"
#include "support.hpp"

using namespace mcg;
using namespace mcg::testing;

namespace {

// Random product of twists along classes of the given system.
SpMatrix random_sp(const CurveSystem& s, std::size_t max_len = 6) {
  std::vector<IntVector> classes;
  for (auto const& n : s.curve_names())
    if (auto const& c = s.class_of(n); c && !is_zero(*c)) classes.push_back(*c);
  SpMatrix m = SpMatrix::identity(s.dimension());
  for (std::size_t k = pick(max_len + 1); k > 0; --k) {
    const IntVector& a = classes[pick(classes.size())];
    m = m * (coin() > 0 ? transvection(a) : inverse_transvection(a));
  }
  return m;
}

const CurveSystem& system_for(int it) {
  return it % 2 ? load("genus3_chain.mcg").sys() : load("genus2_chain.mcg").sys();
}

}  // namespace

TEST_CASE("signature of rational forms") {
  RationalForm q(3);
  q(0, 0) = 1;
  q(1, 1) = -1;
  CHECK(signature(q) == 0);
  RationalForm h(2);
  h(0, 1) = 1;
  h(1, 0) = 1;
  CHECK(signature(h) == 0);
  RationalForm p(2);
  p(0, 0) = 2;
  p(0, 1) = 1;
  p(1, 0) = 1;
  p(1, 1) = 2;
  CHECK(signature(p) == 2);
  CHECK(signature(RationalForm(0)) == 0);
}

TEST_CASE("cocycle on small cases") {
  const CurveSystem& s = load("genus2_chain.mcg").sys();
  const SpMatrix ta = transvection(*s.class_of("c1"));
  const SpMatrix id = SpMatrix::identity(4);
  CHECK(meyer_tau(ta, ta) == -1);
  CHECK(meyer_tau(id, ta) == 0);
  CHECK(meyer_tau(ta, id) == 0);
  CHECK(meyer_tau(ta, ta.inverse()) == 0);
  CHECK(meyer_tau(ta.inverse(), ta.inverse()) == 1);
  CHECK_THROWS_AS(meyer_tau(IntMatrix{{2, 0}, {0, 1}}, IntMatrix::identity(2)),
                  NotSymplectic);
}

TEST_CASE("cocycle identity, symmetry, conjugation invariance, bound") {
  for (int it = 0; it < 1200; ++it) {
    const CurveSystem& s = system_for(it);
    const SpMatrix a = random_sp(s), b = random_sp(s), c = random_sp(s);
    const int tab = meyer_tau(a, b);
    CHECK(tab + meyer_tau(a * b, c) == meyer_tau(a, b * c) + meyer_tau(b, c));
    CHECK(tab == meyer_tau(b, a));
    CHECK(tab == meyer_tau(c * a * c.inverse(), c * b * c.inverse()));
    CHECK(std::abs(tab) <= 2 * s.genus());
    CHECK(meyer_tau(SpMatrix::identity(s.dimension()), a) == 0);
    CHECK(meyer_tau(a, a.inverse()) == 0);
  }
}

TEST_CASE("signatures of known fibrations") {
  const Inputs& g2 = load("genus2_chain.mcg");
  CHECK(factorization_signature(g2.sys(), g2.word("rho")) == -12);
  CHECK(factorization_signature(g2.sys(), g2.word("rho_prime")) == -8);
  const Inputs& rel = load("relations_g2.mcg");
  // K3 # 2 CP2-bar has signature -18
  CHECK(factorization_signature(rel.sys(), rel.word("chain5")) == -18);
  CHECK(factorization_signature(rel.sys(), rel.word("chain4")) == -24);
  CHECK(factorization_signature(rel.sys(), rel.word("k12_rho")) == -20);
  CHECK(factorization_signature(rel.sys(), rel.word("rho_k45")) == -20);
  const Inputs& g3 = load("genus3_chain.mcg");
  CHECK(factorization_signature(g3.sys(), g3.word("sigma3")) == -16);
  CHECK_THROWS_AS(factorization_signature(g2.sys(), plain_word(g2.sys(), {"c1"})),
                  NotARelator);
  CHECK_THROWS_AS(factorization_signature(g3.sys(), g3.word("rho3")), NoHomologyData);
}

TEST_CASE("signature is invariant under cyclic rotation") {
  const Inputs& g2 = load("genus2_chain.mcg");
  const auto letters = g2.word("rho_prime").letters();
  for (std::size_t k = 0; k < letters.size(); ++k) {
    std::vector<Letter> rot(letters.begin() + k, letters.end());
    rot.insert(rot.end(), letters.begin(), letters.begin() + k);
    CHECK(factorization_signature(g2.sys(), PositiveWord(rot)) == -8);
  }
}

TEST_CASE("hyperelliptic signature formula") {
  CHECK(hyperelliptic_signature(2, 20, {}) == -12);
  CHECK(hyperelliptic_signature(2, 12, {{1, 4}}) == -8);
  CHECK(hyperelliptic_signature(2, 6, {{1, 2}}) == -4);
  CHECK(hyperelliptic_signature(3, 28, {}) == -16);
  CHECK(hyperelliptic_signature(2, 30, {}) == -18);
  CHECK(hyperelliptic_signature(2, 40, {}) == -24);
  CHECK(denominator(hyperelliptic_signature(2, 1, {})) != 1);
}

TEST_CASE("cocycle sum agrees with the hyperelliptic formula") {
  // every relator built from the chain c1..c5 is hyperelliptic
  const Inputs& rel = load("relations_g2.mcg");
  for (auto n : {"rho", "chain5", "chain4"}) {
    const PositiveWord& w = rel.word(n);
    CHECK(Rational(factorization_signature(rel.sys(), w)) ==
          hyperelliptic_signature(2, long(w.size()), {}));
  }
}
