#ifndef MCG_TESTS_SUPPORT_HPP_
#define MCG_TESTS_SUPPORT_HPP_

#include <map>
#include <random>
#include <string>
#include <vector>

#include "mcg/curve_system.hpp"
#include "mcg/dsl.hpp"
#include "mcg/word.hpp"

namespace mcg::testing {

inline std::string fixture(const std::string& name) {
  return std::string(MCG_FIXTURE_DIR) + "/" + name;
}

// Parsed once per process.
inline const Inputs& load(const std::string& name) {
  static std::map<std::string, Inputs> cache;
  auto it = cache.find(name);
  if (it == cache.end()) it = cache.emplace(name, parse_inputs({fixture(name)})).first;
  return it->second;
}

inline std::mt19937_64& rng() {
  static std::mt19937_64 gen(20240611);
  return gen;
}

inline std::size_t pick(std::size_t n) {
  return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng());
}

inline int coin() { return pick(2) ? 1 : -1; }

inline Conjugator random_conjugator(const CurveSystem& sys, std::size_t max_len) {
  Conjugator c;
  const auto& names = sys.curve_names();
  const std::size_t len = pick(max_len + 1);
  for (std::size_t i = 0; i < len; ++i) c.push_back({names[pick(names.size())], coin()});
  return c;
}

inline Letter random_letter(const CurveSystem& sys, std::size_t max_conj = 3) {
  const auto& names = sys.curve_names();
  return make_letter(sys, random_conjugator(sys, max_conj), names[pick(names.size())]);
}

inline Word random_word(const CurveSystem& sys, std::size_t max_len,
                        bool positive = false) {
  std::vector<Factor> fs;
  const std::size_t len = pick(max_len + 1);
  for (std::size_t i = 0; i < len; ++i)
    fs.push_back({random_letter(sys), positive ? 1 : coin()});
  return make_word(std::move(fs));
}

// Plain generators as a word, e.g. {"c1", -1}.
inline Word gens(const CurveSystem& sys, const Conjugator& c) {
  std::vector<Factor> fs;
  for (auto const& g : c) fs.push_back({plain_letter(sys, g.curve), g.exponent});
  return make_word(std::move(fs));
}

inline PositiveWord plain_word(const CurveSystem& sys,
                               const std::vector<std::string>& names) {
  std::vector<Letter> ls;
  for (auto const& n : names) ls.push_back(plain_letter(sys, n));
  return PositiveWord(ls);
}

}  // namespace mcg::testing

#endif  // MCG_TESTS_SUPPORT_HPP_
