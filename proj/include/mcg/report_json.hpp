#ifndef MCG_REPORT_JSON_HPP_
#define MCG_REPORT_JSON_HPP_

#include <json.hpp>

#include "mcg/invariants.hpp"
#include "mcg/moves.hpp"

namespace mcg {

// "a1 + 2a2 - b1", "0" for the zero class.
std::string format_class(const IntVector& v);

nlohmann::ordered_json to_json(const Census& c);
nlohmann::ordered_json to_json(const AbelianGroup& g);
nlohmann::ordered_json to_json(const InvariantReport& r);
nlohmann::ordered_json to_json(const SubstitutionReport& r);
// Replay plus its substitution summary; words are included per step when
// `words` is set.
nlohmann::ordered_json to_json(const ReplayResult& r, const SubstitutionReport& summary,
                               bool words);

}  // namespace mcg

#endif  // MCG_REPORT_JSON_HPP_
