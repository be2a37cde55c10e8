#include "mcg/report_json.hpp"

namespace mcg {

using nlohmann::ordered_json;

namespace {

template <class T>
ordered_json opt(const std::optional<T>& v) {
  return v ? ordered_json(*v) : ordered_json(nullptr);
}

ordered_json integer(const Integer& v) {
  if (v >= std::numeric_limits<long long>::min() &&
      v <= std::numeric_limits<long long>::max())
    return v.convert_to<long long>();
  return v.str();
}

const char* direction_name(Direction d) {
  return d == Direction::Forward ? "fwd" : "rev";
}

}  // namespace

std::string format_class(const IntVector& v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i] == 0) continue;
    const std::string sym =
        std::string(i % 2 ? "b" : "a") + std::to_string(i / 2 + 1);
    Integer c = v[i];
    if (out.empty()) {
      if (c < 0) out += "-";
    } else {
      out += c < 0 ? " - " : " + ";
    }
    if (c < 0) c = -c;
    if (c != 1) out += c.str();
    out += sym;
  }
  return out.empty() ? "0" : out;
}

ordered_json to_json(const Census& c) {
  ordered_json nh = ordered_json::object();
  for (auto const& [h, count] : c.nh) nh[std::to_string(h)] = count;
  return {{"n0", c.n0},
          {"nh", nh},
          {"separating_unknown_type", c.separating_unknown},
          {"unclassified", c.unclassified}};
}

ordered_json to_json(const AbelianGroup& g) {
  ordered_json torsion = ordered_json::array();
  for (auto const& t : g.torsion) torsion.push_back(integer(t));
  return {{"rank", g.rank}, {"torsion", torsion}, {"text", g.str()}};
}

ordered_json to_json(const InvariantReport& r) {
  ordered_json j;
  j["genus"] = r.genus;
  j["letters"] = r.letters;
  j["census"] = to_json(r.census);
  j["euler"] = r.euler;
  j["signature"] = opt(r.signature);
  j["h1"] = r.h1 ? to_json(*r.h1) : ordered_json(nullptr);
  j["b1"] = opt(r.b1);
  j["b2_plus"] = opt(r.b2_plus);
  j["b2_minus"] = opt(r.b2_minus);
  j["flags"] = {{"has_separating_factor", r.has_separating_factor},
                {"sigma_mod16", opt(r.sigma_mod16)}};
  j["annotations"] = r.annotations;
  return j;
}

ordered_json to_json(const SubstitutionReport& r) {
  ordered_json other = ordered_json::object();
  for (auto const& [kind, count] : r.other) other[to_string(kind)] = count;
  ordered_json checklist = ordered_json::array();
  for (auto const& c : r.checklist)
    checklist.push_back({{"item", c.item}, {"status", c.status}});
  return {{"k", r.k},
          {"lantern_reverse", r.lantern_reverse},
          {"other_substitutions", other},
          {"delta_euler", r.delta_euler},
          {"delta_sigma", opt(r.delta_sigma)},
          {"deltas_verified", r.deltas_verified},
          {"lines", r.lines},
          {"checklist", checklist}};
}

ordered_json to_json(const ReplayResult& r, const SubstitutionReport& summary,
                     bool words) {
  ordered_json steps = ordered_json::array();
  for (auto const& s : r.steps) {
    ordered_json j;
    j["index"] = s.index;
    j["move"] = s.move;
    j["length"] = s.length;
    j["euler"] = s.euler;
    j["sigma"] = opt(s.sigma);
    j["delta_euler"] = s.delta_euler;
    j["delta_sigma"] = opt(s.delta_sigma);
    j["rho"] = to_string(s.rho);
    j["substitution"] =
        s.substitution ? ordered_json(to_string(*s.substitution)) : ordered_json(nullptr);
    j["direction"] =
        s.direction ? ordered_json(direction_name(*s.direction)) : ordered_json(nullptr);
    if (words) j["word"] = s.word.str();
    steps.push_back(std::move(j));
  }
  ordered_json j;
  j["script"] = r.script;
  j["ok"] = r.ok();
  j["source"] = r.source.str();
  j["initial_euler"] = r.initial_euler;
  j["initial_sigma"] = opt(r.initial_sigma);
  j["steps"] = steps;
  j["final_word"] = r.final_word.str();
  j["failure"] = r.failure ? ordered_json{{"step", r.failure->step},
                                          {"move", r.failure->move},
                                          {"message", r.failure->message}}
                           : ordered_json(nullptr);
  j["summary"] = to_json(summary);
  return j;
}

}  // namespace mcg
