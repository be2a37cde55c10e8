#include "mcg/cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <sstream>

#include "mcg/dsl.hpp"
#include "mcg/errors.hpp"
#include "mcg/invariants.hpp"
#include "mcg/report_json.hpp"

namespace mcg {

namespace {

std::string opt_str(const std::optional<long>& v) {
  return v ? std::to_string(*v) : std::string("?");
}

std::string signed_str(const std::optional<long>& v) {
  if (!v) return "?";
  return (*v > 0 ? "+" : "") + std::to_string(*v);
}

// A word name, or failing that an expression over the system.
PositiveWord resolve_word(const Inputs& in, const std::string& text) {
  auto it = in.words.find(text);
  if (it != in.words.end()) return it->second;
  return PositiveWord(parse_word_expr(in.sys(), text, in.words));
}

int cmd_check(const Inputs& in, std::ostream& out) {
  const CurveSystem& sys = in.sys();
  out << "genus " << sys.genus() << ", " << sys.curve_names().size() << " curves, "
      << sys.relations().size() << " relations, " << in.words.size() << " words, "
      << in.scripts.size() << " scripts\n";
  for (auto const& r : sys.relations()) {
    const RelationStatus s = relation_status(sys, r);
    out << "  " << to_string(r.kind) << " " << r.name << ": "
        << (s == RelationStatus::Valid     ? "valid"
            : s == RelationStatus::Invalid ? "INVALID"
                                           : "unverifiable (missing homology data)")
        << "\n";
  }
  for (auto const& name : in.word_order) {
    const PositiveWord& w = in.words.at(name);
    out << "  word " << name << ": " << w.size() << " letters";
    if (fully_classed(sys, w.word()))
      out << (is_homological_relator(sys, w.word()) ? ", homological relator"
                                                     : ", not a relator");
    out << "\n";
  }
  out << "ok\n";
  return kExitOk;
}

void print_report(const InvariantReport& r, std::ostream& out) {
  out << "genus " << r.genus << ", " << r.letters << " letters\n";
  out << "e = " << r.euler << "\n";
  out << "sigma = " << opt_str(r.signature) << "\n";
  out << "H1 = " << (r.h1 ? r.h1->str() : std::string("?")) << "\n";
  out << "census: n0 = " << r.census.n0;
  for (auto const& [h, n] : r.census.nh) out << ", n" << h << " = " << n;
  if (r.census.separating_unknown)
    out << ", separating of unknown type = " << r.census.separating_unknown;
  if (r.census.unclassified) out << ", unclassified = " << r.census.unclassified;
  out << "\n";
  if (r.b2_plus) out << "b2+ = " << *r.b2_plus << ", b2- = " << *r.b2_minus << "\n";
  out << "separating factor: " << (r.has_separating_factor ? "yes" : "no");
  if (r.sigma_mod16) out << ", sigma mod 16 = " << *r.sigma_mod16;
  out << "\n";
  for (auto const& a : r.annotations) out << "note: " << a << "\n";
}

void print_replay(const ReplayResult& r, const SubstitutionReport& s, bool trace,
                  std::ostream& out) {
  out << "script " << r.script << ": " << r.source.size() << " -> "
      << r.final_word.size() << " letters\n";
  if (trace) {
    out << "   0  start  len=" << r.source.size() << " e=" << r.initial_euler
        << " sigma=" << opt_str(r.initial_sigma) << "\n       " << r.source.str()
        << "\n";
    for (auto const& st : r.steps) {
      out << std::string(st.index < 10 ? 3 : st.index < 100 ? 2 : 1, ' ') << st.index
          << "  " << st.move << "  len=" << st.length << " e=" << st.euler
          << " sigma=" << opt_str(st.sigma) << " de=" << st.delta_euler
          << " dsigma=" << signed_str(st.delta_sigma) << " rho=" << to_string(st.rho)
          << "\n       " << st.word.str() << "\n";
    }
  }
  if (r.failure) {
    out << "FAILED at step " << r.failure->step << " (" << r.failure->move
        << "): " << r.failure->message << "\n";
    return;
  }
  for (auto const& l : s.lines) out << l << "\n";
  for (auto const& c : s.checklist) out << "  [" << c.status << "] " << c.item << "\n";
}

int cmd_sites(const Inputs& in, const std::string& word, const std::string& rel,
              std::ostream& out) {
  const PositiveWord w = resolve_word(in, word);
  const RelationDecl& r = in.sys().relation(rel);
  auto sites = find_sites(in.sys(), w, r);
  for (auto const& s : sites)
    out << r.name << " @ " << s.position << " "
        << (s.direction == Direction::Forward ? "fwd" : "rev") << "\n";
  out << sites.size() << " site(s)\n";
  return kExitOk;
}

int cmd_solve_lantern(const Inputs& in, const std::vector<std::string>& boundary,
                      const std::string& known, int bound, std::ostream& out,
                      std::ostream& err) {
  std::vector<std::optional<std::string>> right;
  std::stringstream ss(known);
  std::string item;
  while (std::getline(ss, item, ','))
    right.push_back(item == "?" ? std::nullopt : std::optional<std::string>(item));
  if (right.size() != 3) {
    err << "--known needs three comma-separated entries, '?' for unknown\n";
    return kExitUsage;
  }
  auto sols = solve_lantern_classes(in.sys(), boundary, right, bound);
  for (auto const& s : sols) {
    out << "(" << format_class(s[0]) << ", " << format_class(s[1]) << ", "
        << format_class(s[2]) << ")\n";
  }
  out << sols.size() << " solution(s) with coefficients in [-" << bound << ", "
      << bound << "]\n";
  return sols.empty() ? kExitVerification : kExitOk;
}

}  // namespace

int run_command(const std::vector<std::string>& args, std::ostream& out,
                std::ostream& err) {
  CLI::App app{"Positive relator calculus on curve systems", "mcg"};
  app.require_subcommand(1);

  std::string system_path, word_name, script_name, relation_name, known;
  std::vector<std::string> boundary;
  bool json = false, trace = false;
  int bound = 2;

  auto* check = app.add_subcommand("check", "parse and validate a system file");
  check->add_option("system", system_path)->required();

  auto* inv = app.add_subcommand("invariants", "invariants of a word");
  inv->add_option("system", system_path)->required();
  inv->add_option("word", word_name, "word name or expression")->required();
  inv->add_flag("--json", json);

  auto* rep = app.add_subcommand("replay", "replay a derivation script");
  rep->add_option("system", system_path)->required();
  rep->add_option("script", script_name)->required();
  rep->add_flag("--json", json);
  rep->add_flag("--trace", trace);

  auto* sites = app.add_subcommand("sites", "substitution sites of a relation");
  sites->add_option("system", system_path)->required();
  sites->add_option("word", word_name)->required();
  sites->add_option("relation", relation_name)->required();

  auto* solve = app.add_subcommand("solve-lantern", "search lantern completions");
  solve->add_option("system", system_path)->required();
  solve->add_option("boundary", boundary, "d1 d2 d3 d4")->required()->expected(4);
  solve->add_option("--known", known, "e.g. c1,?,?")->required();
  solve->add_option("--bound", bound)->check(CLI::Range(1, 6));

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n";
    return kExitUsage;
  }

  Inputs in;
  try {
    in = parse_inputs({system_path});
  } catch (const ValidationError& e) {
    err << "validation failed:" << e.what() << "\n";
    return check->parsed() ? kExitVerification : kExitUsage;
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return kExitUsage;
  }

  try {
    if (check->parsed()) return cmd_check(in, out);

    if (inv->parsed()) {
      PositiveWord w;
      try {
        w = resolve_word(in, word_name);
      } catch (const ParseError& e) {
        err << "unknown word or bad expression: " << e.what() << "\n";
        return kExitUsage;
      }
      try {
        const InvariantReport r = full_report(in.sys(), w);
        if (json) out << to_json(r).dump(2) << "\n";
        else print_report(r, out);
      } catch (const NotARelator& e) {
        if (json) out << nlohmann::ordered_json{{"error", e.what()}}.dump(2) << "\n";
        err << e.what() << "\n";
        return kExitVerification;
      }
      return kExitOk;
    }

    if (rep->parsed()) {
      if (!in.scripts.count(script_name)) {
        err << "unknown script '" << script_name << "'\n";
        return kExitUsage;
      }
      const ReplayResult r = replay_script(in.sys(), in.words, in.script(script_name));
      const SubstitutionReport s = substitution_delta_report(in.sys(), r);
      if (json) out << to_json(r, s, trace).dump(2) << "\n";
      else print_replay(r, s, trace, out);
      return r.ok() ? kExitOk : kExitVerification;
    }

    if (sites->parsed()) {
      if (!in.words.count(word_name)) {
        err << "unknown word '" << word_name << "'\n";
        return kExitUsage;
      }
      return cmd_sites(in, word_name, relation_name, out);
    }

    if (solve->parsed())
      return cmd_solve_lantern(in, boundary, known, bound, out, err);
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace mcg
