#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <json.hpp>
#include <sstream>

#include "mcg/cli.hpp"
#include "support.hpp"

using namespace mcg;
using namespace mcg::testing;

namespace {

struct Run {
  int code = -1;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  Run r;
  r.code = run_command(args, out, err);
  r.out = out.str();
  r.err = err.str();
  return r;
}

std::string golden(const std::string& name) {
  std::ifstream in(std::string(MCG_GOLDEN_DIR) + "/" + name);
  REQUIRE(in.good());
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string write_temp(const std::string& name, const std::string& text) {
  auto p = std::filesystem::temp_directory_path() / name;
  std::ofstream(p) << text;
  return p.string();
}

std::vector<std::string> keys(const nlohmann::ordered_json& j) {
  std::vector<std::string> out;
  for (auto it = j.begin(); it != j.end(); ++it) out.push_back(it.key());
  return out;
}

const std::string g2 = fixture("genus2_chain.mcg");
const std::string g3 = fixture("genus3_chain.mcg");

}  // namespace

TEST_CASE("golden outputs") {
  struct Case {
    std::vector<std::string> args;
    const char* file;
  };
  const std::vector<Case> cases = {
      {{"invariants", g2, "rho"}, "invariants_rho.txt"},
      {{"invariants", g2, "rho", "--json"}, "invariants_rho.json"},
      {{"invariants", g2, "rho_prime", "--json"}, "invariants_rho_prime.json"},
      {{"invariants", g3, "rho3"}, "invariants_rho3.txt"},
      {{"replay", g2, "ex53"}, "replay_ex53.txt"},
      {{"replay", g2, "ex53", "--json"}, "replay_ex53.json"},
      {{"replay", g3, "ex52"}, "replay_ex52.txt"},
      {{"check", g2}, "check_genus2.txt"},
      {{"sites", g3, "tau", "Lf"}, "sites_tau_lf.txt"},
      {{"solve-lantern", g2, "c3", "c5", "c5", "c3", "--known", "c1,?,?"}, "solve_l1.txt"},
  };
  for (auto const& c : cases) {
    Run r = run(c.args);
    CHECK_MESSAGE(r.code == 0, c.file);
    CHECK_MESSAGE(r.out == golden(c.file), c.file);
  }
}

TEST_CASE("invariants of rho") {
  Run r = run({"invariants", g2, "rho", "--json"});
  REQUIRE(r.code == 0);
  auto j = nlohmann::ordered_json::parse(r.out);
  CHECK(j["euler"] == 16);
  CHECK(j["signature"] == -12);
  CHECK(j["h1"]["text"] == "0");
  CHECK(keys(j) == std::vector<std::string>{"genus", "letters", "census", "euler",
                                            "signature", "h1", "b1", "b2_plus",
                                            "b2_minus", "flags", "annotations"});
  // same input, same bytes
  CHECK(run({"invariants", g2, "rho", "--json"}).out == r.out);
}

TEST_CASE("expressions as words") {
  Run r = run({"invariants", g2, "rho rho"});
  CHECK(r.code == 0);
  CHECK(r.out.find("e = 36") != std::string::npos);
  CHECK(r.out.find("sigma = -24") != std::string::npos);
  CHECK(r.out.find("b2+ = 5, b2- = 29") != std::string::npos);
}

TEST_CASE("replay ex53") {
  Run r = run({"replay", g2, "ex53"});
  CHECK(r.code == 0);
  CHECK(r.out.find("4 L-substitutions, Δe=-4, Δσ=+4") != std::string::npos);
  Run j = run({"replay", g2, "ex53", "--json"});
  auto doc = nlohmann::ordered_json::parse(j.out);
  CHECK(doc["ok"] == true);
  CHECK(doc["summary"]["k"] == 4);
  CHECK(doc["summary"]["delta_euler"] == -4);
  CHECK(doc["summary"]["delta_sigma"] == 4);
  CHECK(doc["steps"].size() == 52);
  CHECK(doc["failure"].is_null());
  Run t = run({"replay", g2, "ex53", "--trace"});
  CHECK(t.code == 0);
  CHECK(t.out.find(" 52  subst L3 @ 3 fwd  len=16 e=12 sigma=-8") != std::string::npos);
}

TEST_CASE("corrupted script step") {
  std::string text = slurp(g2);
  const std::string from = "  subst L2 @ 1 fwd\n";
  REQUIRE(text.find(from) != std::string::npos);
  text.replace(text.find(from), from.size(), "  subst L2 @ 2 fwd\n");
  const std::string path = write_temp("mcg_ex53_corrupt.mcg", text);
  Run r = run({"replay", path, "ex53"});
  CHECK(r.code == 1);
  CHECK(r.out.find("FAILED at step 15 (subst L2 @ 2 fwd)") != std::string::npos);
  Run j = run({"replay", path, "ex53", "--json"});
  CHECK(j.code == 1);
  auto doc = nlohmann::ordered_json::parse(j.out);
  CHECK(doc["ok"] == false);
  CHECK(doc["failure"]["step"] == 15);
}

TEST_CASE("exit codes") {
  CHECK(run({}).code == 2);
  CHECK(run({"frobnicate"}).code == 2);
  CHECK(run({"--help"}).code == 0);
  CHECK(run({"check", fixture("missing.mcg")}).code == 2);
  CHECK(run({"invariants", g2, "nope"}).code == 2);
  CHECK(run({"invariants", g2, "c1 c2"}).code == 1);
  CHECK(run({"replay", g2, "nope"}).code == 2);
  CHECK(run({"sites", g2, "rho", "L9"}).code == 2);
  CHECK(run({"solve-lantern", g2, "c1", "c1", "c3", "c3", "--known", "c1,?,c5"}).code == 1);
  CHECK(run({"solve-lantern", g2, "c1", "c1", "c3", "c3", "--known", "c1,?"}).code == 2);
  CHECK(run({"solve-lantern", g2, "c1", "c1", "c3", "c3", "--known", "?,?,c5", "--bound",
             "9"})
            .code == 2);

  const std::string bad_syntax = write_temp("mcg_bad_syntax.mcg", "genus 2\nword w = (c1)^0\n");
  Run s = run({"check", bad_syntax});
  CHECK(s.code == 2);
  CHECK(s.err.find(":2:") != std::string::npos);

  const std::string invalid =
      write_temp("mcg_invalid.mcg", "genus 2\ncurve c1 = a1\ncurve c2 = b1\ndisjoint c1 c2\n");
  Run v = run({"check", invalid});
  CHECK(v.code == 1);
  CHECK(v.err.find("disjoint c1 c2: pairing is 1") != std::string::npos);
  CHECK(run({"invariants", invalid, "c1"}).code == 2);
}
