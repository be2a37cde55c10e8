#ifndef MCG_INVARIANTS_HPP_
#define MCG_INVARIANTS_HPP_

// Fibration-level arithmetic on positive relators.

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "mcg/curve_system.hpp"
#include "mcg/homology.hpp"
#include "mcg/moves.hpp"
#include "mcg/word.hpp"

namespace mcg {

struct Census {
  long n0 = 0;                  // nonseparating
  std::map<int, long> nh;       // separating of type h
  long separating_unknown = 0;  // separating, type undeclared
  long unclassified = 0;        // no homology data

  long separating() const;
  bool operator==(const Census&) const = default;
};

Census singular_fiber_census(const CurveSystem& sys, const PositiveWord& w);

// 4 - 4g + n.
long euler_characteristic(const CurveSystem& sys, const PositiveWord& w);

// rho . [W]sigma.  Throws SystemMismatch, and NotARelator when a fully
// classed summand is not a homological relator.
PositiveWord fiber_sum(const CurveSystem& sys, const PositiveWord& rho,
                       const PositiveWord& sigma, const Word& w = {});

struct BettiSplit {
  long b2_plus = 0;
  long b2_minus = 0;
};

// b2+ = (e + sigma - 2)/2, b2- = (e - sigma - 2)/2, valid when b1 = 0.
// Throws Error when either is negative or not an integer.
BettiSplit betti_split(long euler, long sigma);

struct InvariantReport {
  int genus = 0;
  std::size_t letters = 0;
  Census census;
  long euler = 0;
  std::optional<long> signature;     // needs every letter classed
  std::optional<AbelianGroup> h1;    // likewise
  std::optional<long> b1;
  std::optional<long> b2_plus;       // only when H1 = 0
  std::optional<long> b2_minus;
  bool has_separating_factor = false;
  std::optional<long> sigma_mod16;
  std::vector<std::string> annotations;

  bool operator==(const InvariantReport&) const = default;
};

// Throws NotARelator when the word is fully classed but rho(w) != I.
// Words with opaque letters get e and the census only.
InvariantReport full_report(const CurveSystem& sys, const PositiveWord& w);

struct ChecklistItem {
  std::string item;
  std::string status;  // verified, failed, not-machine-checkable
};

struct SubstitutionReport {
  long k = 0;  // forward lantern substitutions
  long lantern_reverse = 0;
  std::map<RelationKind, long> other;  // non-lantern substitutions by kind
  long delta_euler = 0;
  std::optional<long> delta_sigma;
  bool deltas_verified = false;  // delta_euler == -k and delta_sigma == +k
  std::vector<std::string> lines;
  std::vector<ChecklistItem> checklist;
};

SubstitutionReport substitution_delta_report(const CurveSystem& sys,
                                             const ReplayResult& replay);

// Static table: the pieces swapped by a substitution of each relation kind.
struct RelationManifolds {
  std::string lhs;
  std::string rhs;
  std::string boundary;
};

const RelationManifolds& relation_manifolds(RelationKind kind);

}  // namespace mcg

#endif  // MCG_INVARIANTS_HPP_
