#ifndef MCG_CURVE_SYSTEM_HPP_
#define MCG_CURVE_SYSTEM_HPP_

// Surface data: genus, named curves with homology classes in the basis
// a1,b1,...,ag,bg, declared geometric facts, and declared relations.
//
// Orientation of a class is a free per-curve choice.  Transvections satisfy
// T_a = T_{-a}, so no invariant depends on it.

#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "mcg/integer_matrix.hpp"
#include "mcg/word.hpp"

namespace mcg {

enum class RelationKind { Lantern, Braid, Commute, Chain2 };

std::string to_string(RelationKind kind);

// A declared relation.  Arity by kind:
//   lantern  left = d1 d2 d3 d4, right = a b c     (d1 d2 d3 d4 = a b c)
//   braid    left = a b                           (a b a = b a b)
//   commute  left = a b                           (a b = b a)
//   chain2   left = a b, right = c                ((a b)^6 = c)
// Entries may be conjugated letters.
struct RelationDecl {
  std::string name;
  RelationKind kind = RelationKind::Lantern;
  std::vector<Letter> left;
  std::vector<Letter> right;
};

// The word consumed by a forward substitution and the word it emits.
std::pair<std::vector<Letter>, std::vector<Letter>> relation_sides(
    const RelationDecl& r);

class CurveSystem {
 public:
  explicit CurveSystem(int genus);

  SystemId id() const noexcept { return id_; }
  int genus() const noexcept { return genus_; }
  std::size_t dimension() const noexcept { return 2 * std::size_t(genus_); }

  // Builders.  `cls` is absent for curves known only by name.
  void add_curve(const std::string& name, std::optional<IntVector> cls);
  void declare_disjoint(const std::string& a, const std::string& b);
  void declare_meet_once(const std::string& a, const std::string& b);
  void set_separating_type(const std::string& name, int h);
  void add_relation(RelationDecl r);

  bool has_curve(const std::string& name) const;
  // Declaration order.
  const std::vector<std::string>& curve_names() const noexcept {
    return order_;
  }
  // Throws UnknownCurve.
  const std::optional<IntVector>& class_of(const std::string& name) const;

  bool disjoint(const std::string& a, const std::string& b) const;
  bool meets_once(const std::string& a, const std::string& b) const;
  // t_a and t_b commute as far as the declarations tell.
  bool commutes(const std::string& a, const std::string& b) const {
    return a == b || disjoint(a, b);
  }
  // t_twist fixes `curve`.
  bool fixes(const std::string& twist, const std::string& curve) const {
    return commutes(twist, curve);
  }
  std::optional<int> separating_type(const std::string& name) const;

  const std::set<std::pair<std::string, std::string>>& disjoint_pairs()
      const noexcept {
    return disjoint_;
  }
  const std::set<std::pair<std::string, std::string>>& meet_once_pairs()
      const noexcept {
    return meet_once_;
  }
  const std::vector<RelationDecl>& relations() const noexcept {
    return relations_;
  }
  // Throws Error when no relation has this name.
  const RelationDecl& relation(const std::string& name) const;

 private:
  void require(const std::string& name) const;

  SystemId id_;
  int genus_;
  std::vector<std::string> order_;
  std::map<std::string, std::optional<IntVector>> classes_;
  std::set<std::pair<std::string, std::string>> disjoint_;
  std::set<std::pair<std::string, std::string>> meet_once_;
  std::map<std::string, int> septype_;
  std::vector<RelationDecl> relations_;
};

// <x, y> = x^T J y with J block diagonal [[0,1],[-1,0]] per (a_i, b_i).
Integer symplectic_pairing(const IntVector& x, const IntVector& y);

// Class of [W]c, i.e. rho(W) [c].  Throws UnknownCurve, NoHomologyData.
IntVector homology_class_of_letter(const CurveSystem& sys, const Letter& l);
// Empty when some curve involved carries no class.
std::optional<IntVector> try_homology_class(const CurveSystem& sys,
                                            const Letter& l);

enum class CurveType { Nonseparating, Separating, Unclassified };

struct LetterClass {
  CurveType type = CurveType::Unclassified;
  std::optional<int> genus_split;  // h, for separating curves when known
};

// Separating iff null-homologous.  For genus 2 the split is always h = 1;
// otherwise it comes from a `septype` declaration on the base curve.
LetterClass classify_letter(const CurveSystem& sys, const Letter& l);

enum class RelationStatus { Valid, Invalid, Unverifiable };

// Homological check in Sp(2g, Z); Unverifiable when a curve has no class.
// Throws MalformedRelation on wrong arity.
RelationStatus relation_status(const CurveSystem& sys, const RelationDecl& r);
bool validate_relation_decl(const CurveSystem& sys, const RelationDecl& r);

// Empty iff every declaration is consistent.  Each entry names the culprit.
std::vector<std::string> validate_system(const CurveSystem& sys);

// Classes of the three right-hand entries of a lantern, known ones included.
using LanternSolution = std::vector<IntVector>;

// Exhaustive search over coefficient vectors in [-bound, bound]^{2g} for the
// unknown right-hand classes (nullopt entries of `known_right`) making the
// lantern matrix identity hold.
std::vector<LanternSolution> solve_lantern_classes(
    const CurveSystem& sys, const std::vector<std::string>& boundary,
    const std::vector<std::optional<std::string>>& known_right, int bound);

}  // namespace mcg

#endif  // MCG_CURVE_SYSTEM_HPP_
