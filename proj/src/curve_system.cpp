#include "mcg/curve_system.hpp"

#include <atomic>
#include <cmath>

#include "mcg/errors.hpp"
#include "mcg/homology.hpp"

namespace mcg {

std::string to_string(RelationKind kind) {
  switch (kind) {
    case RelationKind::Lantern: return "lantern";
    case RelationKind::Braid: return "braid";
    case RelationKind::Commute: return "commute";
    case RelationKind::Chain2: return "chain2";
  }
  return "?";
}

namespace {

std::pair<std::string, std::string> key(const std::string& a,
                                        const std::string& b) {
  return a < b ? std::make_pair(a, b) : std::make_pair(b, a);
}

void check_arity(const RelationDecl& r) {
  auto bad = [&](const char* want) {
    throw MalformedRelation("relation '" + r.name + "' (" +
                            to_string(r.kind) + ") needs " + want);
  };
  switch (r.kind) {
    case RelationKind::Lantern:
      if (r.left.size() != 4 || r.right.size() != 3) bad("4 => 3 curves");
      break;
    case RelationKind::Braid:
    case RelationKind::Commute:
      if (r.left.size() != 2 || !r.right.empty()) bad("2 curves");
      break;
    case RelationKind::Chain2:
      if (r.left.size() != 2 || r.right.size() != 1) bad("2 => 1 curves");
      break;
  }
}

}  // namespace

std::pair<std::vector<Letter>, std::vector<Letter>> relation_sides(
    const RelationDecl& r) {
  check_arity(r);
  const auto& l = r.left;
  switch (r.kind) {
    case RelationKind::Lantern:
      return {r.left, r.right};
    case RelationKind::Braid:
      return {{l[0], l[1], l[0]}, {l[1], l[0], l[1]}};
    case RelationKind::Commute:
      return {{l[0], l[1]}, {l[1], l[0]}};
    case RelationKind::Chain2: {
      std::vector<Letter> chain;
      for (int i = 0; i < 6; ++i) {
        chain.push_back(l[0]);
        chain.push_back(l[1]);
      }
      return {chain, r.right};
    }
  }
  return {};
}

CurveSystem::CurveSystem(int genus) : genus_(genus) {
  static std::atomic<SystemId> next{1};
  id_ = next++;
  if (genus < 1) throw Error("genus must be positive");
}

void CurveSystem::require(const std::string& name) const {
  if (!has_curve(name)) throw UnknownCurve(name);
}

void CurveSystem::add_curve(const std::string& name,
                            std::optional<IntVector> cls) {
  if (has_curve(name)) throw Error("curve '" + name + "' declared twice");
  if (cls && cls->size() != dimension())
    throw DimensionError("class of '" + name + "' has length " +
                         std::to_string(cls->size()) + ", expected " +
                         std::to_string(dimension()));
  order_.push_back(name);
  classes_.emplace(name, std::move(cls));
}

void CurveSystem::declare_disjoint(const std::string& a, const std::string& b) {
  require(a);
  require(b);
  if (a != b) disjoint_.insert(key(a, b));
}

void CurveSystem::declare_meet_once(const std::string& a,
                                    const std::string& b) {
  require(a);
  require(b);
  if (a == b) throw Error("a curve cannot meet itself once");
  meet_once_.insert(key(a, b));
}

void CurveSystem::set_separating_type(const std::string& name, int h) {
  require(name);
  septype_[name] = h;
}

void CurveSystem::add_relation(RelationDecl r) {
  check_arity(r);
  for (auto const* side : {&r.left, &r.right})
    for (auto const& l : *side)
      if (l.system() != id_) throw SystemMismatch();
  for (auto const& existing : relations_)
    if (existing.name == r.name)
      throw Error("relation '" + r.name + "' declared twice");
  relations_.push_back(std::move(r));
}

bool CurveSystem::has_curve(const std::string& name) const {
  return classes_.count(name) != 0;
}

const std::optional<IntVector>& CurveSystem::class_of(
    const std::string& name) const {
  auto it = classes_.find(name);
  if (it == classes_.end()) throw UnknownCurve(name);
  return it->second;
}

bool CurveSystem::disjoint(const std::string& a, const std::string& b) const {
  return disjoint_.count(key(a, b)) != 0;
}

bool CurveSystem::meets_once(const std::string& a,
                             const std::string& b) const {
  return meet_once_.count(key(a, b)) != 0;
}

std::optional<int> CurveSystem::separating_type(
    const std::string& name) const {
  auto it = septype_.find(name);
  if (it == septype_.end()) return std::nullopt;
  return it->second;
}

const RelationDecl& CurveSystem::relation(const std::string& name) const {
  for (auto const& r : relations_)
    if (r.name == name) return r;
  throw Error("unknown relation '" + name + "'");
}

Integer symplectic_pairing(const IntVector& x, const IntVector& y) {
  if (x.size() != y.size() || x.size() % 2)
    throw DimensionError("pairing of vectors with mismatched length");
  Integer s = 0;
  for (std::size_t i = 0; i < x.size(); i += 2)
    s += x[i] * y[i + 1] - x[i + 1] * y[i];
  return s;
}

std::optional<IntVector> try_homology_class(const CurveSystem& sys,
                                            const Letter& l) {
  auto const& base = sys.class_of(l.base());
  if (!base) return std::nullopt;
  for (auto const& g : l.conjugator())
    if (!sys.class_of(g.curve)) return std::nullopt;
  return rho_image(sys, l.conjugator()) * *base;
}

IntVector homology_class_of_letter(const CurveSystem& sys, const Letter& l) {
  if (!sys.class_of(l.base())) throw NoHomologyData(l.base());
  for (auto const& g : l.conjugator())
    if (!sys.class_of(g.curve)) throw NoHomologyData(g.curve);
  return *try_homology_class(sys, l);
}

LetterClass classify_letter(const CurveSystem& sys, const Letter& l) {
  auto cls = try_homology_class(sys, l);
  if (!cls) return {};
  if (!is_zero(*cls)) return {CurveType::Nonseparating, std::nullopt};
  if (sys.genus() == 2) return {CurveType::Separating, 1};
  return {CurveType::Separating, sys.separating_type(l.base())};
}

RelationStatus relation_status(const CurveSystem& sys, const RelationDecl& r) {
  check_arity(r);
  auto cls = [&](const std::vector<Letter>& side) {
    std::vector<IntVector> out;
    for (auto const& l : side) {
      auto c = try_homology_class(sys, l);
      if (!c) return std::optional<std::vector<IntVector>>();
      out.push_back(*c);
    }
    return std::optional<std::vector<IntVector>>(out);
  };
  auto left = cls(r.left);
  auto right = cls(r.right);
  if (!left || !right) return RelationStatus::Unverifiable;

  auto product = [&](const std::vector<IntVector>& vs) {
    SpMatrix m = SpMatrix::identity(sys.dimension());
    for (auto const& v : vs) m = m * transvection(v);
    return m;
  };
  auto verdict = [](bool ok) {
    return ok ? RelationStatus::Valid : RelationStatus::Invalid;
  };
  const auto& a = (*left)[0];
  const auto& b = (*left)[1];
  switch (r.kind) {
    case RelationKind::Lantern:
      return verdict(product(*left) == product(*right));
    case RelationKind::Braid: {
      Integer p = abs(symplectic_pairing(a, b));
      return verdict(p == 1 && product({a, b, a}) == product({b, a, b}));
    }
    case RelationKind::Commute:
      return verdict(symplectic_pairing(a, b) == 0 &&
                     product({a, b}) == product({b, a}));
    case RelationKind::Chain2: {
      Integer p = abs(symplectic_pairing(a, b));
      SpMatrix ab = product({a, b});
      SpMatrix m = SpMatrix::identity(sys.dimension());
      for (int i = 0; i < 6; ++i) m = m * ab;
      return verdict(p == 1 && m.is_identity() && is_zero((*right)[0]));
    }
  }
  return RelationStatus::Invalid;
}

bool validate_relation_decl(const CurveSystem& sys, const RelationDecl& r) {
  return relation_status(sys, r) == RelationStatus::Valid;
}

std::vector<std::string> validate_system(const CurveSystem& sys) {
  std::vector<std::string> out;
  if (sys.genus() < 2) out.push_back("genus must be at least 2");
  auto pairing = [&](const std::string& a, const std::string& b) {
    auto const& x = sys.class_of(a);
    auto const& y = sys.class_of(b);
    return (x && y) ? std::optional<Integer>(symplectic_pairing(*x, *y))
                    : std::nullopt;
  };
  for (auto const& [a, b] : sys.disjoint_pairs()) {
    if (sys.meets_once(a, b))
      out.push_back("disjoint " + a + " " + b + ": also declared meet1");
    auto p = pairing(a, b);
    if (p && *p != 0)
      out.push_back("disjoint " + a + " " + b + ": pairing is " +
                    p->str() + ", expected 0");
  }
  for (auto const& [a, b] : sys.meet_once_pairs()) {
    auto p = pairing(a, b);
    if (p && abs(*p) != 1)
      out.push_back("meet1 " + a + " " + b + ": pairing is " + p->str() +
                    ", expected +-1");
  }
  for (auto const& name : sys.curve_names()) {
    auto h = sys.separating_type(name);
    if (!h) continue;
    if (*h < 1 || 2 * *h > sys.genus())
      out.push_back("septype " + name + ": h = " + std::to_string(*h) +
                    " outside 1.." + std::to_string(sys.genus() / 2));
    auto const& c = sys.class_of(name);
    if (c && !is_zero(*c))
      out.push_back("septype " + name + ": class " + to_string(*c) +
                    " is not null-homologous");
  }
  for (auto const& r : sys.relations()) {
    try {
      if (relation_status(sys, r) == RelationStatus::Invalid)
        out.push_back(to_string(r.kind) + " " + r.name +
                      ": homological identity fails");
    } catch (const MalformedRelation& e) {
      out.push_back(e.what());
    }
  }
  return out;
}

namespace {

// Fixed-width matrices for the search loop; candidates are re-verified
// exactly afterwards.
using SmallMatrix = std::vector<long long>;

SmallMatrix small_transvection(const std::vector<long long>& v) {
  const std::size_t n = v.size();
  std::vector<long long> jv(n);
  for (std::size_t i = 0; i < n; i += 2) {
    jv[i] = v[i + 1];
    jv[i + 1] = -v[i];
  }
  SmallMatrix m(n * n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    m[i * n + i] = 1;
    for (std::size_t j = 0; j < n; ++j) m[i * n + j] += v[i] * jv[j];
  }
  return m;
}

SmallMatrix small_mul(const SmallMatrix& a, const SmallMatrix& b,
                      std::size_t n) {
  SmallMatrix out(n * n, 0);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k) {
      long long x = a[i * n + k];
      if (x == 0) continue;
      for (std::size_t j = 0; j < n; ++j) out[i * n + j] += x * b[k * n + j];
    }
  return out;
}

std::vector<long long> to_small(const IntVector& v) {
  std::vector<long long> out;
  for (auto const& x : v) out.push_back(x.convert_to<long long>());
  return out;
}

}  // namespace

std::vector<LanternSolution> solve_lantern_classes(
    const CurveSystem& sys, const std::vector<std::string>& boundary,
    const std::vector<std::optional<std::string>>& known_right, int bound) {
  if (boundary.size() != 4 || known_right.size() != 3)
    throw MalformedRelation("lantern search needs 4 boundary and 3 right entries");
  if (bound < 1) throw Error("search bound must be at least 1");
  const std::size_t n = sys.dimension();

  auto class_or_throw = [&](const std::string& name) {
    auto const& c = sys.class_of(name);
    if (!c) throw NoHomologyData(name);
    return *c;
  };
  SmallMatrix lhs = small_transvection(to_small(class_or_throw(boundary[0])));
  for (std::size_t i = 1; i < 4; ++i)
    lhs = small_mul(lhs, small_transvection(to_small(class_or_throw(boundary[i]))), n);

  std::vector<std::size_t> unknown;
  std::vector<std::vector<long long>> right(3);
  for (std::size_t i = 0; i < 3; ++i) {
    if (known_right[i])
      right[i] = to_small(class_or_throw(*known_right[i]));
    else
      unknown.push_back(i);
  }
  const std::size_t coords = unknown.size() * n;
  const double combos = std::pow(2.0 * bound + 1.0, double(coords));
  if (combos > 5e7)
    throw Error("lantern search space too large (" + std::to_string(combos) +
                " candidates)");

  std::vector<LanternSolution> out;
  std::vector<long long> digits(coords, -bound);
  for (;;) {
    for (std::size_t u = 0; u < unknown.size(); ++u)
      right[unknown[u]].assign(digits.begin() + u * n,
                               digits.begin() + (u + 1) * n);
    SmallMatrix rhs = small_transvection(right[0]);
    rhs = small_mul(rhs, small_transvection(right[1]), n);
    rhs = small_mul(rhs, small_transvection(right[2]), n);
    if (rhs == lhs) {
      LanternSolution sol;
      for (auto const& r : right) {
        IntVector v;
        for (long long x : r) v.emplace_back(x);
        sol.push_back(std::move(v));
      }
      out.push_back(std::move(sol));
    }
    std::size_t k = 0;
    while (k < coords && digits[k] == bound) digits[k++] = -bound;
    if (k == coords) break;
    ++digits[k];
  }

  // Exact confirmation of each candidate.
  SpMatrix exact_lhs = SpMatrix::identity(n);
  for (auto const& d : boundary) exact_lhs = exact_lhs * transvection(class_or_throw(d));
  std::vector<LanternSolution> confirmed;
  for (auto& sol : out) {
    SpMatrix r = SpMatrix::identity(n);
    for (std::size_t i = 0; i < 3; ++i) r = r * transvection(sol[i]);
    if (r == exact_lhs) confirmed.push_back(std::move(sol));
  }
  return confirmed;
}

}  // namespace mcg
