#include "mcg/homology.hpp"

#include <sstream>

#include "mcg/errors.hpp"

namespace mcg {

IntMatrix symplectic_form(std::size_t dim) {
  if (dim % 2) throw DimensionError("symplectic dimension must be even");
  IntMatrix j(dim, dim);
  for (std::size_t i = 0; i < dim; i += 2) {
    j(i, i + 1) = 1;
    j(i + 1, i) = -1;
  }
  return j;
}

bool is_symplectic(const IntMatrix& m) {
  if (m.rows() != m.cols() || m.rows() % 2) return false;
  IntMatrix j = symplectic_form(m.rows());
  return m.transpose() * j * m == j;
}

SpMatrix::SpMatrix(IntMatrix m) : m_(std::move(m)) {
  if (!is_symplectic(m_)) throw NotSymplectic();
}

SpMatrix SpMatrix::identity(std::size_t dim) {
  if (dim % 2) throw DimensionError("symplectic dimension must be even");
  return SpMatrix(IntMatrix::identity(dim), Trusted{});
}

SpMatrix SpMatrix::inverse() const {
  IntMatrix j = symplectic_form(dimension());
  IntMatrix inv = j * m_.transpose() * j;
  for (std::size_t r = 0; r < inv.rows(); ++r)
    for (std::size_t c = 0; c < inv.cols(); ++c) inv(r, c) = -inv(r, c);
  return SpMatrix(std::move(inv), Trusted{});
}

SpMatrix operator*(const SpMatrix& a, const SpMatrix& b) {
  SpMatrix out(a.m_ * b.m_, SpMatrix::Trusted{});
#ifndef NDEBUG
  if (!is_symplectic(out.m_)) throw NotSymplectic();
#endif
  return out;
}

IntVector operator*(const SpMatrix& a, const IntVector& v) {
  return a.matrix() * v;
}

namespace {

IntMatrix transvection_matrix(const IntVector& a, int sign) {
  if (a.size() % 2 || a.empty())
    throw DimensionError("transvection needs an even-length vector");
  const std::size_t n = a.size();
  IntVector ja(n);
  for (std::size_t i = 0; i < n; i += 2) {
    ja[i] = a[i + 1];
    ja[i + 1] = -a[i];
  }
  // x + sign <x,a> a, and <x,a> = (J a) . x
  IntMatrix m = IntMatrix::identity(n);
  for (std::size_t r = 0; r < n; ++r) {
    if (a[r] == 0) continue;
    for (std::size_t c = 0; c < n; ++c) m(r, c) += sign * a[r] * ja[c];
  }
  return m;
}

const IntVector& class_or_throw(const CurveSystem& sys, const std::string& name) {
  auto const& c = sys.class_of(name);
  if (!c) throw NoHomologyData(name);
  return *c;
}

}  // namespace

SpMatrix transvection(const IntVector& a) {
  return SpMatrix(transvection_matrix(a, 1), SpMatrix::Trusted{});
}

SpMatrix inverse_transvection(const IntVector& a) {
  return SpMatrix(transvection_matrix(a, -1), SpMatrix::Trusted{});
}

SpMatrix rho_image(const CurveSystem& sys, const Conjugator& c) {
  SpMatrix m = SpMatrix::identity(sys.dimension());
  for (auto const& g : c) {
    auto const& v = class_or_throw(sys, g.curve);
    m = m * (g.exponent > 0 ? transvection(v) : inverse_transvection(v));
  }
  return m;
}

SpMatrix rho_image(const CurveSystem& sys, const Word& w) {
  if (w.system() != 0 && w.system() != sys.id()) throw SystemMismatch();
  SpMatrix m = SpMatrix::identity(sys.dimension());
  for (auto const& f : w.factors()) {
    IntVector v = homology_class_of_letter(sys, f.letter);
    m = m * (f.sign > 0 ? transvection(v) : inverse_transvection(v));
  }
  return m;
}

SpMatrix rho_shadow(const CurveSystem& sys, const Conjugator& c) {
  SpMatrix m = SpMatrix::identity(sys.dimension());
  for (auto const& g : c) {
    auto const& v = sys.class_of(g.curve);
    if (!v) continue;
    m = m * (g.exponent > 0 ? transvection(*v) : inverse_transvection(*v));
  }
  return m;
}

SpMatrix rho_shadow(const CurveSystem& sys, const Word& w) {
  if (w.system() != 0 && w.system() != sys.id()) throw SystemMismatch();
  return rho_shadow(sys, flatten(w));
}

bool fully_classed(const CurveSystem& sys, const Word& w) {
  for (auto const& f : w.factors()) {
    if (!sys.class_of(f.letter.base())) return false;
    for (auto const& g : f.letter.conjugator())
      if (!sys.class_of(g.curve)) return false;
  }
  return true;
}

bool is_homological_relator(const CurveSystem& sys, const Word& w) {
  return rho_image(sys, w).is_identity();
}

std::string AbelianGroup::str() const {
  if (trivial()) return "0";
  std::ostringstream os;
  bool first = true;
  if (rank) {
    os << "Z";
    if (rank > 1) os << "^" << rank;
    first = false;
  }
  for (auto const& t : torsion) {
    os << (first ? "" : " + ") << "Z/" << t;
    first = false;
  }
  return os.str();
}

AbelianGroup cokernel(const IntMatrix& a) {
  SmithForm snf = smith_normal_form(a);
  AbelianGroup g;
  std::size_t nonzero = 0;
  for (auto const& d : snf.diagonal()) {
    if (d == 0) continue;
    ++nonzero;
    if (d > 1) g.torsion.push_back(d);
  }
  g.rank = a.rows() - nonzero;
  return g;
}

AbelianGroup h1_total_space(const CurveSystem& sys, const PositiveWord& w) {
  std::vector<IntVector> cols;
  for (auto const& f : w.word().factors())
    cols.push_back(homology_class_of_letter(sys, f.letter));
  return cokernel(IntMatrix::from_columns(sys.dimension(), cols));
}

}  // namespace mcg
