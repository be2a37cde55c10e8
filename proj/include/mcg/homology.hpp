#ifndef MCG_HOMOLOGY_HPP_
#define MCG_HOMOLOGY_HPP_

// The action of twist words on H_1(surface; Z).
//
// Conventions, fixed here and nowhere else:
//   <x, y> = x^T J y, J block diagonal [[0,1],[-1,0]];
//   the right-handed twist acts as the transvection T_a(x) = x + <x,a> a;
//   rho(a_r^{e_r} ... a_1^{e_1}) = T_{a_r}^{e_r} ... T_{a_1}^{e_1}.
//
// rho(w) = I is necessary, not sufficient, for w to be a relator in the
// mapping class group.

#include <cstddef>
#include <string>
#include <vector>

#include "mcg/curve_system.hpp"
#include "mcg/integer_matrix.hpp"
#include "mcg/word.hpp"

namespace mcg {

IntMatrix symplectic_form(std::size_t dim);
bool is_symplectic(const IntMatrix& m);

// Integer matrix with M^T J M = J.
class SpMatrix {
 public:
  // Throws NotSymplectic.
  explicit SpMatrix(IntMatrix m);
  static SpMatrix identity(std::size_t dim);

  const IntMatrix& matrix() const noexcept { return m_; }
  std::size_t dimension() const noexcept { return m_.rows(); }
  // -J M^T J.
  SpMatrix inverse() const;
  bool is_identity() const { return m_.is_identity(); }

  friend SpMatrix operator*(const SpMatrix& a, const SpMatrix& b);
  friend SpMatrix transvection(const IntVector& a);
  friend SpMatrix inverse_transvection(const IntVector& a);
  bool operator==(const SpMatrix&) const = default;

 private:
  struct Trusted {};
  SpMatrix(IntMatrix m, Trusted) : m_(std::move(m)) {}
  IntMatrix m_;
};

IntVector operator*(const SpMatrix& a, const IntVector& v);

// Throws DimensionError for odd length.
SpMatrix transvection(const IntVector& a);
SpMatrix inverse_transvection(const IntVector& a);

// Throws UnknownCurve, NoHomologyData.
SpMatrix rho_image(const CurveSystem& sys, const Word& w);
SpMatrix rho_image(const CurveSystem& sys, const Conjugator& c);

// rho with every curve lacking a class sent to the identity.  A homomorphism
// from the free group, compatible with every letter normalization rule that
// does not involve such curves.
SpMatrix rho_shadow(const CurveSystem& sys, const Word& w);
SpMatrix rho_shadow(const CurveSystem& sys, const Conjugator& c);

// True when every curve in the word carries a class.
bool fully_classed(const CurveSystem& sys, const Word& w);

bool is_homological_relator(const CurveSystem& sys, const Word& w);

// Finitely generated abelian group Z^rank + sum Z/t_i, t_i | t_{i+1}.
struct AbelianGroup {
  std::size_t rank = 0;
  std::vector<Integer> torsion;

  bool trivial() const { return rank == 0 && torsion.empty(); }
  std::string str() const;
  bool operator==(const AbelianGroup&) const = default;
};

// Cokernel of the integer matrix.
AbelianGroup cokernel(const IntMatrix& a);

// H_1 of the total space: Z^{2g} modulo the classes of the vanishing cycles.
AbelianGroup h1_total_space(const CurveSystem& sys, const PositiveWord& w);

}  // namespace mcg

#endif  // MCG_HOMOLOGY_HPP_
