#ifndef MCG_MEYER_HPP_
#define MCG_MEYER_HPP_

#include <cstddef>
#include <map>
#include <vector>

#include "mcg/curve_system.hpp"
#include "mcg/homology.hpp"
#include "mcg/integer_matrix.hpp"
#include "mcg/word.hpp"

namespace mcg {

// Symmetric matrix over Q.
class RationalForm {
 public:
  explicit RationalForm(std::size_t n) : n_(n), data_(n * n) {}

  std::size_t size() const noexcept { return n_; }
  Rational& operator()(std::size_t i, std::size_t j) { return data_[i * n_ + j]; }
  const Rational& operator()(std::size_t i, std::size_t j) const {
    return data_[i * n_ + j];
  }
  // (Q + Q^T) / 2.
  RationalForm symmetrized() const;
  bool symmetric() const;

 private:
  std::size_t n_;
  std::vector<Rational> data_;
};

// Signature by congruence diagonalization with exact pivoting.
int signature(RationalForm q);

// Basis of the right kernel of an integer matrix, over Q.
std::vector<std::vector<Rational>> rational_nullspace(const IntMatrix& m);

// Meyer's cocycle.  V = {(x,y) : (A^-1 - I)x + (B - I)y = 0} carries the form
// <x1 + y1, (I - B) y2>; tau is its signature.  |tau| <= 2g.
int meyer_tau(const SpMatrix& a, const SpMatrix& b);
// Throws NotSymplectic.
int meyer_tau(const IntMatrix& a, const IntMatrix& b);

// Sign in front of the cocycle sum in factorization_signature.  With the
// transvection T_a(x) = x + <x,a>a this is +1: it reproduces sigma = -12 for
// the genus-2 relator (c5 c4 c3 c2 c1^2 c2 c3 c4 c5)^2 and tau(T_a, T_a) = -1.
inline constexpr int kMeyerSumSign = 1;

// sigma = kMeyerSumSign * sum_{k=2..n} tau(rho(v_1...v_{k-1}), rho(v_k)) - s
// where s counts null-homologous letters; partial products run left to right
// in word order.  Throws NotARelator, NoHomologyData.
long factorization_signature(const CurveSystem& sys, const PositiveWord& w);

// -(g+1)/(2g+1) n0 + sum_h (4h(g-h)/(2g+1) - 1) n_h.  A non-integer result
// means the counts do not come from a hyperelliptic fibration.
Rational hyperelliptic_signature(int genus, long n0,
                                 const std::map<int, long>& nh);

}  // namespace mcg

#endif  // MCG_MEYER_HPP_
