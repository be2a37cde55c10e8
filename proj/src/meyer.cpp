#include "mcg/meyer.hpp"

#include <utility>

#include "mcg/errors.hpp"

namespace mcg {

RationalForm RationalForm::symmetrized() const {
  RationalForm out(n_);
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = 0; j < n_; ++j)
      out(i, j) = ((*this)(i, j) + (*this)(j, i)) / 2;
  return out;
}

bool RationalForm::symmetric() const {
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = i + 1; j < n_; ++j)
      if ((*this)(i, j) != (*this)(j, i)) return false;
  return true;
}

namespace {

void swap_index(RationalForm& q, std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t k = 0; k < q.size(); ++k) std::swap(q(a, k), q(b, k));
  for (std::size_t k = 0; k < q.size(); ++k) std::swap(q(k, a), q(k, b));
}

// row/col dst += row/col src
void add_index(RationalForm& q, std::size_t dst, std::size_t src) {
  for (std::size_t k = 0; k < q.size(); ++k) q(dst, k) += q(src, k);
  for (std::size_t k = 0; k < q.size(); ++k) q(k, dst) += q(k, src);
}

}  // namespace

int signature(RationalForm q) {
  if (!q.symmetric()) throw Error("signature of a non-symmetric form");
  const std::size_t n = q.size();
  int sig = 0;
  for (std::size_t k = 0; k < n; ++k) {
    if (q(k, k) == 0) {
      std::size_t d = k + 1;
      while (d < n && q(d, d) == 0) ++d;
      if (d < n) {
        swap_index(q, k, d);
      } else {
        // Zero diagonal: a nonzero off-diagonal q(i,j) gives q(i,i) = 2 q(i,j)
        // after adding index j to index i.
        std::size_t pi = n, pj = n;
        for (std::size_t i = k; i < n && pi == n; ++i)
          for (std::size_t j = i + 1; j < n; ++j)
            if (q(i, j) != 0) {
              pi = i;
              pj = j;
              break;
            }
        if (pi == n) break;  // remaining block is zero
        add_index(q, pi, pj);
        swap_index(q, k, pi);
      }
    }
    const Rational pivot = q(k, k);
    sig += pivot > 0 ? 1 : -1;
    for (std::size_t i = k + 1; i < n; ++i) {
      if (q(i, k) == 0) continue;
      const Rational f = q(i, k) / pivot;
      for (std::size_t j = k; j < n; ++j) q(i, j) -= f * q(k, j);
      for (std::size_t j = k; j < n; ++j) q(j, i) = q(i, j);
    }
  }
  return sig;
}

std::vector<std::vector<Rational>> rational_nullspace(const IntMatrix& m) {
  const std::size_t rows = m.rows(), cols = m.cols();
  std::vector<std::vector<Rational>> a(rows, std::vector<Rational>(cols));
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) a[r][c] = Rational(m(r, c));

  std::vector<std::size_t> pivot_col;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && a[p][c] == 0) ++p;
    if (p == rows) continue;
    std::swap(a[p], a[r]);
    const Rational inv = 1 / a[r][c];
    for (auto& x : a[r]) x *= inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || a[i][c] == 0) continue;
      const Rational f = a[i][c];
      for (std::size_t j = c; j < cols; ++j) a[i][j] -= f * a[r][j];
    }
    pivot_col.push_back(c);
    ++r;
  }

  std::vector<bool> is_pivot(cols, false);
  for (auto c : pivot_col) is_pivot[c] = true;
  std::vector<std::vector<Rational>> basis;
  for (std::size_t free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    std::vector<Rational> v(cols);
    v[free] = 1;
    for (std::size_t i = 0; i < pivot_col.size(); ++i) v[pivot_col[i]] = -a[i][free];
    basis.push_back(std::move(v));
  }
  return basis;
}

int meyer_tau(const SpMatrix& a, const SpMatrix& b) {
  const std::size_t n = a.dimension();
  if (b.dimension() != n) throw DimensionError("meyer_tau dimension mismatch");
  if (a.is_identity() || b.is_identity()) return 0;

  const IntMatrix id = IntMatrix::identity(n);
  const IntMatrix left = a.inverse().matrix() - id;
  const IntMatrix right = b.matrix() - id;
  IntMatrix system(n, 2 * n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) {
      system(r, c) = left(r, c);
      system(r, n + c) = right(r, c);
    }
  auto basis = rational_nullspace(system);
  const std::size_t k = basis.size();
  if (k == 0) return 0;

  // s_u = x_u + y_u and w_v = (I - B) y_v.
  std::vector<std::vector<Rational>> s(k, std::vector<Rational>(n));
  std::vector<std::vector<Rational>> w(k, std::vector<Rational>(n));
  for (std::size_t u = 0; u < k; ++u) {
    for (std::size_t i = 0; i < n; ++i) s[u][i] = basis[u][i] + basis[u][n + i];
    for (std::size_t i = 0; i < n; ++i) {
      Rational acc = basis[u][n + i];
      for (std::size_t j = 0; j < n; ++j)
        if (b.matrix()(i, j) != 0) acc -= Rational(b.matrix()(i, j)) * basis[u][n + j];
      w[u][i] = acc;
    }
  }
  RationalForm q(k);
  for (std::size_t u = 0; u < k; ++u)
    for (std::size_t v = 0; v < k; ++v) {
      Rational acc = 0;
      for (std::size_t i = 0; i < n; i += 2)
        acc += s[u][i] * w[v][i + 1] - s[u][i + 1] * w[v][i];
      q(u, v) = acc;
    }
  return signature(q.symmetrized());
}

int meyer_tau(const IntMatrix& a, const IntMatrix& b) {
  return meyer_tau(SpMatrix(a), SpMatrix(b));
}

long factorization_signature(const CurveSystem& sys, const PositiveWord& w) {
  std::vector<IntVector> classes;
  classes.reserve(w.size());
  for (auto const& f : w.word().factors())
    classes.push_back(homology_class_of_letter(sys, f.letter));
  if (!is_homological_relator(sys, w.word())) throw NotARelator();

  long separating = 0;
  for (auto const& c : classes)
    if (is_zero(c)) ++separating;

  long sum = 0;
  SpMatrix prefix = SpMatrix::identity(sys.dimension());
  for (std::size_t k = 1; k < classes.size(); ++k) {
    prefix = prefix * transvection(classes[k - 1]);
    if (is_zero(classes[k])) continue;  // tau(P, I) = 0
    sum += meyer_tau(prefix, transvection(classes[k]));
  }
  return kMeyerSumSign * sum - separating;
}

Rational hyperelliptic_signature(int genus, long n0,
                                 const std::map<int, long>& nh) {
  if (genus < 2) throw Error("hyperelliptic signature needs genus >= 2");
  const Rational denom = 2 * genus + 1;
  Rational sigma = -Rational(genus + 1) / denom * n0;
  for (auto const& [h, count] : nh)
    sigma += (Rational(4 * h * (genus - h)) / denom - 1) * count;
  return sigma;
}

}  // namespace mcg
