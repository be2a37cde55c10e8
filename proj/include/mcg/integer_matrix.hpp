#ifndef MCG_INTEGER_MATRIX_HPP_
#define MCG_INTEGER_MATRIX_HPP_

#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace mcg {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;
using IntVector = std::vector<Integer>;

bool is_zero(const IntVector& v);
IntVector operator+(const IntVector& a, const IntVector& b);
IntVector operator-(const IntVector& v);
IntVector operator*(const Integer& s, const IntVector& v);
std::string to_string(const IntVector& v);

// Dense row-major integer matrix.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols) {}
  IntMatrix(std::initializer_list<std::initializer_list<long>> rows);

  static IntMatrix identity(std::size_t n);
  // Columns of the result are the given vectors (all of equal length).
  static IntMatrix from_columns(std::size_t rows,
                                const std::vector<IntVector>& columns);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  Integer& operator()(std::size_t r, std::size_t c) {
    return data_[r * cols_ + c];
  }
  const Integer& operator()(std::size_t r, std::size_t c) const {
    return data_[r * cols_ + c];
  }

  IntMatrix transpose() const;
  IntVector column(std::size_t c) const;
  bool is_identity() const;
  bool is_zero() const;

  bool operator==(const IntMatrix&) const = default;

  std::string str() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Integer> data_;
};

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
IntVector operator*(const IntMatrix& a, const IntVector& v);
IntMatrix operator+(const IntMatrix& a, const IntMatrix& b);
IntMatrix operator-(const IntMatrix& a, const IntMatrix& b);

// U * A * V == D with U, V unimodular and D diagonal, nonnegative, each
// nonzero diagonal entry dividing the next.
struct SmithForm {
  IntMatrix u;
  IntMatrix d;
  IntMatrix v;

  std::vector<Integer> diagonal() const;
};

SmithForm smith_normal_form(const IntMatrix& a);

// Determinant by fraction-free elimination (Bareiss).
Integer determinant(const IntMatrix& a);

}  // namespace mcg

#endif  // MCG_INTEGER_MATRIX_HPP_
