#pragma once

// Exact integer and rational linear algebra used by the Mandelbrot module and
// by the exact interpolation oracles. Nothing here touches floating point.

#include <cstddef>
#include <vector>

#include <gmpxx.h>

namespace alglin {

using BigInt = mpz_class;
using BigRational = mpq_class;

// Ascending coefficient list: p[k] multiplies z^k.
using IntPoly = std::vector<BigInt>;

class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  static IntMatrix identity(std::size_t n);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  BigInt& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const BigInt& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  friend bool operator==(const IntMatrix& a, const IntMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

  // Copy of the rectangular block starting at (r0, c0).
  IntMatrix block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const;
  void set_block(std::size_t r0, std::size_t c0, const IntMatrix& b);

  bool is_zero() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<BigInt> data_;
};

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
IntMatrix operator+(const IntMatrix& a, const IntMatrix& b);
IntMatrix operator-(const IntMatrix& a);

// Fraction-free (Bareiss) determinant. Rows that have a zero in the current
// pivot column are rescaled lazily, so upper Hessenberg input costs O(n^2)
// big-integer operations instead of O(n^3).
BigInt bareiss_det(IntMatrix a);

// Exact inverse by Gauss-Jordan over the rationals. Throws ContractError when
// the matrix is singular.
std::vector<BigRational> rational_inverse(const IntMatrix& a);

// Coefficients of the unique polynomial of degree < values.size() taking
// values[j] at z = j (j = 0, 1, ...). Throws InternalError when a coefficient
// is not an integer.
IntPoly interpolate_at_naturals(const std::vector<BigInt>& values);

BigInt eval_int_poly(const IntPoly& p, const BigInt& z);
IntPoly int_poly_mul(const IntPoly& a, const IntPoly& b);
IntPoly int_poly_add(const IntPoly& a, const IntPoly& b);
void trim(IntPoly& p);

}  // namespace alglin
