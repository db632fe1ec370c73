#pragma once

// Exact integer Mandelbrot matrices M_n with det(zI - M_n) = p_n(z), where
// p_0 = 0 and p_{n+1} = z p_n^2 + 1.

#include <span>
#include <vector>

#include "alglin/exact.hpp"
#include "alglin/pencil.hpp"
#include "alglin/types.hpp"

namespace alglin {

inline constexpr int kMandelbrotCap = 14;

// 2^{n-1} - 1.
std::size_t mandelbrot_dim(int n);

struct MandelbrotMatrix {
  int n = 0;
  std::size_t dim = 0;
  IntMatrix entries;
  // Triple (e_d^T, M_n, e_1), stored as the 0-based positions of the ones.
  std::size_t x_index = 0;
  std::size_t y_index = 0;
};

// M_2 = [-1]; M_{n+1} glues two copies of M_n with three -1 entries.
MandelbrotMatrix mandelbrot_matrix(int n, int cap = kMandelbrotCap);

BigInt mandelbrot_poly_at(int n, const BigInt& z);
BigRational mandelbrot_poly_at(int n, const BigRational& z);
Complex mandelbrot_poly_at(int n, Complex z);

// Ascending coefficients of p_n.
IntPoly mandelbrot_poly_coeffs(int n);

// det(zI - m) == p_n(z) exactly at every point.
bool charpoly_identity(const IntMatrix& m, int n, std::span<const long> points);
bool charpoly_identity(int n, std::span<const long> points);

struct InverseStructureReport {
  IntMatrix inverse;
  BigInt corner_value;          // bottom-left entry
  std::vector<BigInt> C;        // first column of the inverse
  std::vector<BigInt> R;        // last row of the inverse
  bool zero_block_ok = false;   // lower-left (1+d_{n-1})^2 block of inverse + C R is zero
  bool height1 = false;         // inverse entries in {-1, 0, 1}
  bool diagonal_blocks_ok = false;  // both diagonal blocks equal the previous inverse + C R
  bool border_zero_ok = false;  // first column and last row of inverse + C R vanish
  bool recursion_ok = false;    // C_n = [0; 1; C_{n-1}], R_n = [R_{n-1}, 1, 0]
  bool identity_ok = false;     // M_n * inverse == I
};

// Inverse by the recursive block formula, checked against M_n exactly.
InverseStructureReport inverse_structure(int n, int cap = kMandelbrotCap);

// Recursive block formula for the inverse of M_{n+1} from that of M_n.
IntMatrix mandelbrot_inverse_step(const IntMatrix& inv);

// Floating-point copy of the triple (e_d^T, (I, M_n), e_1).
StandardTriple mandelbrot_triple(int n, int cap = kMandelbrotCap);

CMatrix to_complex(const IntMatrix& m);

}  // namespace alglin
