#include "alglin/mandelbrot.hpp"

#include <string>

namespace alglin {

std::size_t mandelbrot_dim(int n) {
  if (n < 1) throw ContractError("mandelbrot_dim: n must be at least 1");
  return (std::size_t{1} << (n - 1)) - 1;
}

namespace {

void check_level(int n, int cap) {
  if (n < 2) throw ContractError("mandelbrot: n must be at least 2, got " + std::to_string(n));
  if (n > cap)
    throw ResourceError("mandelbrot: n = " + std::to_string(n) + " exceeds the configured cap " + std::to_string(cap));
}

IntMatrix glue(const IntMatrix& m) {
  const std::size_t d = m.rows();
  const std::size_t size = 2 * d + 1;
  IntMatrix out(size, size);
  out.set_block(0, 0, m);
  out.set_block(d + 1, d + 1, m);
  out(0, size - 1) = -1;
  out(d, d - 1) = -1;
  out(d + 1, d) = -1;
  return out;
}

template <typename T>
T poly_at(int n, const T& z) {
  if (n < 0) throw ContractError("mandelbrot_poly_at: n must be non-negative");
  T p(0);
  for (int k = 0; k < n; ++k) p = z * p * p + T(1);
  return p;
}

// Sparse exact check of m * inv == I; m has at most three nonzeros per row.
bool is_inverse(const IntMatrix& m, const IntMatrix& inv) {
  const std::size_t d = m.rows();
  std::vector<std::vector<std::size_t>> nz(d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j)
      if (m(i, j) != 0) nz[i].push_back(j);
  BigInt acc;
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) {
      acc = 0;
      for (std::size_t k : nz[i]) acc += m(i, k) * inv(k, j);
      if (acc != (i == j ? 1 : 0)) return false;
    }
  return true;
}

std::vector<BigInt> first_column(const IntMatrix& m) {
  std::vector<BigInt> c(m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i) c[i] = m(i, 0);
  return c;
}

std::vector<BigInt> last_row(const IntMatrix& m) {
  std::vector<BigInt> r(m.cols());
  for (std::size_t j = 0; j < m.cols(); ++j) r[j] = m(m.rows() - 1, j);
  return r;
}

// inv + C R.
IntMatrix rank_one_update(const IntMatrix& inv) {
  const auto c = first_column(inv);
  const auto r = last_row(inv);
  IntMatrix s = inv;
  for (std::size_t i = 0; i < s.rows(); ++i)
    if (c[i] != 0)
      for (std::size_t j = 0; j < s.cols(); ++j) s(i, j) += c[i] * r[j];
  return s;
}

}  // namespace

MandelbrotMatrix mandelbrot_matrix(int n, int cap) {
  check_level(n, cap);
  IntMatrix m(1, 1);
  m(0, 0) = -1;
  for (int k = 2; k < n; ++k) m = glue(m);
  MandelbrotMatrix out;
  out.n = n;
  out.dim = m.rows();
  out.entries = std::move(m);
  out.x_index = out.dim - 1;
  out.y_index = 0;
  return out;
}

BigInt mandelbrot_poly_at(int n, const BigInt& z) { return poly_at<BigInt>(n, z); }
BigRational mandelbrot_poly_at(int n, const BigRational& z) { return poly_at<BigRational>(n, z); }
Complex mandelbrot_poly_at(int n, Complex z) { return poly_at<Complex>(n, z); }

IntPoly mandelbrot_poly_coeffs(int n) {
  if (n < 0) throw ContractError("mandelbrot_poly_coeffs: n must be non-negative");
  IntPoly p{0};
  for (int k = 0; k < n; ++k) {
    IntPoly sq = int_poly_mul(p, p);
    sq.insert(sq.begin(), BigInt(0));
    p = int_poly_add(sq, IntPoly{1});
  }
  trim(p);
  return p;
}

bool charpoly_identity(const IntMatrix& m, int n, std::span<const long> points) {
  if (m.rows() != m.cols()) throw StructuralError("charpoly_identity: matrix is not square");
  for (long z : points) {
    IntMatrix shifted = -m;
    for (std::size_t i = 0; i < m.rows(); ++i) shifted(i, i) += z;
    if (bareiss_det(std::move(shifted)) != mandelbrot_poly_at(n, BigInt(z))) return false;
  }
  return true;
}

bool charpoly_identity(int n, std::span<const long> points) {
  return charpoly_identity(mandelbrot_matrix(n).entries, n, points);
}

IntMatrix mandelbrot_inverse_step(const IntMatrix& inv) {
  const std::size_t d = inv.rows();
  const auto c = first_column(inv);
  const auto r = last_row(inv);
  const IntMatrix s = rank_one_update(inv);
  IntMatrix out(2 * d + 1, 2 * d + 1);
  out.set_block(0, 0, s);
  out.set_block(d + 1, d + 1, s);
  out(d, d) = -1;
  for (std::size_t i = 0; i < d; ++i) {
    out(i, d) = c[i];
    out(d + 1 + i, d) = -c[i];
    out(d, i) = -r[i];
    out(d, d + 1 + i) = r[i];
    if (c[i] != 0)
      for (std::size_t j = 0; j < d; ++j) out(d + 1 + i, j) = -c[i] * r[j];
  }
  return out;
}

InverseStructureReport inverse_structure(int n, int cap) {
  check_level(n, cap);
  IntMatrix prev;
  IntMatrix inv(1, 1);
  inv(0, 0) = -1;
  for (int k = 2; k < n; ++k) {
    prev = inv;
    inv = mandelbrot_inverse_step(inv);
  }

  InverseStructureReport rep;
  const std::size_t d = inv.rows();
  rep.C = first_column(inv);
  rep.R = last_row(inv);
  rep.corner_value = inv(d - 1, 0);
  rep.height1 = true;
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j)
      if (abs(inv(i, j)) > 1) rep.height1 = false;

  const IntMatrix s = rank_one_update(inv);
  rep.border_zero_ok = true;
  for (std::size_t i = 0; i < d; ++i)
    if (s(i, 0) != 0 || s(d - 1, i) != 0) rep.border_zero_ok = false;

  const std::size_t half = n >= 3 ? mandelbrot_dim(n - 1) : 0;
  const std::size_t zb = 1 + half;
  rep.zero_block_ok = s.block(d - zb, 0, zb, zb).is_zero();

  if (n >= 3) {
    const IntMatrix sp = rank_one_update(prev);
    rep.diagonal_blocks_ok = inv.block(0, 0, half, half) == sp && inv.block(half + 1, half + 1, half, half) == sp;
    const auto cp = first_column(prev);
    const auto rp = last_row(prev);
    rep.recursion_ok = true;
    for (std::size_t i = 0; i < half; ++i)
      if (rep.C[i] != 0 || rep.C[half + 1 + i] != cp[i] || rep.R[i] != rp[i] || rep.R[half + 1 + i] != 0)
        rep.recursion_ok = false;
    if (rep.C[half] != 1 || rep.R[half] != 1) rep.recursion_ok = false;
  } else {
    rep.diagonal_blocks_ok = true;
    rep.recursion_ok = true;
  }
  rep.identity_ok = is_inverse(mandelbrot_matrix(n, cap).entries, inv);
  rep.inverse = std::move(inv);
  return rep;
}

CMatrix to_complex(const IntMatrix& m) {
  CMatrix out(static_cast<Index>(m.rows()), static_cast<Index>(m.cols()));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      out(static_cast<Index>(i), static_cast<Index>(j)) = m(i, j).get_d();
  return out;
}

StandardTriple mandelbrot_triple(int n, int cap) {
  const auto mm = mandelbrot_matrix(n, cap);
  const Index d = static_cast<Index>(mm.dim);
  CMatrix x = CMatrix::Zero(1, d);
  x(0, static_cast<Index>(mm.x_index)) = 1.0;
  CMatrix y = CMatrix::Zero(d, 1);
  y(static_cast<Index>(mm.y_index), 0) = 1.0;
  CMatrix a = to_complex(mm.entries);
  BlockMeta meta{"mandelbrot", {d}, 1, is_block_upper_hessenberg(a, 1)};
  return {std::move(x), Pencil(CMatrix::Identity(d, d), std::move(a), std::move(meta)), std::move(y)};
}

}  // namespace alglin
