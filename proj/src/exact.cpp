#include "alglin/exact.hpp"

#include <algorithm>
#include <utility>

#include "alglin/types.hpp"

namespace alglin {

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const {
  if (r0 + nr > rows_ || c0 + nc > cols_) throw StructuralError("IntMatrix::block out of range");
  IntMatrix b(nr, nc);
  for (std::size_t i = 0; i < nr; ++i)
    for (std::size_t j = 0; j < nc; ++j) b(i, j) = (*this)(r0 + i, c0 + j);
  return b;
}

void IntMatrix::set_block(std::size_t r0, std::size_t c0, const IntMatrix& b) {
  if (r0 + b.rows() > rows_ || c0 + b.cols() > cols_)
    throw StructuralError("IntMatrix::set_block out of range");
  for (std::size_t i = 0; i < b.rows(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j) (*this)(r0 + i, c0 + j) = b(i, j);
}

bool IntMatrix::is_zero() const {
  for (const auto& v : data_)
    if (v != 0) return false;
  return true;
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols() != b.rows()) throw StructuralError("IntMatrix product: inner dimensions differ");
  IntMatrix c(a.rows(), b.cols());
  BigInt t;
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const BigInt& aik = a(i, k);
      if (aik == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) {
        if (b(k, j) == 0) continue;
        t = aik * b(k, j);
        c(i, j) += t;
      }
    }
  }
  return c;
}

IntMatrix operator+(const IntMatrix& a, const IntMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw StructuralError("IntMatrix sum: shape mismatch");
  IntMatrix c(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) c(i, j) = a(i, j) + b(i, j);
  return c;
}

IntMatrix operator-(const IntMatrix& a) {
  IntMatrix c(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) c(i, j) = -a(i, j);
  return c;
}

BigInt bareiss_det(IntMatrix a) {
  const std::size_t n = a.rows();
  if (n != a.cols()) throw StructuralError("bareiss_det: matrix is not square");
  if (n == 0) return 1;

  // pivot[s + 1] holds the pivot used at step s; pivot[0] = 1.
  std::vector<BigInt> pivot(n + 1);
  pivot[0] = 1;
  // basis[i] = s + 1 means row i holds its values as of the end of step s
  // (0 = untouched original row).
  std::vector<std::size_t> basis(n, 0);
  int sign = 1;

  // Bring row i up to date with the end of step `step - 1`, i.e. basis `step`.
  auto materialize = [&](std::size_t i, std::size_t step) {
    const std::size_t from = basis[i];
    if (from == step) return;
    for (std::size_t j = step; j < n; ++j) {
      if (a(i, j) == 0) continue;
      a(i, j) *= pivot[step];
      mpz_divexact(a(i, j).get_mpz_t(), a(i, j).get_mpz_t(), pivot[from].get_mpz_t());
    }
    basis[i] = step;
  };

  BigInt t;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t p = k;
    while (p < n && a(p, k) == 0) ++p;
    if (p == n) return 0;
    materialize(p, k);
    if (p != k) {
      materialize(k, k);
      for (std::size_t j = 0; j < n; ++j) std::swap(a(p, j), a(k, j));
      std::swap(basis[p], basis[k]);
      sign = -sign;
    }
    const BigInt& akk = a(k, k);
    for (std::size_t i = k + 1; i < n; ++i) {
      if (a(i, k) == 0) continue;  // lazily rescaled later
      materialize(i, k);
      for (std::size_t j = k + 1; j < n; ++j) {
        t = akk * a(i, j);
        t -= a(i, k) * a(k, j);
        mpz_divexact(a(i, j).get_mpz_t(), t.get_mpz_t(), pivot[k].get_mpz_t());
      }
      a(i, k) = 0;
      basis[i] = k + 1;
    }
    pivot[k + 1] = akk;
  }
  materialize(n - 1, n - 1);
  BigInt det = a(n - 1, n - 1);
  if (sign < 0) det = -det;
  return det;
}

std::vector<BigRational> rational_inverse(const IntMatrix& a) {
  const std::size_t n = a.rows();
  if (n != a.cols()) throw StructuralError("rational_inverse: matrix is not square");
  const std::size_t w = 2 * n;
  std::vector<BigRational> m(n * w);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) m[i * w + j] = a(i, j);
    m[i * w + n + i] = 1;
  }
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t p = k;
    while (p < n && m[p * w + k] == 0) ++p;
    if (p == n) throw ContractError("rational_inverse: matrix is singular");
    if (p != k)
      for (std::size_t j = 0; j < w; ++j) std::swap(m[p * w + j], m[k * w + j]);
    const BigRational inv = 1 / m[k * w + k];
    for (std::size_t j = 0; j < w; ++j) m[k * w + j] *= inv;
    for (std::size_t i = 0; i < n; ++i) {
      if (i == k || m[i * w + k] == 0) continue;
      const BigRational f = m[i * w + k];
      for (std::size_t j = 0; j < w; ++j)
        if (m[k * w + j] != 0) m[i * w + j] -= f * m[k * w + j];
    }
  }
  std::vector<BigRational> inv(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv[i * n + j] = m[i * w + n + j];
  return inv;
}

IntPoly interpolate_at_naturals(const std::vector<BigInt>& values) {
  const std::size_t m = values.size();
  if (m == 0) return {};
  // Newton divided differences on the nodes 0, 1, ..., m-1.
  std::vector<BigRational> dd(values.begin(), values.end());
  for (std::size_t level = 1; level < m; ++level)
    for (std::size_t i = m - 1; i >= level; --i) {
      dd[i] = (dd[i] - dd[i - 1]) / BigRational(static_cast<long>(level));
      dd[i].canonicalize();
    }
  // Expand the Newton form by Horner: p = dd[m-1]; p = p*(z - j) + dd[j].
  std::vector<BigRational> coeffs(m);
  coeffs[0] = dd[m - 1];
  std::size_t deg = 0;
  for (std::size_t jj = m - 1; jj-- > 0;) {
    const BigRational node(static_cast<long>(jj));
    // multiply by (z - node)
    coeffs[deg + 1] = coeffs[deg];
    for (std::size_t k = deg; k > 0; --k) coeffs[k] = coeffs[k - 1] - node * coeffs[k];
    coeffs[0] = -node * coeffs[0];
    ++deg;
    coeffs[0] += dd[jj];
  }
  IntPoly out(m);
  for (std::size_t k = 0; k < m; ++k) {
    coeffs[k].canonicalize();
    if (coeffs[k].get_den() != 1) throw InternalError("interpolate_at_naturals: non-integer coefficient");
    out[k] = coeffs[k].get_num();
  }
  return out;
}

BigInt eval_int_poly(const IntPoly& p, const BigInt& z) {
  BigInt acc = 0;
  for (std::size_t k = p.size(); k-- > 0;) acc = acc * z + p[k];
  return acc;
}

IntPoly int_poly_mul(const IntPoly& a, const IntPoly& b) {
  if (a.empty() || b.empty()) return {};
  IntPoly c(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) c[i + j] += a[i] * b[j];
  return c;
}

IntPoly int_poly_add(const IntPoly& a, const IntPoly& b) {
  IntPoly c(std::max(a.size(), b.size()));
  for (std::size_t i = 0; i < a.size(); ++i) c[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) c[i] += b[i];
  return c;
}

void trim(IntPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

}  // namespace alglin
