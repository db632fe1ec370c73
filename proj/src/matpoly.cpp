#include "alglin/matpoly.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <tuple>
#include <numbers>

namespace alglin {

std::vector<Complex> barycentric_weights(std::span<const Complex> nodes) {
  std::vector<Complex> w(nodes.size());
  for (std::size_t k = 0; k < nodes.size(); ++k) {
    Complex prod = 1.0;
    for (std::size_t j = 0; j < nodes.size(); ++j)
      if (j != k) prod *= nodes[k] - nodes[j];
    w[k] = 1.0 / prod;
  }
  return w;
}

BasisSpec BasisSpec::lagrange(std::vector<Complex> nodes, std::vector<Complex> weights) {
  if (nodes.size() != weights.size())
    throw StructuralError("lagrange basis: " + std::to_string(nodes.size()) + " nodes but " +
                          std::to_string(weights.size()) + " weights");
  if (nodes.empty()) throw ContractError("lagrange basis: no nodes");
  for (std::size_t i = 0; i < nodes.size(); ++i)
    for (std::size_t j = i + 1; j < nodes.size(); ++j)
      if (nodes[i] == nodes[j]) throw ContractError("lagrange basis: duplicate node");

  const auto expected = barycentric_weights(nodes);
  double scale = 0.0;
  for (const auto& b : expected) scale = std::max(scale, std::abs(b));
  for (std::size_t k = 0; k < nodes.size(); ++k)
    if (std::abs(weights[k] - expected[k]) > 1e-8 * scale)
      throw ContractError("lagrange basis: weight " + std::to_string(k) +
                          " is inconsistent with the nodes");
  return {BasisKind::Lagrange, std::move(nodes), std::move(weights)};
}

double partial_fraction_residual(const BasisSpec& basis, Complex z) {
  if (basis.kind != BasisKind::Lagrange) throw ContractError("partial_fraction_residual: not a Lagrange basis");
  Complex w = 1.0;
  Complex sum = 0.0;
  for (std::size_t k = 0; k < basis.nodes.size(); ++k) {
    if (z == basis.nodes[k]) throw ContractError("partial_fraction_residual: z is a node");
    w *= z - basis.nodes[k];
    sum += basis.weights[k] / (z - basis.nodes[k]);
  }
  const Complex lhs = 1.0 / w;
  return std::abs(lhs - sum) / std::abs(lhs);
}

MatPoly::MatPoly(BasisSpec basis, std::vector<CMatrix> data) : basis_(std::move(basis)), data_(std::move(data)) {
  if (data_.empty()) throw StructuralError("MatPoly: no coefficient data");
  dim_ = data_.front().rows();
  if (dim_ <= 0) throw StructuralError("MatPoly: dimension must be positive");
  for (const auto& m : data_)
    if (m.rows() != dim_ || m.cols() != dim_)
      throw StructuralError("MatPoly: every data matrix must be " + std::to_string(dim_) + "x" +
                            std::to_string(dim_));
  if (basis_.kind == BasisKind::Lagrange && basis_.nodes.size() != data_.size())
    throw StructuralError("MatPoly: " + std::to_string(data_.size()) + " samples for " +
                          std::to_string(basis_.nodes.size()) + " nodes");
}

MatPoly MatPoly::monomial(std::vector<CMatrix> coeffs) { return {BasisSpec::monomial(), std::move(coeffs)}; }

MatPoly MatPoly::chebyshev(std::vector<CMatrix> coeffs) { return {BasisSpec::chebyshev(), std::move(coeffs)}; }

MatPoly MatPoly::lagrange(std::vector<Complex> nodes, std::vector<Complex> weights, std::vector<CMatrix> samples) {
  return {BasisSpec::lagrange(std::move(nodes), std::move(weights)), std::move(samples)};
}

MatPoly MatPoly::scalar(std::span<const Complex> coeffs) {
  std::vector<CMatrix> data;
  data.reserve(coeffs.size());
  for (const auto& c : coeffs) data.push_back(CMatrix::Constant(1, 1, c));
  return monomial(std::move(data));
}

bool MatPoly::has_integer_entries() const {
  for (const auto& m : data_)
    for (Index i = 0; i < m.size(); ++i) {
      const Complex v = m.data()[i];
      if (v.imag() != 0.0 || std::trunc(v.real()) != v.real()) return false;
    }
  return true;
}

CMatrix eval(const MatPoly& p, Complex z) {
  const auto& data = p.data();
  const Index r = p.dim();
  switch (p.basis().kind) {
    case BasisKind::Monomial: {
      CMatrix acc = data.back();
      for (std::size_t k = data.size() - 1; k-- > 0;) acc = z * acc + data[k];
      return acc;
    }
    case BasisKind::Chebyshev: {
      // T_0 = 1, T_1 = z, T_{k+1} = 2 z T_k - T_{k-1}
      CMatrix acc = data[0];
      Complex prev = 1.0;
      Complex cur = z;
      for (std::size_t k = 1; k < data.size(); ++k) {
        acc += cur * data[k];
        const Complex next = 2.0 * z * cur - prev;
        prev = cur;
        cur = next;
      }
      return acc;
    }
    case BasisKind::Lagrange: {
      const auto& nodes = p.basis().nodes;
      const auto& weights = p.basis().weights;
      for (std::size_t k = 0; k < nodes.size(); ++k)
        if (z == nodes[k]) return data[k];
      Complex w = 1.0;
      CMatrix acc = CMatrix::Zero(r, r);
      for (std::size_t k = 0; k < nodes.size(); ++k) {
        w *= z - nodes[k];
        acc += (weights[k] / (z - nodes[k])) * data[k];
      }
      return w * acc;
    }
  }
  throw InternalError("eval: unknown basis");
}

Complex eval_scalar(std::span<const Complex> coeffs, Complex z) {
  Complex acc = 0.0;
  for (std::size_t k = coeffs.size(); k-- > 0;) acc = acc * z + coeffs[k];
  return acc;
}

ScalarPoly det_poly(const MatPoly& p) {
  const std::size_t m = static_cast<std::size_t>(p.dim()) * static_cast<std::size_t>(p.grade()) + 1;
  std::vector<Complex> roots(m);
  std::vector<Complex> values(m);
  for (std::size_t j = 0; j < m; ++j) {
    roots[j] = std::polar(1.0, 2.0 * std::numbers::pi * static_cast<double>(j) / static_cast<double>(m));
    values[j] = eval(p, roots[j]).determinant();
  }
  ScalarPoly coeffs(m, 0.0);
  for (std::size_t k = 0; k < m; ++k) {
    Complex acc = 0.0;
    for (std::size_t j = 0; j < m; ++j) acc += values[j] * std::conj(roots[(j * k) % m]);
    coeffs[k] = acc / static_cast<double>(m);
  }
  return coeffs;
}

IntPoly det_poly_exact(const MatPoly& p) {
  if (p.basis().kind != BasisKind::Monomial) throw ContractError("det_poly_exact: monomial basis required");
  if (!p.has_integer_entries()) throw ContractError("det_poly_exact: entries must be integers");
  const std::size_t r = static_cast<std::size_t>(p.dim());
  const std::size_t m = r * static_cast<std::size_t>(p.grade()) + 1;

  std::vector<IntMatrix> coeffs;
  for (const auto& c : p.data()) {
    IntMatrix ic(r, r);
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < r; ++j) ic(i, j) = static_cast<long>(c(i, j).real());
    coeffs.push_back(std::move(ic));
  }
  std::vector<BigInt> values(m);
  for (std::size_t z = 0; z < m; ++z) {
    IntMatrix acc = coeffs.back();
    for (std::size_t k = coeffs.size() - 1; k-- > 0;) {
      for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < r; ++j) acc(i, j) = acc(i, j) * static_cast<long>(z) + coeffs[k](i, j);
    }
    values[z] = bareiss_det(std::move(acc));
  }
  return interpolate_at_naturals(values);
}

namespace {

template <typename Abs, typename Matrix>
HeightReport height_impl(const Matrix& m, Index rows, Index cols, Abs&& abs_at) {
  HeightReport rep;
  double min_nonzero = std::numeric_limits<double>::infinity();
  rep.is_bohemian_01 = true;
  rep.is_height1_integer = true;
  for (Index i = 0; i < rows; ++i)
    for (Index j = 0; j < cols; ++j) {
      const auto [a, is_zero, is_minus_one, is_plus_one] = abs_at(m, i, j);
      rep.height = std::max(rep.height, a);
      if (!is_zero) min_nonzero = std::min(min_nonzero, a);
      if (!is_zero && !is_minus_one) rep.is_bohemian_01 = false;
      if (!is_zero && !is_minus_one && !is_plus_one) rep.is_height1_integer = false;
    }
  if (rep.height > 0.0) rep.t_metric = min_nonzero / rep.height;
  return rep;
}

}  // namespace

HeightReport height_report(const CMatrix& m) {
  return height_impl(m, m.rows(), m.cols(), [](const CMatrix& mm, Index i, Index j) {
    const Complex v = mm(i, j);
    return std::tuple{std::abs(v), v == Complex(0.0), v == Complex(-1.0), v == Complex(1.0)};
  });
}

HeightReport height_report(const IntMatrix& m) {
  return height_impl(m, static_cast<Index>(m.rows()), static_cast<Index>(m.cols()),
                     [](const IntMatrix& mm, Index i, Index j) {
                       const BigInt& v = mm(static_cast<std::size_t>(i), static_cast<std::size_t>(j));
                       return std::tuple{std::abs(v.get_d()), v == 0, v == -1, v == 1};
                     });
}

ScalarPoly chebyshev_to_monomial(std::span<const Complex> cheb) {
  const std::size_t n = cheb.size();
  ScalarPoly out(n, 0.0);
  if (n == 0) return out;
  ScalarPoly t_prev(n, 0.0), t_cur(n, 0.0);
  t_prev[0] = 1.0;
  out[0] += cheb[0];
  if (n == 1) return out;
  t_cur[1] = 1.0;
  for (std::size_t k = 1; k < n; ++k) {
    for (std::size_t j = 0; j < n; ++j) out[j] += cheb[k] * t_cur[j];
    ScalarPoly t_next(n, 0.0);
    for (std::size_t j = 0; j + 1 < n; ++j) t_next[j + 1] += 2.0 * t_cur[j];
    for (std::size_t j = 0; j < n; ++j) t_next[j] -= t_prev[j];
    t_prev = std::move(t_cur);
    t_cur = std::move(t_next);
  }
  return out;
}

}  // namespace alglin
