#include "alglin/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <random>

#include <Eigen/Eigenvalues>

namespace alglin {

ScalarPoly interp_charpoly(const Pencil& p) {
  const std::size_t m = static_cast<std::size_t>(p.size()) + 1;
  std::vector<Complex> roots(m);
  std::vector<Complex> values(m);
  for (std::size_t j = 0; j < m; ++j) {
    roots[j] = std::polar(1.0, 2.0 * std::numbers::pi * static_cast<double>(j) / static_cast<double>(m));
    values[j] = p.at(roots[j]).partialPivLu().determinant();
  }
  ScalarPoly coeffs(m, 0.0);
  for (std::size_t k = 0; k < m; ++k) {
    Complex acc = 0.0;
    for (std::size_t j = 0; j < m; ++j) acc += values[j] * std::conj(roots[(j * k) % m]);
    coeffs[k] = acc / static_cast<double>(m);
  }
  return coeffs;
}

namespace {

std::optional<IntMatrix> to_integer(const CMatrix& m) {
  IntMatrix out(static_cast<std::size_t>(m.rows()), static_cast<std::size_t>(m.cols()));
  for (Index i = 0; i < m.rows(); ++i)
    for (Index j = 0; j < m.cols(); ++j) {
      const Complex v = m(i, j);
      if (v.imag() != 0.0 || std::trunc(v.real()) != v.real()) return std::nullopt;
      out(static_cast<std::size_t>(i), static_cast<std::size_t>(j)) = v.real();
    }
  return out;
}

}  // namespace

std::optional<IntPoly> interp_charpoly_exact(const Pencil& p) {
  const auto d = to_integer(p.D());
  const auto a = to_integer(p.A());
  if (!d || !a) return std::nullopt;
  const std::size_t n = d->rows();
  std::vector<BigInt> values(n + 1);
  for (std::size_t z = 0; z <= n; ++z) {
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) m(i, j) = (*d)(i, j) * static_cast<long>(z) - (*a)(i, j);
    values[z] = bareiss_det(std::move(m));
  }
  return interpolate_at_naturals(values);
}

DetEqualityReport det_equality(const Pencil& p, const MatPoly& q, int n_points, double tol, std::uint64_t seed) {
  return det_equality(p, [&q](Complex z) { return eval(q, z); }, q.dim(), q.grade(), n_points, tol, seed);
}

DetEqualityReport det_equality(const Pencil& p, const MatrixFunction& q, Index r, int degree_bound, int n_points,
                               double tol, std::uint64_t seed) {
  DetEqualityReport rep;
  rep.points = n_points > 0 ? n_points : static_cast<int>(std::max<Index>(p.size(), r * degree_bound) + 1);
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> angle(0.0, 2.0 * std::numbers::pi);
  for (int k = 0; k < rep.points; ++k) {
    const Complex z = std::polar(2.0, angle(rng));
    const Complex lhs = p.at(z).partialPivLu().determinant();
    const CMatrix value = q(z);
    if (value.rows() != r || value.cols() != r) throw StructuralError("det_equality: evaluator returned wrong shape");
    const Complex rhs = value.partialPivLu().determinant();
    rep.max_deviation = std::max(rep.max_deviation, std::abs(lhs - rhs) / std::max(1.0, std::abs(rhs)));
  }
  rep.passed = rep.max_deviation <= tol;
  return rep;
}

std::vector<Complex> scalar_roots(const ScalarPoly& coeffs) {
  std::size_t n = coeffs.size();
  while (n > 0 && coeffs[n - 1] == Complex(0.0)) --n;
  if (n == 0) throw ContractError("scalar_roots: zero polynomial");
  if (n == 1) throw ContractError("scalar_roots: constant polynomial has no roots");
  const Index deg = static_cast<Index>(n - 1);
  CMatrix companion = CMatrix::Zero(deg, deg);
  for (Index i = 1; i < deg; ++i) companion(i, i - 1) = 1.0;
  for (Index i = 0; i < deg; ++i) companion(i, deg - 1) = -coeffs[static_cast<std::size_t>(i)] / coeffs[n - 1];
  Eigen::ComplexEigenSolver<CMatrix> solver(companion, false);
  if (solver.info() != Eigen::Success) throw Error("scalar_roots: eigensolver failed to converge");
  const auto& ev = solver.eigenvalues();
  return {ev.data(), ev.data() + ev.size()};
}

std::vector<Complex> scalar_roots(const IntPoly& coeffs) {
  ScalarPoly c;
  c.reserve(coeffs.size());
  for (const auto& v : coeffs) c.emplace_back(v.get_d());
  return scalar_roots(c);
}

ControllabilityReport controllability_matrix(const StandardTriple& t, int s) {
  if (s < 1) throw ContractError("controllability_matrix: s must be at least 1");
  const Index r = t.dim();
  const Index n = t.size();
  ControllabilityReport rep;
  rep.V = CMatrix::Zero(n, s * r);
  CMatrix block = t.Y();
  for (int k = 0; k < s; ++k) {
    rep.V.block(0, k * r, n, r) = block;
    if (k + 1 < s) block = t.pencil().A() * block;
  }
  Eigen::JacobiSVD<CMatrix> svd(rep.V);
  const auto& sv = svd.singularValues();
  const double lo = sv(sv.size() - 1);
  rep.condition = lo == 0.0 ? std::numeric_limits<double>::infinity() : sv(0) / lo;
  rep.nonsingular = rep.V.rows() == rep.V.cols() && rep.condition < kSpectrumConditionLimit;
  return rep;
}

}  // namespace alglin
