#include "alglin/eigensolve.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <sstream>

#include <lapacke.h>

namespace alglin {

namespace {

struct Candidate {
  Complex z;
  double cond;
};

Complex choose_shift(const Pencil& p, const EigenOptions& opts) {
  if (opts.shift) {
    if (condition_estimate(p.at(*opts.shift)) > opts.cond_limit)
      throw SingularPencilError("generalized_eigen: the requested shift is numerically an eigenvalue");
    return *opts.shift;
  }
  std::mt19937_64 rng(opts.seed);
  std::uniform_real_distribution<double> angle(0.0, 2.0 * std::numbers::pi);
  std::vector<Candidate> admissible;
  for (int k = 0; k < opts.max_shift_draws && static_cast<int>(admissible.size()) < opts.shift_candidates; ++k) {
    const Complex z = std::polar(opts.radius, angle(rng));
    const double cond = condition_estimate(p.at(z));
    if (cond <= opts.cond_limit) admissible.push_back({z, cond});
  }
  if (admissible.empty())
    throw SingularPencilError("generalized_eigen: no admissible shift in " + std::to_string(opts.max_shift_draws) +
                              " draws; the pencil looks singular");
  return std::min_element(admissible.begin(), admissible.end(),
                          [](const Candidate& a, const Candidate& b) { return a.cond < b.cond; })
      ->z;
}

// Eigenvalues of a dense complex matrix by LAPACK zgeev, which balances the
// matrix first.
CVector standard_eigenvalues(CMatrix w, Complex shift) {
  const lapack_int n = static_cast<lapack_int>(w.rows());
  CVector mu(w.rows());
  lapack_complex_double dummy[1];
  const lapack_int info = LAPACKE_zgeev(LAPACK_COL_MAJOR, 'N', 'N', n, reinterpret_cast<lapack_complex_double*>(w.data()),
                                        n, reinterpret_cast<lapack_complex_double*>(mu.data()), dummy, 1, dummy, 1);
  if (info != 0) {
    std::ostringstream os;
    os << "generalized_eigen: zgeev failed with info " << info << " (shift " << shift << ")";
    throw Error(os.str());
  }
  return mu;
}

// QZ by LAPACK zggev; returns (alpha, beta) pairs.
std::pair<CVector, CVector> qz_eigenvalues(const Pencil& p) {
  CMatrix a = p.A();
  CMatrix d = p.D();
  const lapack_int n = static_cast<lapack_int>(a.rows());
  CVector alpha(a.rows());
  CVector beta(a.rows());
  lapack_complex_double dummy[1];
  const lapack_int info = LAPACKE_zggev(LAPACK_COL_MAJOR, 'N', 'N', n, reinterpret_cast<lapack_complex_double*>(a.data()),
                                        n, reinterpret_cast<lapack_complex_double*>(d.data()), n,
                                        reinterpret_cast<lapack_complex_double*>(alpha.data()),
                                        reinterpret_cast<lapack_complex_double*>(beta.data()), dummy, 1, dummy, 1);
  if (info != 0) throw Error("generalized_eigen: zggev failed with info " + std::to_string(info));
  return {std::move(alpha), std::move(beta)};
}

}  // namespace

EigenReport generalized_eigen(const Pencil& p, const EigenOptions& opts) {
  const Index n = p.size();
  EigenReport rep;
  // score is a scale-free "finiteness" of each eigenvalue: |mu| / ||W|| for
  // shift-invert, |beta| / |(alpha, beta)| for QZ. Zero means infinite.
  std::vector<double> score(static_cast<std::size_t>(n));
  std::vector<Complex> value(static_cast<std::size_t>(n));
  if (opts.backend == EigenBackend::ShiftInvert) {
    rep.backend = "shift-invert/zgeev";
    rep.shift_used = choose_shift(p, opts);
    Eigen::PartialPivLU<CMatrix> lu(p.at(rep.shift_used));
    const CMatrix w = lu.solve(p.D());
    const double norm_w = w.cwiseAbs().rowwise().sum().maxCoeff();
    const CVector mu = standard_eigenvalues(w, rep.shift_used);
    for (Index i = 0; i < n; ++i) {
      const auto k = static_cast<std::size_t>(i);
      score[k] = norm_w == 0.0 ? 0.0 : std::abs(mu(i)) / norm_w;
      value[k] = mu(i) == Complex(0.0) ? Complex(0.0) : rep.shift_used - 1.0 / mu(i);
    }
  } else {
    rep.backend = "qz/zggev";
    const auto [alpha, beta] = qz_eigenvalues(p);
    for (Index i = 0; i < n; ++i) {
      const auto k = static_cast<std::size_t>(i);
      const double len = std::hypot(std::abs(alpha(i)), std::abs(beta(i)));
      score[k] = len == 0.0 ? 0.0 : std::abs(beta(i)) / len;
      value[k] = beta(i) == Complex(0.0) ? Complex(0.0) : alpha(i) / beta(i);
    }
  }

  std::vector<std::size_t> order(static_cast<std::size_t>(n));
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  // Most finite first; ties keep solver order so the output is reproducible.
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return score[a] > score[b]; });

  std::size_t keep = 0;
  if (opts.finite_count) {
    if (*opts.finite_count < 0 || *opts.finite_count > n)
      throw ContractError("generalized_eigen: finite_count out of range");
    keep = static_cast<std::size_t>(*opts.finite_count);
  } else {
    while (keep < order.size() && score[order[keep]] >= opts.inf_tol && score[order[keep]] > 0.0) ++keep;
  }

  // Finite eigenvalues are reported in solver order.
  std::vector<bool> finite(order.size(), false);
  for (std::size_t k = 0; k < keep; ++k) finite[order[k]] = true;
  for (std::size_t i = 0; i < order.size(); ++i)
    if (finite[i]) rep.finite.push_back(value[i]);
  rep.infinite_count = n - static_cast<Index>(keep);
  if (keep > 0) rep.smallest_finite_ratio = score[order[keep - 1]];
  if (keep < order.size()) rep.largest_infinite_ratio = score[order[keep]];
  return rep;
}

double residual_at(const CMatrix& value) {
  if (value.isZero(0.0)) return 0.0;
  Eigen::JacobiSVD<CMatrix> svd(value);
  const auto& s = svd.singularValues();
  return s(s.size() - 1) / s(0);
}

std::vector<double> residuals(const MatrixFunction& f, const std::vector<Complex>& eigs) {
  std::vector<double> out;
  out.reserve(eigs.size());
  for (const auto& z : eigs) out.push_back(residual_at(f(z)));
  return out;
}

std::vector<double> residuals(const MatPoly& p, const std::vector<Complex>& eigs) {
  return residuals([&p](Complex z) { return eval(p, z); }, eigs);
}

MatchReport match_roots(const std::vector<Complex>& eigs, const std::vector<Complex>& refs) {
  struct Edge {
    double dist;
    std::size_t i;
    std::size_t j;
  };
  std::vector<Edge> edges;
  edges.reserve(eigs.size() * refs.size());
  for (std::size_t i = 0; i < eigs.size(); ++i)
    for (std::size_t j = 0; j < refs.size(); ++j) edges.push_back({std::abs(eigs[i] - refs[j]), i, j});
  std::stable_sort(edges.begin(), edges.end(), [](const Edge& a, const Edge& b) { return a.dist < b.dist; });

  std::vector<bool> used_eig(eigs.size(), false);
  std::vector<bool> used_ref(refs.size(), false);
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  const std::size_t target = std::min(eigs.size(), refs.size());
  for (const auto& e : edges) {
    if (pairs.size() == target) break;
    if (used_eig[e.i] || used_ref[e.j]) continue;
    used_eig[e.i] = used_ref[e.j] = true;
    pairs.emplace_back(e.i, e.j);
  }
  std::sort(pairs.begin(), pairs.end());

  MatchReport rep;
  for (const auto& [i, j] : pairs) {
    const double err = std::abs(eigs[i] - refs[j]);
    rep.forward_errors.push_back(err);
    rep.max_error = std::max(rep.max_error, err);
  }
  rep.pairs = std::move(pairs);
  for (std::size_t i = 0; i < eigs.size(); ++i)
    if (!used_eig[i]) rep.unmatched_eigs.push_back(i);
  for (std::size_t j = 0; j < refs.size(); ++j)
    if (!used_ref[j]) rep.unmatched_refs.push_back(j);
  return rep;
}

}  // namespace alglin
