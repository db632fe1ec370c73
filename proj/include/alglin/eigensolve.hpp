#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "alglin/matpoly.hpp"
#include "alglin/pencil.hpp"

namespace alglin {

enum class EigenBackend {
  // W = (sigma D - A)^{-1} D, standard eigenvalues mu, z = sigma - 1/mu.
  ShiftInvert,
  // Generalized Schur (QZ) on (A, D) directly; no shift.
  QZ,
};

struct EigenOptions {
  EigenBackend backend = EigenBackend::ShiftInvert;
  std::uint64_t seed = 1;
  // Shift-invert: |mu| < inf_tol * ||W||_inf marks an infinite eigenvalue.
  // QZ: |beta| < inf_tol * |(alpha, beta)|.
  double inf_tol = 1e-12;
  int shift_candidates = 5;
  int max_shift_draws = 50;
  double cond_limit = kSpectrumConditionLimit;
  double radius = 2.0;
  std::optional<Complex> shift;
  // When set, exactly this many eigenvalues are kept as finite: the ones with
  // the largest |mu|. Used when the degree of det(zD - A) is known and the
  // infinite eigenvalues sit in Jordan chains, where |mu| is only ~ sqrt(eps).
  std::optional<Index> finite_count;
};

struct EigenReport {
  std::vector<Complex> finite;
  Index infinite_count = 0;
  std::vector<double> residuals;
  Complex shift_used = 0.0;
  std::string backend;
  // Smallest finiteness score kept and largest discarded (|mu| / ||W|| or
  // |beta| / |(alpha, beta)|), showing how clean the finite/infinite split was.
  double smallest_finite_ratio = 0.0;
  double largest_infinite_ratio = 0.0;
};

// Eigenvalues of z D - A. The default shift-and-invert path maps the
// eigenvalues mu of W = (sigma D - A)^{-1} D to z = sigma - 1/mu; mu ~ 0 are
// infinite eigenvalues.
EigenReport generalized_eigen(const Pencil& p, const EigenOptions& opts = {});

// sigma_min / sigma_max of the value at each point.
std::vector<double> residuals(const MatPoly& p, const std::vector<Complex>& eigs);
std::vector<double> residuals(const MatrixFunction& f, const std::vector<Complex>& eigs);
double residual_at(const CMatrix& value);

struct MatchReport {
  std::vector<std::pair<std::size_t, std::size_t>> pairs;  // (eig, ref), sorted by eig index
  std::vector<double> forward_errors;                      // aligned with pairs
  double max_error = 0.0;
  std::vector<std::size_t> unmatched_eigs;
  std::vector<std::size_t> unmatched_refs;
};

// Greedy matching: repeatedly pairs the closest unmatched (eig, ref).
MatchReport match_roots(const std::vector<Complex>& eigs, const std::vector<Complex>& refs);

}  // namespace alglin
