#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "alglin/matpoly.hpp"
#include "alglin/types.hpp"

namespace alglin {

// Block-structure description carried alongside a pencil. `partition` lists
// the diagonal block sizes in order (e.g. {s*r, r, t*r} for a composite).
struct BlockMeta {
  std::string kind;
  std::vector<Index> partition;
  Index block_size = 0;
  bool block_upper_hessenberg = false;
};

// The pencil z*D - A.
class Pencil {
 public:
  Pencil(CMatrix d, CMatrix a, BlockMeta meta = {});

  const CMatrix& D() const noexcept { return d_; }
  const CMatrix& A() const noexcept { return a_; }
  Index size() const noexcept { return a_.rows(); }
  const BlockMeta& meta() const noexcept { return meta_; }

  CMatrix at(Complex z) const { return z * d_ - a_; }

 private:
  CMatrix d_;
  CMatrix a_;
  BlockMeta meta_;
};

// (X, (D, A), Y) with resolvent X (zD - A)^{-1} Y, or X (zD - A)^{-1} D Y
// when `weighted` is set.
class StandardTriple {
 public:
  StandardTriple(CMatrix x, Pencil pencil, CMatrix y, bool weighted = false);

  const CMatrix& X() const noexcept { return x_; }
  const CMatrix& Y() const noexcept { return y_; }
  const Pencil& pencil() const noexcept { return pencil_; }
  bool weighted() const noexcept { return weighted_; }

  Index dim() const noexcept { return x_.rows(); }
  Index size() const noexcept { return pencil_.size(); }

  // Right factor of the equivalent unweighted resolvent: D*Y when weighted.
  CMatrix effective_Y() const { return weighted_ ? CMatrix(pencil_.D() * y_) : y_; }

 private:
  CMatrix x_;
  Pencil pencil_;
  CMatrix y_;
  bool weighted_;
};

using MatrixFunction = std::function<CMatrix(Complex)>;

// Cheap condition estimate of a square matrix: ratio of the largest to the
// smallest pivot magnitude of a partially pivoted LU. Infinite when a pivot is
// exactly zero.
double condition_estimate(const CMatrix& m);

inline constexpr double kSpectrumConditionLimit = 1e12;

Complex pencil_det_at(const Pencil& p, Complex z);

CMatrix resolvent_eval(const StandardTriple& t, Complex z, double cond_limit = kSpectrumConditionLimit);

// det(zD - A) is not identically zero: at least one of N+1 points on the
// radius-2 circle has a condition estimate below the spectrum limit.
bool is_regular(const Pencil& p, std::uint64_t seed = 7);

// Zero pattern below the first block subdiagonal, for uniform blocks.
bool is_block_upper_hessenberg(const CMatrix& m, Index block);

struct VerifyOptions {
  int n_points = 5;       // admissible resolvent sample points
  double tol = 1e-8;
  int det_points = 0;     // 0 = max(N, r*degree) + 1
  std::uint64_t seed = 20240521;
  double radius = 2.0;
};

struct VerifyReport {
  double det_deviation = 0.0;
  double resolvent_deviation = 0.0;
  int det_points_used = 0;
  int resolvent_points_used = 0;
  bool passed = false;
};

// Checks det(zD - A) == det p(z) and resolvent == p(z)^{-1} at sampled points.
VerifyReport verify_triple(const StandardTriple& t, const MatPoly& p, const VerifyOptions& opts = {});

// Same check against an arbitrary evaluator of an r x r polynomial of degree
// at most `degree_bound`.
VerifyReport verify_triple(const StandardTriple& t, const MatrixFunction& eval_fn, Index r, int degree_bound,
                           const VerifyOptions& opts = {});

}  // namespace alglin
