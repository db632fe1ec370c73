#include "alglin/pencil.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <random>
#include <sstream>

namespace alglin {

Pencil::Pencil(CMatrix d, CMatrix a, BlockMeta meta) : d_(std::move(d)), a_(std::move(a)), meta_(std::move(meta)) {
  if (a_.rows() != a_.cols() || d_.rows() != d_.cols())
    throw StructuralError("Pencil: D and A must be square");
  if (a_.rows() != d_.rows()) throw StructuralError("Pencil: D and A differ in size");
  if (a_.rows() == 0) throw StructuralError("Pencil: empty pencil");
}

StandardTriple::StandardTriple(CMatrix x, Pencil pencil, CMatrix y, bool weighted)
    : x_(std::move(x)), pencil_(std::move(pencil)), y_(std::move(y)), weighted_(weighted) {
  const Index n = pencil_.size();
  if (x_.cols() != n) throw StructuralError("StandardTriple: X must have N columns");
  if (y_.rows() != n) throw StructuralError("StandardTriple: Y must have N rows");
  if (x_.rows() != y_.cols()) throw StructuralError("StandardTriple: X rows and Y columns differ");
}

namespace {

double pivot_ratio(const Eigen::PartialPivLU<CMatrix>& lu) {
  const auto& m = lu.matrixLU();
  double lo = std::numeric_limits<double>::infinity();
  double hi = 0.0;
  for (Index i = 0; i < m.rows(); ++i) {
    const double a = std::abs(m(i, i));
    lo = std::min(lo, a);
    hi = std::max(hi, a);
  }
  if (lo == 0.0 || !std::isfinite(lo)) return std::numeric_limits<double>::infinity();
  return hi / lo;
}

std::string format_point(Complex z) {
  std::ostringstream os;
  os.precision(17);
  os << "(" << z.real() << ", " << z.imag() << ")";
  return os.str();
}

}  // namespace

double condition_estimate(const CMatrix& m) {
  if (m.rows() != m.cols()) throw StructuralError("condition_estimate: matrix is not square");
  Eigen::PartialPivLU<CMatrix> lu(m);
  return pivot_ratio(lu);
}

Complex pencil_det_at(const Pencil& p, Complex z) { return p.at(z).determinant(); }

CMatrix resolvent_eval(const StandardTriple& t, Complex z, double cond_limit) {
  Eigen::PartialPivLU<CMatrix> lu(t.pencil().at(z));
  if (pivot_ratio(lu) > cond_limit)
    throw SpectrumProximityError("resolvent_eval: zD - A is numerically singular at z = " + format_point(z), z);
  return t.X() * lu.solve(t.effective_Y());
}

bool is_regular(const Pencil& p, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> angle(0.0, 2.0 * std::numbers::pi);
  for (Index k = 0; k <= p.size(); ++k) {
    const Complex z = std::polar(2.0, angle(rng));
    if (condition_estimate(p.at(z)) < kSpectrumConditionLimit) return true;
  }
  return false;
}

bool is_block_upper_hessenberg(const CMatrix& m, Index block) {
  if (block <= 0) throw ContractError("is_block_upper_hessenberg: block size must be positive");
  for (Index i = 0; i < m.rows(); ++i)
    for (Index j = 0; j < m.cols(); ++j)
      if (i / block > j / block + 1 && m(i, j) != Complex(0.0)) return false;
  return true;
}

VerifyReport verify_triple(const StandardTriple& t, const MatPoly& p, const VerifyOptions& opts) {
  return verify_triple(t, [&p](Complex z) { return eval(p, z); }, p.dim(), p.grade(), opts);
}

VerifyReport verify_triple(const StandardTriple& t, const MatrixFunction& eval_fn, Index r, int degree_bound,
                           const VerifyOptions& opts) {
  if (t.dim() != r)
    throw StructuralError("verify_triple: triple has dimension " + std::to_string(t.dim()) +
                          " but the polynomial is " + std::to_string(r) + "x" + std::to_string(r));
  std::mt19937_64 rng(opts.seed);
  std::uniform_real_distribution<double> angle(0.0, 2.0 * std::numbers::pi);
  auto draw = [&] { return std::polar(opts.radius, angle(rng)); };

  VerifyReport rep;
  const Index n = t.size();
  const int det_points =
      opts.det_points > 0 ? opts.det_points : static_cast<int>(std::max<Index>(n, r * degree_bound) + 1);
  for (int k = 0; k < det_points; ++k) {
    const Complex z = draw();
    const Complex lhs = pencil_det_at(t.pencil(), z);
    const Complex rhs = eval_fn(z).determinant();
    rep.det_deviation = std::max(rep.det_deviation, std::abs(lhs - rhs) / std::max(1.0, std::abs(rhs)));
  }
  rep.det_points_used = det_points;

  const double cond_limit = 1.0 / opts.tol;
  int draws = 0;
  while (rep.resolvent_points_used < opts.n_points) {
    if (draws++ >= 100 * opts.n_points)
      throw DegenerateInputError("verify_triple: only " + std::to_string(rep.resolvent_points_used) + " of " +
                                 std::to_string(opts.n_points) + " admissible sample points found");
    const Complex z = draw();
    const CMatrix value = eval_fn(z);
    Eigen::PartialPivLU<CMatrix> value_lu(value);
    if (pivot_ratio(value_lu) > cond_limit) continue;
    if (condition_estimate(t.pencil().at(z)) > cond_limit) continue;
    const CMatrix inverse = value_lu.inverse();
    const CMatrix resolvent = resolvent_eval(t, z);
    rep.resolvent_deviation = std::max(rep.resolvent_deviation, (resolvent - inverse).norm() / inverse.norm());
    ++rep.resolvent_points_used;
  }
  rep.passed = rep.det_deviation <= opts.tol && rep.resolvent_deviation <= opts.tol;
  return rep;
}

}  // namespace alglin
