#include "alglin/experiments.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <future>
#include <limits>

#include "alglin/constructions.hpp"
#include "alglin/fixtures.hpp"
#include "alglin/oracle.hpp"

namespace alglin {

std::vector<FamilyMember> build_family(int k_max, const std::vector<CMatrix>& c) {
  if (c.empty()) throw ContractError("build_family: no c_k matrices");
  const Index r = c.front().rows();
  const CMatrix id = CMatrix::Identity(r, r);
  std::vector<FamilyMember> out;
  auto c_at = [&c](int k) { return c[static_cast<std::size_t>(k) % c.size()]; };

  const CMatrix c0 = c_at(0);
  out.push_back({frobenius_triple(MatPoly::monomial({c0, id})), [c0](Complex z) -> CMatrix {
                   return z * CMatrix::Identity(c0.rows(), c0.cols()) + c0;
                 }});
  for (int k = 1; k < k_max; ++k) {
    const CMatrix ck = c_at(k);
    const auto& prev = out.back();
    StandardTriple t = composite(prev.triple, prev.triple, id, ck);
    MatrixFunction f = [hk = prev.evaluator, ck](Complex z) -> CMatrix {
      const CMatrix h = hk(z);
      return z * h * h + ck;
    };
    out.push_back({std::move(t), std::move(f)});
  }
  return out;
}

FamilyResult run_family(int k_max, std::uint64_t seed, int k_min, int cap, const std::vector<CMatrix>* c_override) {
  if (k_max < 1 || k_min < 1 || k_min > k_max) throw ContractError("run_family: need 1 <= k_min <= k_max");
  if (k_max > cap)
    throw ResourceError("run_family: k_max = " + std::to_string(k_max) + " exceeds the cap " + std::to_string(cap));
  const auto& c = c_override ? *c_override : fixtures::family_c();

  FamilyResult result;
  for (std::size_t k = 0; k < c.size(); ++k)
    if (condition_estimate(c[k]) > kSpectrumConditionLimit)
      result.warnings.push_back("c_" + std::to_string(k) +
                                " is singular; expect zero eigenvalues of high multiplicity");

  auto members = build_family(k_max, c);
  std::vector<std::future<FamilyLevel>> jobs;
  for (int k = k_min; k <= k_max; ++k) {
    const auto& m = members[static_cast<std::size_t>(k - 1)];
    jobs.push_back(std::async(std::launch::async, [&m, k, seed] {
      FamilyLevel level;
      level.k = k;
      level.dim = m.triple.size();
      EigenOptions opts;
      opts.seed = seed + static_cast<std::uint64_t>(k);
      const auto start = std::chrono::steady_clock::now();
      level.eig = generalized_eigen(m.triple.pencil(), opts);
      level.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
      level.eig.residuals = residuals(m.evaluator, level.eig.finite);
      for (double v : level.eig.residuals) level.max_residual = std::max(level.max_residual, v);
      return level;
    }));
  }
  for (auto& j : jobs) result.levels.push_back(j.get());
  return result;
}

std::vector<CMatrix> quintic_b() {
  const auto& a = fixtures::quintic_a();
  const CMatrix a3_inv = a[3].partialPivLu().inverse();
  const CMatrix b3 = a3_inv;
  const CMatrix b2 = -a3_inv * a[2] * b3;
  const CMatrix b1 = -a3_inv * (a[1] * b3 + a[2] * b2);
  return {fixtures::quintic_b0(), b1, b2, b3};
}

std::vector<CMatrix> quintic_expanded() {
  const auto& a = fixtures::quintic_a();
  const auto b = quintic_b();
  const Index r = a[0].rows();
  std::vector<CMatrix> h(8, CMatrix::Zero(r, r));
  h[0] = CMatrix::Identity(r, r);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) h[i + j + 1] += a[i] * b[j];
  return h;
}

QuinticResult run_random_quintic(std::uint64_t seed) {
  const MatPoly a = MatPoly::monomial(fixtures::quintic_a());
  const MatPoly b = MatPoly::monomial(quintic_b());
  const Index r = a.dim();
  const CMatrix id = CMatrix::Identity(r, r);
  auto h = [&a, &b, &id](Complex z) -> CMatrix { return z * eval(a, z) * eval(b, z) + id; };

  const StandardTriple algebraic = composite(frobenius_triple(a), frobenius_triple(b), id, id);
  const StandardTriple direct = frobenius_triple(MatPoly::monomial(quintic_expanded()));

  auto solve = [&](const StandardTriple& t, EigenBackend backend) {
    EigenOptions opts;
    opts.seed = seed;
    opts.backend = backend;
    EigenReport rep = generalized_eigen(t.pencil(), opts);
    rep.residuals = residuals(h, rep.finite);
    return rep;
  };
  auto max_of = [](const std::vector<double>& v) { return v.empty() ? 0.0 : *std::max_element(v.begin(), v.end()); };
  auto alg_job = std::async(std::launch::async, solve, std::cref(algebraic), EigenBackend::QZ);
  auto frob_job = std::async(std::launch::async, solve, std::cref(direct), EigenBackend::QZ);

  QuinticResult res;
  res.algebraic = alg_job.get();
  res.frobenius = frob_job.get();
  res.backend = res.algebraic.backend;
  res.algebraic_size = algebraic.size();
  res.frobenius_size = direct.size();
  res.algebraic_max_residual = max_of(res.algebraic.residuals);
  res.frobenius_max_residual = max_of(res.frobenius.residuals);
  res.ratio = res.algebraic_max_residual > 0.0 ? res.frobenius_max_residual / res.algebraic_max_residual : 0.0;
  res.shift_invert_algebraic_max_residual = max_of(solve(algebraic, EigenBackend::ShiftInvert).residuals);
  res.shift_invert_frobenius_max_residual = max_of(solve(direct, EigenBackend::ShiftInvert).residuals);
  return res;
}

MixedResult run_mixed_basis(std::uint64_t seed) {
  const MatPoly a = fixtures::mixed_a();
  const MatPoly b = fixtures::mixed_b();
  const Index r = a.dim();
  const CMatrix id = CMatrix::Identity(r, r);
  const StandardTriple t = composite(lagrange_triple(a), chebyshev_triple(b), id, id);
  auto h = [&a, &b, &id](Complex z) -> CMatrix { return z * eval(a, z) * eval(b, z) + id; };

  MixedResult res;
  res.size = t.size();
  res.partition = t.pencil().meta().partition;
  res.notes.push_back("c0 = I_3 (not specified by the reference experiment)");

  // The degree of det h(z) fixes how many eigenvalues are finite. Taken from
  // the oracle's coefficients, with the top ones that are pure rounding noise
  // dropped.
  ScalarPoly coeffs = interp_charpoly(t.pencil());
  double scale = 0.0;
  for (const auto& v : coeffs) scale = std::max(scale, std::abs(v));
  std::size_t deg = coeffs.size() - 1;
  while (deg > 0 && std::abs(coeffs[deg]) <= 1e-10 * scale) --deg;
  coeffs.resize(deg + 1);
  res.det_degree = static_cast<int>(deg);
  res.oracle_roots = scalar_roots(coeffs);

  EigenOptions opts;
  opts.seed = seed;
  res.eig = generalized_eigen(t.pencil(), opts);
  res.tol_rule_infinite_count = res.eig.infinite_count;
  if (static_cast<int>(res.eig.finite.size()) != res.det_degree) {
    // The tolerance split disagrees with the degree; fall back to the degree.
    res.notes.push_back("inf_tol split gave " + std::to_string(res.eig.finite.size()) +
                        " finite eigenvalues; using the degree of det h(z) instead");
    opts.finite_count = static_cast<Index>(deg);
    res.eig = generalized_eigen(t.pencil(), opts);
  }
  res.eig.residuals = residuals(h, res.eig.finite);
  for (double v : res.eig.residuals) res.max_residual = std::max(res.max_residual, v);
  res.match = match_roots(res.eig.finite, res.oracle_roots);
  res.notes.push_back(std::to_string(res.eig.infinite_count) +
                      " infinite eigenvalues from the zero D blocks were discarded");
  return res;
}

namespace {

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string short_num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6g", v);
  return buf;
}

}  // namespace

std::string eigen_csv(const EigenReport& rep) {
  std::string out = "re,im,residual\n";
  for (std::size_t i = 0; i < rep.finite.size(); ++i) {
    out += num(rep.finite[i].real()) + "," + num(rep.finite[i].imag()) + ",";
    out += i < rep.residuals.size() ? num(rep.residuals[i]) : std::string("nan");
    out += "\n";
  }
  return out;
}

std::string eigen_svg(const EigenReport& rep, const std::string& title) {
  constexpr double size = 480.0;
  constexpr double pad = 40.0;
  double xmin = -1.0, xmax = 1.0, ymin = -1.0, ymax = 1.0;
  if (!rep.finite.empty()) {
    xmin = ymin = std::numeric_limits<double>::infinity();
    xmax = ymax = -std::numeric_limits<double>::infinity();
    for (const auto& z : rep.finite) {
      xmin = std::min(xmin, z.real());
      xmax = std::max(xmax, z.real());
      ymin = std::min(ymin, z.imag());
      ymax = std::max(ymax, z.imag());
    }
  }
  const double span = std::max({xmax - xmin, ymax - ymin, 1e-12}) * 1.05;
  const double cx = 0.5 * (xmin + xmax);
  const double cy = 0.5 * (ymin + ymax);
  auto px = [&](double x) { return pad + (x - cx + span / 2) / span * (size - 2 * pad); };
  auto py = [&](double y) { return size - pad - (y - cy + span / 2) / span * (size - 2 * pad); };

  std::string out = "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"480\" height=\"480\" viewBox=\"0 0 480 480\">\n";
  out += "<rect width=\"480\" height=\"480\" fill=\"white\"/>\n";
  out += "<text x=\"240\" y=\"20\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"13\">" + title +
         "</text>\n";
  if (cx - span / 2 <= 0 && 0 <= cx + span / 2)
    out += "<line x1=\"" + short_num(px(0)) + "\" y1=\"" + short_num(pad) + "\" x2=\"" + short_num(px(0)) +
           "\" y2=\"" + short_num(size - pad) + "\" stroke=\"#bbb\"/>\n";
  if (cy - span / 2 <= 0 && 0 <= cy + span / 2)
    out += "<line x1=\"" + short_num(pad) + "\" y1=\"" + short_num(py(0)) + "\" x2=\"" + short_num(size - pad) +
           "\" y2=\"" + short_num(py(0)) + "\" stroke=\"#bbb\"/>\n";
  out += "<text x=\"" + short_num(pad) + "\" y=\"" + short_num(size - 12) +
         "\" font-family=\"sans-serif\" font-size=\"10\">re [" + short_num(cx - span / 2) + ", " +
         short_num(cx + span / 2) + "], im [" + short_num(cy - span / 2) + ", " + short_num(cy + span / 2) +
         "]</text>\n";
  for (const auto& z : rep.finite)
    out += "<circle cx=\"" + short_num(px(z.real())) + "\" cy=\"" + short_num(py(z.imag())) +
           "\" r=\"1.8\" fill=\"#1f4e9a\"/>\n";
  out += "</svg>\n";
  return out;
}

}  // namespace alglin
