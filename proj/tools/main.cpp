// alglin: build, solve and verify algebraic linearizations of matrix
// polynomials, and rerun the reference experiments.

#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "alglin/constructions.hpp"
#include "alglin/eigensolve.hpp"
#include "alglin/experiments.hpp"
#include "alglin/expression.hpp"
#include "alglin/json_io.hpp"
#include "alglin/mandelbrot.hpp"
#include "alglin/oracle.hpp"

namespace fs = std::filesystem;
using namespace alglin;

namespace {

constexpr int kExitPass = 0;
constexpr int kExitUsage = 1;
constexpr int kExitVerification = 2;

struct Common {
  std::uint64_t seed = 1;
  double tol = 1e-8;
  int points = 5;
  std::string emit;
  std::string out;
};

void write_file(const fs::path& path, const std::string& text) {
  if (path.has_parent_path()) fs::create_directories(path.parent_path());
  std::ofstream f(path, std::ios::binary);
  if (!f) throw Error("cannot write " + path.string());
  f << text;
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

// Writes to --out (a directory) or stdout.
void emit_text(const Common& c, const std::string& name, const std::string& text) {
  if (c.out.empty()) {
    std::cout << text;
  } else {
    write_file(fs::path(c.out) / name, text);
    std::cout << "wrote " << (fs::path(c.out) / name).string() << "\n";
  }
}

void emit_eigen(const Common& c, const std::string& stem, const EigenReport& rep, const std::string& title) {
  const std::string kind = c.emit.empty() ? "json" : c.emit;
  if (kind == "csv") emit_text(c, stem + ".csv", eigen_csv(rep));
  else if (kind == "svg") emit_text(c, stem + ".svg", eigen_svg(rep, title));
  else emit_text(c, stem + ".json", dump(to_json(rep)));
}

std::string fmt(double v) {
  std::ostringstream os;
  os << std::setprecision(3) << std::scientific << v;
  return os.str();
}

void print_int_matrix(const IntMatrix& m) {
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) std::cout << std::setw(3) << m(i, j).get_str();
    std::cout << "\n";
  }
}

Pencil load_pencil(const Json& j) {
  if (j.contains("pencil")) return triple_from_json(j).pencil();
  return pencil_from_json(j);
}

int cmd_mandelbrot(const Common& c, int n) {
  const auto m = mandelbrot_matrix(n);
  const auto inv = inverse_structure(n);
  std::vector<long> pts = {-3, -2, -1, 0, 1, 2, 3};
  const bool charpoly = charpoly_identity(m.entries, n, pts);
  std::cout << "M_" << n << ": " << m.dim << " x " << m.dim << "\n";
  if (m.dim <= 31) {
    print_int_matrix(m.entries);
    std::cout << "inverse:\n";
    print_int_matrix(inv.inverse);
  }
  std::cout << "bottom-left of inverse: " << inv.corner_value.get_str() << "\n"
            << "inverse height 1: " << (inv.height1 ? "yes" : "no") << "\n"
            << "M * inverse = I: " << (inv.identity_ok ? "yes" : "no") << "\n"
            << "det(zI - M) = p_n(z) on -3..3: " << (charpoly ? "yes" : "no") << "\n";
  if (!c.out.empty()) {
    write_file(fs::path(c.out) / ("M" + std::to_string(n) + ".csv"), to_csv(m.entries));
    write_file(fs::path(c.out) / ("M" + std::to_string(n) + "_inverse.csv"), to_csv(inv.inverse));
    Json rep = to_json(inv);
    rep["charpoly_identity"] = charpoly;
    rep["height"] = to_json(height_report(m.entries));
    write_file(fs::path(c.out) / ("M" + std::to_string(n) + "_report.json"), dump(rep));
  }
  const bool ok = inv.height1 && inv.identity_ok && inv.corner_value == -1 && inv.zero_block_ok && charpoly;
  return ok ? kExitPass : kExitVerification;
}

int cmd_build(const Common& c, const std::string& path) {
  const auto built = build_expression(read_json_file(path));
  const std::string text = dump(to_json(built.triple));
  if (c.out.empty()) std::cout << text;
  else write_file(c.out, text);
  return kExitPass;
}

int cmd_eig(const Common& c, const std::string& path, const std::string& backend, long finite_count) {
  const Pencil p = load_pencil(read_json_file(path));
  EigenOptions opts;
  opts.seed = c.seed;
  if (backend == "qz") opts.backend = EigenBackend::QZ;
  if (finite_count >= 0) opts.finite_count = finite_count;
  const EigenReport rep = generalized_eigen(p, opts);
  emit_eigen(c, fs::path(path).stem().string() + "_eig", rep, "eigenvalues, N = " + std::to_string(p.size()));
  return kExitPass;
}

int cmd_verify(const Common& c, const std::string& path, const std::string& poly_path) {
  VerifyOptions vo;
  vo.seed = c.seed;
  vo.tol = c.tol;
  vo.n_points = c.points;
  VerifyReport rep;
  DetEqualityReport det;
  if (poly_path.empty()) {
    const auto built = build_expression(read_json_file(path));
    rep = verify_triple(built.triple, built.evaluator, built.r, built.degree, vo);
    det = det_equality(built.triple.pencil(), built.evaluator, built.r, built.degree, 0, c.tol, c.seed);
  } else {
    const auto t = triple_from_json(read_json_file(path));
    const auto p = matpoly_from_json(read_json_file(poly_path));
    rep = verify_triple(t, p, vo);
    det = det_equality(t.pencil(), p, 0, c.tol, c.seed);
  }
  Json j;
  j["det_deviation"] = rep.det_deviation;
  j["resolvent_deviation"] = rep.resolvent_deviation;
  j["det_points"] = rep.det_points_used;
  j["resolvent_points"] = rep.resolvent_points_used;
  j["oracle_det_deviation"] = det.max_deviation;
  j["tol"] = c.tol;
  const bool pass = rep.passed && det.passed;
  j["passed"] = pass;
  std::cout << dump(j);
  return pass ? kExitPass : kExitVerification;
}

int cmd_height(const std::string& path) {
  const CMatrix m = square_matrix_from_json(read_json_file(path));
  std::cout << dump(to_json(height_report(m)));
  return kExitPass;
}

int cmd_family(const Common& c, int k_max, int k_min) {
  const auto result = run_family(k_max, c.seed, k_min);
  for (const auto& w : result.warnings) std::cerr << "warning: " << w << "\n";
  std::cout << "  k    dim  finite  infinite  max residual  solve (s)\n";
  for (const auto& l : result.levels) {
    std::cout << std::setw(3) << l.k << std::setw(7) << l.dim << std::setw(8) << l.eig.finite.size() << std::setw(10)
              << l.eig.infinite_count << std::setw(14) << fmt(l.max_residual) << std::setw(11) << std::fixed
              << std::setprecision(3) << l.seconds << std::defaultfloat << "\n";
    if (!c.emit.empty() && !c.out.empty())
      emit_eigen(c, "family_k" + std::to_string(l.k), l.eig,
                 "h_" + std::to_string(l.k) + ", N = " + std::to_string(l.dim));
  }
  if (c.emit == "json" && !c.out.empty()) {
    Json summary = Json::array();
    for (const auto& l : result.levels)
      summary.push_back({{"k", l.k}, {"dim", l.dim}, {"finite", l.eig.finite.size()},
                         {"infinite_count", l.eig.infinite_count}, {"max_residual", l.max_residual}});
    write_file(fs::path(c.out) / "family_summary.json", dump(summary));
  }
  return kExitPass;
}

int cmd_quintic(const Common& c) {
  const auto q = run_random_quintic(c.seed);
  std::cout << "solver: " << q.backend << "\n"
            << "algebraic linearization: N = " << q.algebraic_size << ", " << q.algebraic.finite.size()
            << " finite, max residual " << fmt(q.algebraic_max_residual) << "\n"
            << "Frobenius linearization: N = " << q.frobenius_size << ", " << q.frobenius.finite.size()
            << " finite, max residual " << fmt(q.frobenius_max_residual) << "\n"
            << "ratio Frobenius / algebraic: " << fmt(q.ratio) << "\n"
            << "shift-invert for reference: algebraic " << fmt(q.shift_invert_algebraic_max_residual)
            << ", Frobenius " << fmt(q.shift_invert_frobenius_max_residual) << "\n";
  if (!c.out.empty()) {
    const std::string kind = c.emit.empty() ? "json" : c.emit;
    if (kind == "json") {
      Json j;
      j["algebraic"] = to_json(q.algebraic);
      j["frobenius"] = to_json(q.frobenius);
      j["algebraic_max_residual"] = q.algebraic_max_residual;
      j["frobenius_max_residual"] = q.frobenius_max_residual;
      j["backend"] = q.backend;
      write_file(fs::path(c.out) / "quintic.json", dump(j));
    } else {
      emit_eigen(c, "quintic_algebraic", q.algebraic, "algebraic linearization");
      emit_eigen(c, "quintic_frobenius", q.frobenius, "Frobenius linearization");
    }
  }
  return kExitPass;
}

int cmd_mixed(const Common& c) {
  const auto m = run_mixed_basis(c.seed);
  std::cout << "pencil size " << m.size << ", partition (";
  for (std::size_t i = 0; i < m.partition.size(); ++i) std::cout << (i ? ", " : "") << m.partition[i];
  std::cout << ")\n"
            << "det h(z) degree " << m.det_degree << ": " << m.eig.finite.size() << " finite, "
            << m.eig.infinite_count << " infinite (the inf_tol rule alone finds " << m.tol_rule_infinite_count
            << ")\n"
            << "max forward error vs oracle roots: " << fmt(m.match.max_error) << "\n"
            << "max residual: " << fmt(m.max_residual) << "\n";
  for (const auto& n : m.notes) std::cout << "note: " << n << "\n";
  if (!c.out.empty()) {
    const std::string kind = c.emit.empty() ? "json" : c.emit;
    if (kind == "json") {
      Json j = to_json(m.eig);
      j["max_forward_error"] = m.match.max_error;
      j["det_degree"] = m.det_degree;
      j["partition"] = m.partition;
      j["notes"] = m.notes;
      write_file(fs::path(c.out) / "mixed.json", dump(j));
    } else {
      emit_eigen(c, "mixed", m.eig, "Lagrange x Chebyshev composite");
    }
  }
  return kExitPass;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Algebraic linearizations of matrix polynomials"};
  app.require_subcommand(1);
  Common c;
  app.add_option("--seed", c.seed, "Seed for every random draw (shifts, sample points)");
  app.add_option("--tol", c.tol, "Verification tolerance");
  app.add_option("--points", c.points, "Resolvent sample points for verify");
  app.add_option("--emit", c.emit, "Output format")->check(CLI::IsMember({"csv", "svg", "json"}));
  app.add_option("--out", c.out, "Output directory (build: output file)");

  int n = 0;
  auto* mandel = app.add_subcommand("mandelbrot", "Mandelbrot matrix M_n, its inverse and the charpoly check");
  mandel->add_option("n", n, "Level (>= 2)")->required();

  std::string path;
  auto* build = app.add_subcommand("build", "Build a triple from a composition expression");
  build->add_option("expr", path, "Expression JSON")->required()->check(CLI::ExistingFile);

  std::string backend = "shift-invert";
  long finite_count = -1;
  auto* eig = app.add_subcommand("eig", "Eigenvalues of a pencil or triple JSON");
  eig->add_option("pencil", path, "Pencil or triple JSON")->required()->check(CLI::ExistingFile);
  eig->add_option("--backend", backend, "shift-invert or qz")->check(CLI::IsMember({"shift-invert", "qz"}));
  eig->add_option("--finite", finite_count, "Known number of finite eigenvalues");

  std::string poly_path;
  auto* verify = app.add_subcommand("verify", "Check det and resolvent identities");
  verify->add_option("input", path, "Expression JSON, or triple JSON with --poly")->required()->check(CLI::ExistingFile);
  verify->add_option("--poly", poly_path, "MatPoly JSON the triple should represent")->check(CLI::ExistingFile);

  auto* height = app.add_subcommand("height", "Height report of a matrix JSON");
  height->add_option("matrix", path, "Matrix JSON")->required()->check(CLI::ExistingFile);

  int k_max = 6;
  int k_min = 1;
  auto* family = app.add_subcommand("family", "Recursive h_k family");
  family->add_option("--kmax", k_max, "Largest k");
  family->add_option("--kmin", k_min, "Smallest k");

  auto* quintic = app.add_subcommand("quintic", "Algebraic vs Frobenius linearization, 5x5 degree 7");
  auto* mixed = app.add_subcommand("mixed", "Lagrange x Chebyshev composite");

  // Global options may also follow the subcommand.
  for (auto* sub : {mandel, build, eig, verify, height, family, quintic, mixed}) sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitPass : kExitUsage;
  }

  try {
    if (*mandel) return cmd_mandelbrot(c, n);
    if (*build) return cmd_build(c, path);
    if (*eig) return cmd_eig(c, path, backend, finite_count);
    if (*verify) return cmd_verify(c, path, poly_path);
    if (*height) return cmd_height(path);
    if (*family) return cmd_family(c, k_max, k_min);
    if (*quintic) return cmd_quintic(c);
    if (*mixed) return cmd_mixed(c);
  } catch (const VerificationError& e) {
    std::cerr << "verification failed: " << e.what() << "\n";
    return kExitVerification;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
