#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "alglin/eigensolve.hpp"
#include "alglin/pencil.hpp"

namespace alglin {

inline constexpr int kFamilyCap = 8;

// h_1 = zI + c_0 and h_{k+1} = z h_k^2 + c_k, with the c_k taken cyclically
// from the twelve fixtures (or from `c` when given).
struct FamilyMember {
  StandardTriple triple;
  MatrixFunction evaluator;
};
std::vector<FamilyMember> build_family(int k_max, const std::vector<CMatrix>& c);

struct FamilyLevel {
  int k = 0;
  Index dim = 0;
  EigenReport eig;
  double max_residual = 0.0;
  double seconds = 0.0;  // wall time of the solve; never written to files
};

struct FamilyResult {
  std::vector<FamilyLevel> levels;
  std::vector<std::string> warnings;
};

// Levels k_min..k_max solved concurrently; results are ordered by k.
FamilyResult run_family(int k_max, std::uint64_t seed, int k_min = 1, int cap = kFamilyCap,
                        const std::vector<CMatrix>* c_override = nullptr);

struct QuinticResult {
  EigenReport algebraic;
  EigenReport frobenius;
  Index algebraic_size = 0;
  Index frobenius_size = 0;
  double algebraic_max_residual = 0.0;
  double frobenius_max_residual = 0.0;
  double ratio = 0.0;  // frobenius / algebraic
  std::string backend;
  // The same comparison under the shift-invert solver, for reference.
  double shift_invert_algebraic_max_residual = 0.0;
  double shift_invert_frobenius_max_residual = 0.0;
};

// H(z) = z a(z) b(z) + I_5: composite of two Frobenius triples against the
// Frobenius pencil of the expanded degree-7 coefficients. The comparison is
// made with QZ, a backward stable solver for the pencil itself; shift-invert
// residuals of both pencils sit at its own noise floor (~1e-11) and their
// order then depends on the shift.
QuinticResult run_random_quintic(std::uint64_t seed);

// Monomial coefficients of z a(z) b(z) + I, and the b coefficients used.
std::vector<CMatrix> quintic_b();
std::vector<CMatrix> quintic_expanded();

struct MixedResult {
  EigenReport eig;
  std::vector<Index> partition;
  Index size = 0;
  int det_degree = 0;                 // numerical degree of det h(z) from the oracle
  Index tol_rule_infinite_count = 0;  // what the plain inf_tol rule would discard
  std::vector<Complex> oracle_roots;
  MatchReport match;
  double max_residual = 0.0;
  std::vector<std::string> notes;
};

// composite(lagrange_triple(a), chebyshev_triple(b), I_3, I_3).
MixedResult run_mixed_basis(std::uint64_t seed);

// "re,im,residual" per finite eigenvalue, with a header line.
std::string eigen_csv(const EigenReport& rep);
// Minimal scatter plot of the finite eigenvalues.
std::string eigen_svg(const EigenReport& rep, const std::string& title);

}  // namespace alglin
