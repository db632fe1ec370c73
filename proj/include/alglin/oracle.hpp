#pragma once

// Brute-force verifiers. Nothing here calls into the constructions; every
// check works from Pencil and MatPoly values alone.

#include <cstdint>
#include <optional>
#include <vector>

#include "alglin/exact.hpp"
#include "alglin/matpoly.hpp"
#include "alglin/pencil.hpp"

namespace alglin {

// Coefficients of det(zD - A) (length N + 1) from N + 1 roots of unity and an
// inverse DFT.
ScalarPoly interp_charpoly(const Pencil& p);

// Exact coefficients of det(zD - A) when every entry of D and A is a real
// integer; std::nullopt otherwise.
std::optional<IntPoly> interp_charpoly_exact(const Pencil& p);

struct DetEqualityReport {
  bool passed = false;
  double max_deviation = 0.0;
  int points = 0;
};

// det(zD - A) against det q(z) at n_points points on the radius-2 circle
// (0 = max(N, r * grade) + 1), relative to max(1, |det q(z)|).
DetEqualityReport det_equality(const Pencil& p, const MatPoly& q, int n_points = 0, double tol = 1e-8,
                               std::uint64_t seed = 11);
DetEqualityReport det_equality(const Pencil& p, const MatrixFunction& q, Index r, int degree_bound, int n_points = 0,
                               double tol = 1e-8, std::uint64_t seed = 11);

// Companion-matrix roots of a scalar polynomial (ascending coefficients).
// Trailing exact zeros are trimmed; throws ContractError for the zero
// polynomial or a constant.
std::vector<Complex> scalar_roots(const ScalarPoly& coeffs);
std::vector<Complex> scalar_roots(const IntPoly& coeffs);

struct ControllabilityReport {
  CMatrix V;
  double condition = 0.0;  // sigma_max / sigma_min, infinite when rank deficient
  bool nonsingular = false;
};

// V = [Y, AY, ..., A^{s-1} Y].
ControllabilityReport controllability_matrix(const StandardTriple& t, int s);

}  // namespace alglin
