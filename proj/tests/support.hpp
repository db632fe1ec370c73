#pragma once

// Random instances shared by the unit tests and the acceptance runner.

#include <random>
#include <vector>

#include "alglin/constructions.hpp"
#include "alglin/matpoly.hpp"
#include "alglin/pencil.hpp"

namespace alglin::testing {

inline CMatrix random_matrix(std::mt19937_64& rng, Index rows, Index cols) {
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  CMatrix m(rows, cols);
  for (Index i = 0; i < rows; ++i)
    for (Index j = 0; j < cols; ++j) m(i, j) = Complex(u(rng), u(rng));
  return m;
}

inline MatPoly random_monomial(std::mt19937_64& rng, Index r, int grade) {
  std::vector<CMatrix> c;
  for (int k = 0; k <= grade; ++k) c.push_back(random_matrix(rng, r, r));
  return MatPoly::monomial(std::move(c));
}

inline MatPoly random_chebyshev(std::mt19937_64& rng, Index r, int grade) {
  std::vector<CMatrix> c;
  for (int k = 0; k <= grade; ++k) c.push_back(random_matrix(rng, r, r));
  return MatPoly::chebyshev(std::move(c));
}

// Distinct real-ish nodes on a perturbed grid in [-1, 1] with exact weights.
inline MatPoly random_lagrange(std::mt19937_64& rng, Index r, int grade) {
  std::uniform_real_distribution<double> u(-0.1, 0.1);
  std::vector<Complex> nodes;
  const int m = grade + 1;
  for (int k = 0; k < m; ++k) {
    const double base = m == 1 ? 0.0 : -1.0 + 2.0 * k / (m - 1);
    nodes.emplace_back(base + u(rng) / m, u(rng) / m);
  }
  auto weights = barycentric_weights(nodes);
  std::vector<CMatrix> samples;
  for (int k = 0; k < m; ++k) samples.push_back(random_matrix(rng, r, r));
  return MatPoly::lagrange(std::move(nodes), std::move(weights), std::move(samples));
}

// A random polynomial with its triple, in a random basis.
struct Piece {
  MatPoly poly;
  StandardTriple triple;
};

inline Piece random_piece(std::mt19937_64& rng, Index r, int max_grade = 3) {
  std::uniform_int_distribution<int> basis(0, 2);
  std::uniform_int_distribution<int> grade_lo(1, max_grade);
  const int kind = basis(rng);
  if (kind == 0) {
    MatPoly p = random_monomial(rng, r, grade_lo(rng));
    StandardTriple t = frobenius_triple(p);
    return {std::move(p), std::move(t)};
  }
  if (kind == 1) {
    MatPoly p = random_chebyshev(rng, r, grade_lo(rng));
    StandardTriple t = chebyshev_triple(p);
    return {std::move(p), std::move(t)};
  }
  // Lagrange needs at least two nodes.
  MatPoly p = random_lagrange(rng, r, grade_lo(rng));
  StandardTriple t = lagrange_triple(p);
  return {std::move(p), std::move(t)};
}

}  // namespace alglin::testing
