#pragma once

#include <optional>
#include <span>
#include <vector>

#include "alglin/exact.hpp"
#include "alglin/types.hpp"

namespace alglin {

enum class BasisKind { Monomial, Lagrange, Chebyshev };

// Polynomial basis. For the barycentric Lagrange basis the nodes tau_k and
// weights beta_k satisfy 1/w(z) = sum_k beta_k / (z - tau_k), w(z) = prod (z - tau_k).
struct BasisSpec {
  BasisKind kind = BasisKind::Monomial;
  std::vector<Complex> nodes;
  std::vector<Complex> weights;

  static BasisSpec monomial() { return {}; }
  static BasisSpec chebyshev() { return {BasisKind::Chebyshev, {}, {}}; }
  static BasisSpec lagrange(std::vector<Complex> nodes, std::vector<Complex> weights);
};

// Weights of the partial fraction expansion of 1/w(z) for the given nodes.
std::vector<Complex> barycentric_weights(std::span<const Complex> nodes);

// |1/w(z) - sum beta_k/(z - tau_k)| / |1/w(z)| at a point that is not a node.
double partial_fraction_residual(const BasisSpec& basis, Complex z);

// Square r x r matrix polynomial of grade s. Monomial and Chebyshev data are
// the s+1 coefficient matrices; Lagrange data are the s+1 node samples.
class MatPoly {
 public:
  MatPoly(BasisSpec basis, std::vector<CMatrix> data);

  static MatPoly monomial(std::vector<CMatrix> coeffs);
  static MatPoly chebyshev(std::vector<CMatrix> coeffs);
  static MatPoly lagrange(std::vector<Complex> nodes, std::vector<Complex> weights,
                          std::vector<CMatrix> samples);
  // 1 x 1 monomial polynomial from ascending scalar coefficients.
  static MatPoly scalar(std::span<const Complex> coeffs);

  const BasisSpec& basis() const noexcept { return basis_; }
  Index dim() const noexcept { return dim_; }
  int grade() const noexcept { return static_cast<int>(data_.size()) - 1; }
  const std::vector<CMatrix>& data() const noexcept { return data_; }

  // True when every entry of every data matrix is a real integer.
  bool has_integer_entries() const;

 private:
  BasisSpec basis_;
  Index dim_ = 0;
  std::vector<CMatrix> data_;
};

CMatrix eval(const MatPoly& p, Complex z);

// Ascending scalar coefficients.
using ScalarPoly = std::vector<Complex>;

Complex eval_scalar(std::span<const Complex> coeffs, Complex z);

// Coefficients of det p(z) (length r*s + 1), by sampling on the unit-circle
// roots of unity and an inverse discrete Fourier transform.
ScalarPoly det_poly(const MatPoly& p);

// Exact coefficients of det p(z) for a monomial polynomial with integer
// entries, by exact determinants at z = 0..r*s and exact interpolation.
IntPoly det_poly_exact(const MatPoly& p);

struct HeightReport {
  double height = 0.0;
  std::optional<double> t_metric;  // empty for the zero matrix
  bool is_bohemian_01 = false;
  bool is_height1_integer = false;
};

HeightReport height_report(const CMatrix& m);
HeightReport height_report(const IntMatrix& m);

// Test helper: monomial coefficients of sum_k b_k T_k for scalar b.
ScalarPoly chebyshev_to_monomial(std::span<const Complex> cheb);

}  // namespace alglin
