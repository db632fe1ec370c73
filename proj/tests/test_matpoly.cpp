#include <doctest.h>

#include <random>

#include "alglin/fixtures.hpp"
#include "alglin/mandelbrot.hpp"
#include "alglin/matpoly.hpp"
#include "support.hpp"

using namespace alglin;
using namespace alglin::testing;

TEST_CASE("monomial evaluation") {
  const std::vector<Complex> c = {1.0, 1.0};
  CHECK(eval(MatPoly::scalar(c), 2.0)(0, 0) == Complex(3.0));
}

TEST_CASE("Lagrange evaluation returns the stored sample at a node") {
  const MatPoly a = fixtures::mixed_a();
  const CMatrix v = eval(a, -1.0);
  CHECK(v == a.data()[0]);
  CHECK(v(0, 0) == Complex(-2.0));
  CHECK(v(0, 1) == Complex(-1.0));
  CHECK(v(0, 2) == Complex(-1.0));
}

TEST_CASE("Chebyshev evaluation of T_0 + T_2 at 0.5") {
  const MatPoly p = MatPoly::chebyshev({CMatrix::Constant(1, 1, 1.0), CMatrix::Zero(1, 1), CMatrix::Constant(1, 1, 1.0)});
  CHECK(std::abs(eval(p, 0.5)(0, 0) - 0.5) < 1e-15);
}

TEST_CASE("det_poly of z + 1 and of p_3") {
  const std::vector<Complex> lin = {1.0, 1.0};
  const auto c = det_poly(MatPoly::scalar(lin));
  REQUIRE(c.size() == 2);
  CHECK(std::abs(c[0] - 1.0) < 1e-14);
  CHECK(std::abs(c[1] - 1.0) < 1e-14);

  const std::vector<Complex> p3 = {1.0, 1.0, 2.0, 1.0};
  const auto e = det_poly_exact(MatPoly::scalar(p3));
  CHECK(e == IntPoly{1, 1, 2, 1});
  const auto f = det_poly(MatPoly::scalar(p3));
  for (std::size_t k = 0; k < 4; ++k) CHECK(std::abs(f[k] - p3[k]) < 1e-13);
}

TEST_CASE("det_poly of a random 2x2 quadratic matches the pointwise determinant") {
  std::mt19937_64 rng(3);
  const MatPoly p = random_monomial(rng, 2, 2);
  const auto c = det_poly(p);
  const Complex direct = eval(p, 0.7).determinant();
  CHECK(std::abs(eval_scalar(c, 0.7) - direct) <= 1e-10 * std::abs(direct));
}

TEST_CASE("det_poly agrees with det(eval) in every basis") {
  std::mt19937_64 rng(17);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  for (int trial = 0; trial < 12; ++trial) {
    const Index r = 1 + trial % 3;
    const int g = 1 + trial % 4;
    const MatPoly p = trial % 3 == 0 ? random_monomial(rng, r, g)
                      : trial % 3 == 1 ? random_chebyshev(rng, r, g)
                                       : random_lagrange(rng, r, g);
    const auto c = det_poly(p);
    for (int k = 0; k < 20; ++k) {
      Complex z(u(rng), u(rng));
      if (std::abs(z) > 1.0) z /= std::abs(z) * 1.01;
      const Complex direct = eval(p, z).determinant();
      CHECK(std::abs(eval_scalar(c, z) - direct) <= 1e-8 * std::max(1.0, std::abs(direct)));
    }
  }
}

TEST_CASE("exact det_poly of an integer matrix polynomial") {
  // det [[z, 1], [-1, z]] = z^2 + 1.
  CMatrix a0(2, 2), a1 = CMatrix::Identity(2, 2);
  a0 << 0.0, 1.0, -1.0, 0.0;
  CHECK(det_poly_exact(MatPoly::monomial({a0, a1})) == IntPoly{1, 0, 1});
  CHECK_THROWS_AS(det_poly_exact(MatPoly::monomial({CMatrix::Constant(1, 1, 0.5)})), ContractError);
}

TEST_CASE("barycentric weights satisfy the partial fraction identity") {
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> u(-2.0, 2.0);
  const MatPoly a = fixtures::mixed_a();
  const auto w = barycentric_weights(a.basis().nodes);
  for (std::size_t k = 0; k < w.size(); ++k) CHECK(std::abs(w[k] - a.basis().weights[k]) < 1e-15);
  for (int k = 0; k < 10; ++k) CHECK(partial_fraction_residual(a.basis(), Complex(u(rng), u(rng))) < 1e-12);
  CHECK_THROWS_AS(partial_fraction_residual(a.basis(), 0.5), ContractError);
}

TEST_CASE("Lagrange evaluation at nodes is exact for random samples") {
  std::mt19937_64 rng(8);
  const MatPoly p = random_lagrange(rng, 3, 4);
  for (std::size_t k = 0; k < p.basis().nodes.size(); ++k) CHECK(eval(p, p.basis().nodes[k]) == p.data()[k]);
}

TEST_CASE("Chebyshev evaluation agrees with the converted monomial form") {
  std::mt19937_64 rng(9);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  for (int n = 0; n <= 5; ++n) {
    std::vector<Complex> b;
    std::vector<CMatrix> bm;
    for (int k = 0; k <= n; ++k) {
      b.emplace_back(u(rng), u(rng));
      bm.push_back(CMatrix::Constant(1, 1, b.back()));
    }
    const auto mono = chebyshev_to_monomial(b);
    const MatPoly p = MatPoly::chebyshev(bm);
    for (int k = 0; k < 5; ++k) {
      const Complex z(u(rng), u(rng));
      CHECK(std::abs(eval(p, z)(0, 0) - eval_scalar(mono, z)) < 1e-12);
    }
  }
}

TEST_CASE("height reports") {
  const auto m3 = height_report(mandelbrot_matrix(3).entries);
  CHECK(m3.height == 1.0);
  CHECK(m3.is_bohemian_01);
  CHECK(m3.is_height1_integer);

  CMatrix two(1, 2);
  two << 1.0, 10.0;
  const auto h = height_report(two);
  CHECK(h.height == 10.0);
  REQUIRE(h.t_metric);
  CHECK(*h.t_metric == doctest::Approx(0.1));
  CHECK_FALSE(h.is_height1_integer);

  const auto id = height_report(CMatrix(CMatrix::Identity(3, 3)));
  CHECK(id.height == 1.0);
  CHECK(*id.t_metric == 1.0);
  CHECK_FALSE(id.is_bohemian_01);
  CHECK(id.is_height1_integer);

  const auto zero = height_report(CMatrix(CMatrix::Zero(2, 2)));
  CHECK(zero.height == 0.0);
  CHECK_FALSE(zero.t_metric.has_value());
}

TEST_CASE("malformed polynomials are rejected") {
  CHECK_THROWS_AS(MatPoly::monomial({CMatrix::Zero(2, 2), CMatrix::Zero(3, 3)}), StructuralError);
  CHECK_THROWS_AS(MatPoly::monomial({}), StructuralError);
  CHECK_THROWS_AS(MatPoly::lagrange({0.0, 0.0}, {1.0, -1.0}, {CMatrix::Zero(1, 1), CMatrix::Zero(1, 1)}),
                  ContractError);
  CHECK_THROWS_AS(MatPoly::lagrange({0.0, 1.0}, {1.0, 1.0}, {CMatrix::Zero(1, 1), CMatrix::Zero(1, 1)}),
                  ContractError);
  CHECK_THROWS_AS(MatPoly::lagrange({0.0, 1.0}, {-1.0, 1.0}, {CMatrix::Zero(1, 1)}), StructuralError);
}

TEST_CASE("grade zero is a valid polynomial") {
  const MatPoly p = MatPoly::monomial({CMatrix::Identity(2, 2)});
  CHECK(p.grade() == 0);
  CHECK(eval(p, 3.0) == CMatrix::Identity(2, 2));
}
