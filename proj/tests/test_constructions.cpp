#include <doctest.h>

#include <algorithm>
#include <random>

#include "alglin/constructions.hpp"
#include "alglin/eigensolve.hpp"
#include "alglin/fixtures.hpp"
#include "alglin/mandelbrot.hpp"
#include "alglin/oracle.hpp"
#include "closure.hpp"
#include "support.hpp"

using namespace alglin;
using namespace alglin::testing;

namespace {

CMatrix scalar(Complex v) { return CMatrix::Constant(1, 1, v); }

StandardTriple z_triple() { return {scalar(1.0), Pencil(scalar(1.0), scalar(0.0)), scalar(1.0)}; }
StandardTriple z_plus_one() { return {scalar(1.0), Pencil(scalar(1.0), scalar(-1.0)), scalar(1.0)}; }

MatPoly scalar_poly(std::initializer_list<Complex> c) {
  const std::vector<Complex> v(c);
  return MatPoly::scalar(v);
}

std::vector<Complex> sorted(std::vector<Complex> v) {
  std::sort(v.begin(), v.end(), [](Complex a, Complex b) {
    return a.real() != b.real() ? a.real() < b.real() : a.imag() < b.imag();
  });
  return v;
}

bool same_det(const Pencil& p, const MatrixFunction& f, Index r, int degree, int points = 0) {
  return det_equality(p, f, r, degree, points).passed;
}

StandardTriple fold_mandelbrot(int n) {
  StandardTriple t = z_plus_one();
  for (int k = 2; k < n; ++k) t = composite(t, t, scalar(1.0), scalar(1.0));
  return t;
}

}  // namespace

TEST_CASE("scalar_shift_left examples") {
  const StandardTriple t = scalar_shift_left(z_triple(), scalar(1.0), scalar(1.0));
  CHECK(t.size() == 2);
  const auto eig = generalized_eigen(t.pencil()).finite;
  REQUIRE(eig.size() == 2);
  CHECK(match_roots(eig, {Complex(0, 1), Complex(0, -1)}).max_error < 1e-12);
  CHECK(std::abs(pencil_det_at(t.pencil(), 0.0) - 1.0) < 1e-15);

  const StandardTriple u = scalar_shift_left(z_plus_one(), scalar(1.0), scalar(1.0));
  CHECK(det_equality(u.pencil(), scalar_poly({1.0, 1.0, 1.0}), 5).passed);
}

TEST_CASE("scalar_shift_right examples") {
  const StandardTriple l = scalar_shift_left(z_plus_one(), scalar(2.0), scalar(3.0));
  const StandardTriple r = scalar_shift_right(z_plus_one(), scalar(2.0), scalar(3.0));
  const MatrixFunction fl = [&](Complex z) { return CMatrix::Constant(1, 1, pencil_det_at(l.pencil(), z)); };
  CHECK(same_det(r.pencil(), fl, 1, 2, 5));

  const StandardTriple t = scalar_shift_right(z_triple(), scalar(2.0), scalar(1.0));
  CHECK(det_equality(t.pencil(), scalar_poly({1.0, 0.0, 2.0}), 5).passed);

  std::mt19937_64 rng(21);
  const MatPoly a = random_monomial(rng, 2, 1);
  const CMatrix d0 = random_matrix(rng, 2, 2);
  const CMatrix c0 = random_matrix(rng, 2, 2);
  const StandardTriple ta = frobenius_triple(a);
  const StandardTriple e2 = scalar_shift_right(ta, d0, c0);
  const MatrixFunction f2 = [&](Complex z) -> CMatrix { return z * eval(a, z) * d0 + c0; };
  const MatrixFunction f1 = [&](Complex z) -> CMatrix { return z * d0 * eval(a, z) + c0; };
  CHECK(same_det(e2.pencil(), f2, 2, 2, 7));
  CHECK_FALSE(same_det(e2.pencil(), f1, 2, 2, 7));
}

TEST_CASE("product examples") {
  const StandardTriple f1 = product(z_plus_one(), z_plus_one(), ProductVariant::F1);
  CMatrix expected(2, 2);
  expected << -1.0, 0.0, 1.0, -1.0;
  CHECK(f1.pencil().A() == expected);
  CHECK(f1.pencil().D() == CMatrix::Identity(2, 2));
  CHECK(det_equality(f1.pencil(), scalar_poly({1.0, 2.0, 1.0})).passed);
  CHECK(std::abs(resolvent_eval(f1, 0.0)(0, 0) - 1.0) < 1e-15);

  std::mt19937_64 rng(22);
  const MatPoly a = random_monomial(rng, 2, 1);
  const MatPoly b = random_monomial(rng, 2, 1);
  const StandardTriple t = product(frobenius_triple(a), frobenius_triple(b), ProductVariant::F2);
  const MatrixFunction ab = [&](Complex z) -> CMatrix { return eval(a, z) * eval(b, z); };
  CHECK(same_det(t.pencil(), ab, 2, 2, 7));
  VerifyOptions vo;
  vo.n_points = 5;
  CHECK(verify_triple(t, ab, 2, 2, vo).passed);
}

TEST_CASE("add_lower_degree examples") {
  const StandardTriple a = frobenius_triple(scalar_poly({0.0, 0.0, 1.0}));
  const StandardTriple g = add_lower_degree(a, scalar_poly({1.0}));
  const auto cp = interp_charpoly(g.pencil());
  REQUIRE(cp.size() == 3);
  CHECK(std::abs(cp[0] - 1.0) < 1e-14);
  CHECK(std::abs(cp[1]) < 1e-14);
  CHECK(std::abs(cp[2] - 1.0) < 1e-14);

  const StandardTriple same = add_lower_degree(a, scalar_poly({0.0}));
  CHECK(same.pencil().A() == a.pencil().A());
  CHECK(same.pencil().D() == a.pencil().D());

  // z p_2(z)^2 + 1 through the companion path against the glued M_3.
  const StandardTriple m3 = add_lower_degree(frobenius_triple(scalar_poly({0.0, 1.0, 2.0, 1.0})), scalar_poly({1.0}));
  const StandardTriple h = composite(z_plus_one(), z_plus_one(), scalar(1.0), scalar(1.0));
  const MatrixFunction fh = [&](Complex z) { return CMatrix::Constant(1, 1, pencil_det_at(h.pencil(), z)); };
  CHECK(same_det(m3.pencil(), fh, 1, 3, 5));
}

TEST_CASE("add_lower_degree contract") {
  const StandardTriple a = frobenius_triple(scalar_poly({1.0, 0.0, 1.0}));
  CHECK_THROWS_AS(add_lower_degree(a, scalar_poly({1.0, 1.0, 1.0})), ContractError);
  CHECK_THROWS_AS(add_lower_degree(a, MatPoly::chebyshev({scalar(1.0)})), ContractError);
  CHECK_THROWS_AS(add_lower_degree(a, MatPoly::monomial({CMatrix::Identity(2, 2)})), StructuralError);
}

TEST_CASE("composite examples") {
  const StandardTriple h = composite(z_plus_one(), z_plus_one(), scalar(1.0), scalar(1.0));
  CMatrix m3(3, 3);
  m3 << -1, 0, -1, -1, 0, 0, 0, -1, -1;
  CHECK(h.pencil().A() == m3);
  CHECK(h.pencil().D() == CMatrix::Identity(3, 3));

  std::mt19937_64 rng(23);
  for (int k = 0; k < 5; ++k) {
    const Piece a = random_piece(rng, 2);
    const Piece b = random_piece(rng, 2);
    const CMatrix c0 = random_matrix(rng, 2, 2);
    const StandardTriple t = composite(a.triple, b.triple, random_matrix(rng, 2, 2), c0);
    const Complex d = pencil_det_at(t.pencil(), 0.0);
    CHECK(std::abs(d - c0.determinant()) <= 1e-10 * std::max(1.0, std::abs(d)));
  }

  const CMatrix c0 = fixtures::family_c()[0];
  const CMatrix c1 = fixtures::family_c()[1];
  const StandardTriple h1 = frobenius_triple(MatPoly::monomial({c0, CMatrix::Identity(4, 4)}));
  const StandardTriple h2 = composite(h1, h1, CMatrix::Identity(4, 4), c1);
  CHECK(h2.size() == 12);
  const MatPoly expanded = MatPoly::monomial({c1, c0 * c0, 2.0 * c0, CMatrix::Identity(4, 4)});
  const auto rep = det_equality(h2.pencil(), expanded, 13);
  CHECK(rep.passed);
  CHECK(rep.points == 13);
}

TEST_CASE("composite resolvent block U vanishes at z = 0") {
  std::mt19937_64 rng(24);
  for (int k = 0; k < 10; ++k) {
    const Piece a = random_piece(rng, 2);
    const Piece b = random_piece(rng, 2);
    const StandardTriple t = composite(a.triple, b.triple, random_matrix(rng, 2, 2), random_matrix(rng, 2, 2));
    const Index sa = a.triple.size();
    const Index sb = b.triple.size();
    if (condition_estimate(t.pencil().at(0.0)) > 1e10) continue;
    const CMatrix inv = t.pencil().at(0.0).inverse();
    CHECK(inv.topRightCorner(sa, sb).norm() <= 1e-10 * inv.norm());
  }
  const StandardTriple m = fold_mandelbrot(5);
  const Index d4 = static_cast<Index>(mandelbrot_dim(4));
  CHECK(m.pencil().at(0.0).inverse().topRightCorner(d4, d4).norm() == 0.0);
}

TEST_CASE("frobenius_triple examples") {
  const StandardTriple t = frobenius_triple(scalar_poly({1.0, 0.0, 1.0}));
  CHECK(t.size() == 2);
  VerifyOptions vo;
  vo.tol = 1e-10;
  CHECK(verify_triple(t, scalar_poly({1.0, 0.0, 1.0}), vo).passed);

  std::mt19937_64 rng(25);
  const CMatrix c0 = random_matrix(rng, 2, 2);
  const StandardTriple lin = frobenius_triple(MatPoly::monomial({c0, CMatrix::Identity(2, 2)}));
  CHECK(lin.pencil().D() == CMatrix::Identity(2, 2));
  CHECK(lin.pencil().A() == -c0);
  CHECK(lin.X() == CMatrix::Identity(2, 2));
  CHECK(lin.Y() == CMatrix::Identity(2, 2));

  CMatrix lead = CMatrix::Zero(2, 2);
  lead(0, 0) = 1.0;
  const StandardTriple sing = frobenius_triple(MatPoly::monomial({CMatrix::Identity(2, 2), lead}));
  const auto cp = interp_charpoly(sing.pencil());
  CHECK(std::abs(cp[2]) < 1e-14);
  CHECK(std::abs(cp[1]) > 0.5);
  const auto eig = generalized_eigen(sing.pencil());
  CHECK(eig.finite.size() == 1);
  CHECK(eig.infinite_count == 1);
  CHECK(std::abs(eig.finite[0] + 1.0) < 1e-12);

  CHECK_THROWS_AS(frobenius_triple(scalar_poly({1.0})), ContractError);
  CHECK_THROWS_AS(frobenius_triple(MatPoly::chebyshev({scalar(1.0), scalar(1.0)})), ContractError);
}

TEST_CASE("lagrange_triple examples") {
  const MatPoly toy = MatPoly::lagrange({0.0, 1.0}, {-1.0, 1.0}, {scalar(0.0), scalar(1.0)});
  const StandardTriple t = lagrange_triple(toy);
  CHECK(t.size() == 3);
  CHECK(det_equality(t.pencil(), scalar_poly({0.0, 1.0}), 4).passed);

  const MatPoly a = fixtures::mixed_a();
  CHECK(verify_triple(lagrange_triple(a), a).passed);
  CHECK(lagrange_triple(a).size() == 15);

  const MatPoly one = MatPoly::lagrange({-1.0, 1.0}, {-0.5, 0.5}, {CMatrix::Identity(2, 2), CMatrix::Identity(2, 2)});
  const StandardTriple ti = lagrange_triple(one);
  for (Complex z : {Complex(0.3, 0.1), Complex(2.0), Complex(-1.5, 0.7)})
    CHECK(std::abs(pencil_det_at(ti.pencil(), z) - 1.0) < 1e-13);
  // Only infinite eigenvalues. QZ sees them as such; shift-and-invert leaves
  // Jordan-chain ones at |z| ~ 1/sqrt(eps).
  EigenOptions qz;
  qz.backend = EigenBackend::QZ;
  CHECK(generalized_eigen(ti.pencil(), qz).finite.empty());
  for (Complex z : generalized_eigen(ti.pencil()).finite) CHECK(std::abs(z) > 1e6);
}

TEST_CASE("chebyshev_triple examples") {
  const StandardTriple t2 = chebyshev_triple(MatPoly::chebyshev({scalar(0.0), scalar(0.0), scalar(1.0)}));
  const auto e2 = sorted(generalized_eigen(t2.pencil()).finite);
  REQUIRE(e2.size() == 2);
  CHECK(std::abs(e2[0] + std::sqrt(0.5)) < 1e-14);
  CHECK(std::abs(e2[1] - std::sqrt(0.5)) < 1e-14);

  const StandardTriple t1 = chebyshev_triple(MatPoly::chebyshev({scalar(3.0), scalar(1.0)}));
  const auto e1 = generalized_eigen(t1.pencil()).finite;
  REQUIRE(e1.size() == 1);
  CHECK(std::abs(e1[0] + 3.0) < 1e-14);

  const MatPoly b = fixtures::mixed_b();
  const StandardTriple tb = chebyshev_triple(b);
  CHECK(tb.size() == 9);
  CHECK(verify_triple(tb, b).passed);

  CHECK_THROWS_AS(chebyshev_triple(MatPoly::chebyshev({scalar(1.0)})), ContractError);
}

TEST_CASE("shape mismatches are structural errors") {
  const StandardTriple a = z_plus_one();
  std::mt19937_64 rng(26);
  const StandardTriple two = frobenius_triple(random_monomial(rng, 2, 1));
  CHECK_THROWS_AS(scalar_shift_left(a, CMatrix::Identity(2, 2), scalar(1.0)), StructuralError);
  CHECK_THROWS_AS(scalar_shift_right(a, scalar(1.0), CMatrix::Identity(2, 2)), StructuralError);
  CHECK_THROWS_AS(product(a, two, ProductVariant::F1), StructuralError);
  CHECK_THROWS_AS(composite(a, two, scalar(1.0), scalar(1.0)), StructuralError);
}

TEST_CASE("closure over randomized instances") {
  for (Ctor c : all_ctors()) {
    const ClosureStats s = run_closure(c, 200, 42);
    INFO(s.name << ": " << s.first_failure);
    CHECK(s.failures == 0);
    CHECK(s.worst_det <= 1e-8);
    CHECK(s.worst_resolvent <= 1e-8);
  }
}

TEST_CASE("Hessenberg preservation") {
  std::mt19937_64 rng(27);
  for (int k = 0; k < 20; ++k) {
    const Index r = 1 + k % 3;
    auto piece = [&]() {
      return k % 2 == 0 ? frobenius_triple(random_monomial(rng, r, 1 + k % 3))
                        : chebyshev_triple(random_chebyshev(rng, r, 1 + k % 3));
    };
    const StandardTriple a = piece();
    const StandardTriple b = piece();
    REQUIRE(is_block_upper_hessenberg(a.pencil().A(), r));
    const StandardTriple h = composite(a, b, random_matrix(rng, r, r), random_matrix(rng, r, r));
    CHECK(is_block_upper_hessenberg(h.pencil().A(), r));
    CHECK(is_block_upper_hessenberg(h.pencil().D(), r));
    const StandardTriple f2 = product(a, b, ProductVariant::F2);
    CHECK(is_block_upper_hessenberg(f2.pencil().A(), r));
    CHECK(is_block_upper_hessenberg(f2.pencil().D(), r));
    const StandardTriple deeper = composite(h, h, random_matrix(rng, r, r), random_matrix(rng, r, r));
    CHECK(is_block_upper_hessenberg(deeper.pencil().A(), r));
  }
}

TEST_CASE("size bookkeeping") {
  std::mt19937_64 rng(28);
  for (int k = 0; k < 30; ++k) {
    const Index r = 1 + k % 3;
    const Piece a = random_piece(rng, r);
    const Piece b = random_piece(rng, r);
    const CMatrix m = random_matrix(rng, r, r);
    CHECK(composite(a.triple, b.triple, m, m).size() == a.triple.size() + r + b.triple.size());
    CHECK(product(a.triple, b.triple, ProductVariant::F1).size() == a.triple.size() + b.triple.size());
    CHECK(product(a.triple, b.triple, ProductVariant::F2).size() == a.triple.size() + b.triple.size());
    CHECK(scalar_shift_left(a.triple, m, m).size() == a.triple.size() + r);
    const Index s = a.poly.grade();
    switch (a.poly.basis().kind) {
      case BasisKind::Monomial: CHECK(a.triple.size() == s * r); break;
      case BasisKind::Lagrange: CHECK(a.triple.size() == (s + 2) * r); break;
      case BasisKind::Chebyshev: CHECK(a.triple.size() == s * r); break;
    }
    const MatPoly mono = random_monomial(rng, r, 3);
    const StandardTriple f = frobenius_triple(mono);
    CHECK(add_lower_degree(f, random_monomial(rng, r, 2)).size() == f.size());
  }
}

TEST_CASE("composite folding reproduces the Mandelbrot matrices") {
  for (int n = 3; n <= 5; ++n) {
    const StandardTriple t = fold_mandelbrot(n);
    const MandelbrotMatrix m = mandelbrot_matrix(n);
    CHECK(t.pencil().A() == to_complex(m.entries));
    CHECK(t.pencil().D() == CMatrix::Identity(t.size(), t.size()));
    CMatrix x = CMatrix::Zero(1, t.size());
    x(0, static_cast<Index>(m.x_index)) = 1.0;
    CMatrix y = CMatrix::Zero(t.size(), 1);
    y(static_cast<Index>(m.y_index), 0) = 1.0;
    CHECK(t.X() == x);
    CHECK(t.Y() == y);
    CHECK(m.x_index == m.dim - 1);
    CHECK(m.y_index == 0);
  }
}

TEST_CASE("commuting scalars: left and right shifts share the characteristic polynomial") {
  std::mt19937_64 rng(29);
  for (int k = 0; k < 10; ++k) {
    const Piece a = random_piece(rng, 1);
    const CMatrix d0 = random_matrix(rng, 1, 1);
    const CMatrix c0 = random_matrix(rng, 1, 1);
    const StandardTriple l = scalar_shift_left(a.triple, d0, c0);
    const StandardTriple r = scalar_shift_right(a.triple, d0, c0);
    const MatrixFunction fl = [&](Complex z) { return CMatrix::Constant(1, 1, pencil_det_at(l.pencil(), z)); };
    CHECK(same_det(r.pencil(), fl, 1, static_cast<int>(l.size()), static_cast<int>(l.size()) + 1));
  }
}

TEST_CASE("constructors copy their inputs") {
  std::mt19937_64 rng(30);
  StandardTriple a = frobenius_triple(random_monomial(rng, 2, 2));
  const StandardTriple h = composite(a, a, CMatrix::Identity(2, 2), CMatrix::Identity(2, 2));
  const CMatrix before = h.pencil().A();
  a = frobenius_triple(random_monomial(rng, 2, 2));
  CHECK(h.pencil().A() == before);
}
