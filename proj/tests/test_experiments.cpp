#include <doctest.h>

#include <sstream>
#include <utility>

#include "alglin/experiments.hpp"
#include "alglin/fixtures.hpp"

using namespace alglin;

namespace {

// (sum of entries, sum of (i + 1) * entry over the row-major index i).
std::pair<double, double> checksum(const CMatrix& m) {
  double sum = 0.0;
  double weighted = 0.0;
  for (Index i = 0; i < m.rows(); ++i)
    for (Index j = 0; j < m.cols(); ++j) {
      CHECK(m(i, j).imag() == 0.0);
      sum += m(i, j).real();
      weighted += static_cast<double>(i * m.cols() + j + 1) * m(i, j).real();
    }
  return {sum, weighted};
}

void check_sum(const CMatrix& m, double sum, double weighted) {
  const auto [s, w] = checksum(m);
  CHECK(s == sum);
  CHECK(w == weighted);
}

std::size_t count_lines(const std::string& s) {
  std::size_t n = 0;
  for (char c : s) n += c == '\n';
  return n;
}

}  // namespace

TEST_CASE("fixture checksums") {
  const auto& c = fixtures::family_c();
  REQUIRE(c.size() == 12);
  const double cs[12][2] = {{-4, -19}, {-4, -24}, {-5, -27}, {-5, -32}, {-6, -35}, {-6, -40},
                            {-6, -46}, {-6, -38}, {-5, -39}, {-5, -26}, {-5, -31}, {-4, -32}};
  for (std::size_t k = 0; k < 12; ++k) {
    INFO("c_" << k);
    CHECK(c[k].rows() == 4);
    check_sum(c[k], cs[k][0], cs[k][1]);
  }

  const auto& a = fixtures::quintic_a();
  REQUIRE(a.size() == 4);
  check_sum(a[0], -57, 3878);
  check_sum(a[1], 285, 4879);
  check_sum(a[2], 144, -238);
  check_sum(a[3], 440, 8754);
  check_sum(fixtures::quintic_b0(), -309, -4181);

  const MatPoly ma = fixtures::mixed_a();
  REQUIRE(ma.data().size() == 4);
  check_sum(ma.data()[0], -7, -27);
  check_sum(ma.data()[1], -4.625, -20.125);
  check_sum(ma.data()[2], -5.875, -30.375);
  check_sum(ma.data()[3], -5, -25);

  const MatPoly mb = fixtures::mixed_b();
  REQUIRE(mb.data().size() == 4);
  check_sum(mb.data()[0], -2, -8);
  check_sum(mb.data()[1], -2, -18);
  check_sum(mb.data()[2], -4, -24);
  check_sum(mb.data()[3], 3, 15);
}

TEST_CASE("family dimensions and residuals") {
  const auto fam = build_family(6, fixtures::family_c());
  REQUIRE(fam.size() == 6);
  for (int k = 1; k <= 6; ++k) CHECK(fam[static_cast<std::size_t>(k - 1)].triple.size() == 4 * ((Index{1} << k) - 1));

  const FamilyResult res = run_family(5, 1, 1);
  REQUIRE(res.levels.size() == 5);
  for (const auto& lv : res.levels) {
    CHECK(lv.dim == 4 * ((Index{1} << lv.k) - 1));
    CHECK(static_cast<Index>(lv.eig.finite.size()) + lv.eig.infinite_count == lv.dim);
  }
  CHECK(res.levels.back().dim == 124);
  CHECK(res.levels.back().max_residual <= 1e-10);
  CHECK(res.warnings.empty());

  const std::string csv = eigen_csv(res.levels.back().eig);
  CHECK(csv.rfind("re,im,residual\n", 0) == 0);
  CHECK(count_lines(csv) == res.levels.back().eig.finite.size() + 1);
  CHECK(eigen_svg(res.levels.back().eig, "k = 5").find("<svg") != std::string::npos);
}

TEST_CASE("family cap and singular overrides") {
  CHECK_THROWS_AS(run_family(9, 1), ResourceError);
  CHECK_THROWS_AS(run_family(0, 1), ContractError);
  std::vector<CMatrix> zeros(12, CMatrix::Zero(4, 4));
  const FamilyResult res = run_family(2, 1, 1, kFamilyCap, &zeros);
  CHECK_FALSE(res.warnings.empty());
}

TEST_CASE("family runs are deterministic") {
  const FamilyResult a = run_family(4, 7, 3);
  const FamilyResult b = run_family(4, 7, 3);
  REQUIRE(a.levels.size() == 2);
  for (std::size_t i = 0; i < a.levels.size(); ++i) CHECK(eigen_csv(a.levels[i].eig) == eigen_csv(b.levels[i].eig));
}

TEST_CASE("random quintic comparison") {
  const QuinticResult q = run_random_quintic(1);
  CHECK(q.algebraic_size == 5 * 3 + 5 + 5 * 3);
  CHECK(q.frobenius_size == 35);
  CHECK(q.algebraic.finite.size() == 35);
  CHECK(q.algebraic.infinite_count == 0);
  CHECK(q.frobenius.finite.size() == 35);
  CHECK(q.algebraic_max_residual <= 1e-9);
  CHECK(q.algebraic_max_residual <= q.frobenius_max_residual);
  CHECK(std::isfinite(q.frobenius_max_residual));

  const auto h = quintic_expanded();
  CHECK(h.size() == 8);
  CHECK((h.back() - fixtures::quintic_a()[3] * quintic_b()[3]).norm() == 0.0);
}

TEST_CASE("mixed basis experiment") {
  const MixedResult m = run_mixed_basis(1);
  CHECK(m.size == 27);
  CHECK(m.partition == std::vector<Index>{15, 3, 9});
  CHECK(m.det_degree == 21);
  CHECK(m.eig.infinite_count == 6);
  CHECK(m.eig.infinite_count >= 3);
  CHECK(m.tol_rule_infinite_count == 6);
  CHECK(m.match.max_error <= 1e-10);
  CHECK(m.match.unmatched_eigs.empty());
  bool noted = false;
  for (const auto& n : m.notes) noted = noted || n.find("c0 = I_3") != std::string::npos;
  CHECK(noted);
}
