#include "alglin/fixtures.hpp"

#include <initializer_list>

namespace alglin::fixtures {

namespace {

CMatrix rows(std::initializer_list<std::initializer_list<double>> r) {
  CMatrix m(static_cast<Index>(r.size()), static_cast<Index>(r.begin()->size()));
  Index i = 0;
  for (const auto& row : r) {
    Index j = 0;
    for (double v : row) m(i, j++) = v;
    ++i;
  }
  return m;
}

}  // namespace

const std::vector<CMatrix>& family_c() {
  static const std::vector<CMatrix> c = {
      rows({{0, -1, -1, -1}, {-1, 0, 0, 1}, {0, -1, 0, 1}, {0, 0, -1, 0}}),
      rows({{0, -1, -1, -1}, {-1, 0, 1, 1}, {0, -1, 0, 0}, {0, 0, -1, 0}}),
      rows({{0, -1, -1, -1}, {-1, 0, 0, 0}, {0, -1, 0, 1}, {0, 0, -1, 0}}),
      rows({{0, -1, -1, -1}, {-1, 0, 1, 0}, {0, -1, 0, 0}, {0, 0, -1, 0}}),
      rows({{0, -1, -1, -1}, {-1, 0, 0, -1}, {0, -1, 0, 1}, {0, 0, -1, 0}}),
      rows({{0, -1, -1, -1}, {-1, 0, 1, -1}, {0, -1, 0, 0}, {0, 0, -1, 0}}),
      rows({{0, -1, -1, 0}, {-1, 0, -1, 1}, {0, -1, 0, -1}, {0, 0, -1, 0}}),
      rows({{0, -1, -1, -1}, {-1, 0, -1, 1}, {0, -1, 0, 0}, {0, 0, -1, 0}}),
      rows({{0, -1, -1, 0}, {-1, 0, 0, 1}, {0, -1, 0, -1}, {0, 0, -1, 0}}),
      rows({{0, -1, -1, -1}, {-1, 0, -1, 1}, {0, -1, 0, 1}, {0, 0, -1, 0}}),
      rows({{0, -1, -1, -1}, {-1, 0, 0, 1}, {0, -1, 0, 0}, {0, 0, -1, 0}}),
      rows({{0, -1, -1, 0}, {-1, 0, 1, 1}, {0, -1, 0, -1}, {0, 0, -1, 0}}),
  };
  return c;
}

const std::vector<CMatrix>& quintic_a() {
  static const std::vector<CMatrix> a = {
      rows({{-81, -98, -76, -4, 29},
            {-38, -77, -72, 27, 44},
            {-18, 57, -2, 8, 92},
            {87, 27, -32, 69, -31},
            {33, -93, -74, 99, 67}}),
      rows({{76, 20, 31, 94, -16},
            {-44, -61, -50, 12, -9},
            {24, -48, -80, -2, -50},
            {65, 77, 43, 50, -22},
            {86, 9, 25, 10, 45}}),
      rows({{70, 82, 12, 22, 60},
            {-32, 72, -62, 14, -95},
            {-1, 42, -33, 16, -20},
            {52, 18, -68, 9, -25},
            {-13, -59, -67, 99, 51}}),
      rows({{-38, -63, 12, 21, -82},
            {91, -26, 45, 90, -70},
            {-1, 30, -14, 80, 41},
            {63, 10, 60, 19, 91},
            {-23, 22, -35, 88, 29}}),
  };
  return a;
}

const CMatrix& quintic_b0() {
  static const CMatrix b0 = rows({{-15, 10, -83, 10, -4},
                                  {2, -44, 9, -61, 5},
                                  {-88, 26, 88, -26, -91},
                                  {99, -3, 95, -20, -44},
                                  {-59, -62, 63, -78, -38}});
  return b0;
}

MatPoly mixed_a() {
  std::vector<Complex> nodes = {-1.0, -0.5, 0.5, 1.0};
  std::vector<Complex> weights = {-2.0 / 3.0, 4.0 / 3.0, -4.0 / 3.0, 2.0 / 3.0};
  std::vector<CMatrix> samples = {
      rows({{-2, -1, -1}, {-1, -1, 1}, {0, -1, -1}}),
      rows({{-0.875, -0.5, -1.25}, {-0.75, -0.125, 0.5}, {0, -0.75, -0.875}}),
      rows({{-1.625, 0.5, -0.25}, {-1.75, 0.125, -0.5}, {0, -1.75, -0.625}}),
      rows({{-2, 1, 1}, {-3, 1, -1}, {0, -3, 1}}),
  };
  return MatPoly::lagrange(std::move(nodes), std::move(weights), std::move(samples));
}

MatPoly mixed_b() {
  return MatPoly::chebyshev({
      rows({{0, -1, 0}, {1, -1, -1}, {-1, 1, 0}}),
      rows({{0, 1, 0}, {-1, -1, 1}, {0, -1, -1}}),
      rows({{1, -1, 0}, {-1, -1, -1}, {0, -1, 0}}),
      rows({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}),
  });
}

}  // namespace alglin::fixtures
