#pragma once

// Data of the three reference experiments, entered entry for entry.

#include <vector>

#include "alglin/matpoly.hpp"

namespace alglin::fixtures {

// Twelve 4x4 upper Hessenberg c_k with zero diagonal and -1 subdiagonal.
const std::vector<CMatrix>& family_c();

// A_0..A_3 of the 5x5 comparison.
const std::vector<CMatrix>& quintic_a();
const CMatrix& quintic_b0();

// a(z) on nodes [-1, -1/2, 1/2, 1] and b(z) = sum b_k T_k, both 3x3.
MatPoly mixed_a();
MatPoly mixed_b();

}  // namespace alglin::fixtures
