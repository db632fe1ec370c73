#pragma once

// Composition expressions: a JSON tree whose leaves are polynomials with a
// basis-specific triple and whose inner nodes are the composition operations.
//
//   {"frobenius": MatPoly} | {"lagrange": MatPoly} | {"chebyshev": MatPoly}
//   {"op": "shift_left" | "shift_right", "a": node, "d0": M, "c0": M}
//   {"op": "product", "a": node, "b": node, "variant": "F1" | "F2"}
//   {"op": "add", "a": node, "c": MatPoly}
//   {"op": "composite", "a": node, "b": node, "d0": M, "c0": M}
//
// M is a square matrix (list of rows, or {"dim", "data"}); d0 defaults to I.

#include "alglin/json_io.hpp"
#include "alglin/pencil.hpp"

namespace alglin {

struct BuiltExpression {
  StandardTriple triple;
  MatrixFunction evaluator;  // the composed polynomial, evaluated directly
  Index r = 0;
  int degree = 0;            // degree bound of the composed polynomial
};

BuiltExpression build_expression(const Json& node, const std::string& where = "$");

}  // namespace alglin
