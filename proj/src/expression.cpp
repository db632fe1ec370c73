#include "alglin/expression.hpp"

#include "alglin/constructions.hpp"

namespace alglin {

namespace {

CMatrix matrix_or_identity(const Json& node, const char* key, Index r, const std::string& where) {
  auto it = node.find(key);
  if (it == node.end()) return CMatrix::Identity(r, r);
  CMatrix m = square_matrix_from_json(*it, where + "." + key);
  if (m.rows() != r)
    throw ParseError(where + "." + key + ": expected a " + std::to_string(r) + "x" + std::to_string(r) + " matrix");
  return m;
}

const Json& child(const Json& node, const char* key, const std::string& where) {
  auto it = node.find(key);
  if (it == node.end()) throw ParseError(where + ": missing field \"" + key + "\"");
  return *it;
}

BuiltExpression leaf(const Json& node, const std::string& where) {
  for (const char* kind : {"frobenius", "lagrange", "chebyshev"}) {
    auto it = node.find(kind);
    if (it == node.end()) continue;
    const std::string w = where + "." + kind;
    MatPoly p = matpoly_from_json(*it, w);
    const std::string k = kind;
    if (k == "frobenius" && p.basis().kind != BasisKind::Monomial)
      throw ParseError(w + ": a frobenius leaf needs a monomial polynomial");
    if (k == "lagrange" && p.basis().kind != BasisKind::Lagrange)
      throw ParseError(w + ": a lagrange leaf needs a Lagrange polynomial");
    if (k == "chebyshev" && p.basis().kind != BasisKind::Chebyshev)
      throw ParseError(w + ": a chebyshev leaf needs a Chebyshev polynomial");
    StandardTriple t = k == "frobenius" ? frobenius_triple(p) : k == "lagrange" ? lagrange_triple(p) : chebyshev_triple(p);
    const Index r = p.dim();
    const int degree = p.grade();
    return {std::move(t), [p = std::move(p)](Complex z) { return eval(p, z); }, r, degree};
  }
  throw ParseError(where + ": expected an \"op\" node or a frobenius/lagrange/chebyshev leaf");
}

}  // namespace

BuiltExpression build_expression(const Json& node, const std::string& where) {
  if (!node.is_object()) throw ParseError(where + ": expected an object");
  auto op_it = node.find("op");
  if (op_it == node.end()) return leaf(node, where);
  if (!op_it->is_string()) throw ParseError(where + ".op: expected a string");
  const std::string op = op_it->get<std::string>();

  BuiltExpression a = build_expression(child(node, "a", where), where + ".a");
  const Index r = a.r;

  if (op == "shift_left" || op == "shift_right") {
    const CMatrix d0 = matrix_or_identity(node, "d0", r, where);
    const CMatrix c0 = square_matrix_from_json(child(node, "c0", where), where + ".c0");
    if (c0.rows() != r) throw ParseError(where + ".c0: dimension mismatch");
    const bool left = op == "shift_left";
    StandardTriple t = left ? scalar_shift_left(a.triple, d0, c0) : scalar_shift_right(a.triple, d0, c0);
    MatrixFunction f = [fa = a.evaluator, d0, c0, left](Complex z) -> CMatrix {
      return left ? CMatrix(z * d0 * fa(z) + c0) : CMatrix(z * fa(z) * d0 + c0);
    };
    return {std::move(t), std::move(f), r, a.degree + 1};
  }
  if (op == "add") {
    MatPoly c = matpoly_from_json(child(node, "c", where), where + ".c");
    StandardTriple t = add_lower_degree(a.triple, c);
    MatrixFunction f = [fa = a.evaluator, c](Complex z) -> CMatrix { return fa(z) + eval(c, z); };
    return {std::move(t), std::move(f), r, a.degree};
  }

  BuiltExpression b = build_expression(child(node, "b", where), where + ".b");
  if (b.r != r) throw ParseError(where + ": operands have different dimensions");
  if (op == "product") {
    const std::string variant = node.value("variant", std::string("F2"));
    if (variant != "F1" && variant != "F2") throw ParseError(where + ".variant: expected \"F1\" or \"F2\"");
    StandardTriple t = product(a.triple, b.triple, variant == "F1" ? ProductVariant::F1 : ProductVariant::F2);
    MatrixFunction f = [fa = a.evaluator, fb = b.evaluator](Complex z) -> CMatrix { return fa(z) * fb(z); };
    return {std::move(t), std::move(f), r, a.degree + b.degree};
  }
  if (op == "composite") {
    const CMatrix d0 = matrix_or_identity(node, "d0", r, where);
    const CMatrix c0 = square_matrix_from_json(child(node, "c0", where), where + ".c0");
    if (c0.rows() != r) throw ParseError(where + ".c0: dimension mismatch");
    StandardTriple t = composite(a.triple, b.triple, d0, c0);
    MatrixFunction f = [fa = a.evaluator, fb = b.evaluator, d0, c0](Complex z) -> CMatrix {
      return z * fa(z) * d0 * fb(z) + c0;
    };
    return {std::move(t), std::move(f), r, a.degree + b.degree + 1};
  }
  throw ParseError(where + ".op: unknown operation \"" + op + "\"");
}

}  // namespace alglin
