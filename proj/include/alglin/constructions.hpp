#pragma once

// Linearizations of composed matrix polynomials built from standard triples of
// the parts, plus elementary triples for the monomial, barycentric Lagrange and
// Chebyshev bases. Every constructor copies its inputs.

#include "alglin/matpoly.hpp"
#include "alglin/pencil.hpp"

namespace alglin {

// e1(z) = z*d0*a(z) + c0.
StandardTriple scalar_shift_left(const StandardTriple& ta, const CMatrix& d0, const CMatrix& c0);

// e2(z) = z*a(z)*d0 + c0.
StandardTriple scalar_shift_right(const StandardTriple& ta, const CMatrix& d0, const CMatrix& c0);

enum class ProductVariant { F1, F2 };

// a(z)*b(z). The resolvent is b^{-1}(z) a^{-1}(z). F2 keeps block upper
// Hessenberg structure under recursion.
StandardTriple product(const StandardTriple& ta, const StandardTriple& tb, ProductVariant variant);

// a(z) + c(z) with deg c < deg a, where deg a is taken as N / r. The pencil is
// (D_A, G) with G = A - sum_k A^k Y_A c_k X_A; the weighted flag carries over.
// The result is checked against (a^{-1}(z))^{-1} + c(z) at a few points and a
// VerificationError is raised when it does not represent the sum.
StandardTriple add_lower_degree(const StandardTriple& ta, const MatPoly& c);

// h(z) = z*a(z)*d0*b(z) + c0.
StandardTriple composite(const StandardTriple& ta, const StandardTriple& tb, const CMatrix& d0, const CMatrix& c0);

// Second companion pencil of a monomial polynomial (leading coefficient may be
// singular).
StandardTriple frobenius_triple(const MatPoly& p);

// Barycentric Lagrange pencil of size (s+2)*r for s+1 nodes.
StandardTriple lagrange_triple(const MatPoly& p);

// Colleague pencil of size n*r for a Chebyshev-basis polynomial of grade n.
StandardTriple chebyshev_triple(const MatPoly& p);

}  // namespace alglin
