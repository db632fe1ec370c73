#include "alglin/constructions.hpp"

#include <cmath>
#include <sstream>

namespace alglin {

namespace {

CMatrix block_diag(std::initializer_list<const CMatrix*> blocks) {
  Index n = 0;
  for (const auto* b : blocks) n += b->rows();
  CMatrix out = CMatrix::Zero(n, n);
  Index off = 0;
  for (const auto* b : blocks) {
    out.block(off, off, b->rows(), b->cols()) = *b;
    off += b->rows();
  }
  return out;
}

void require_square(const CMatrix& m, Index r, const char* what) {
  if (m.rows() != r || m.cols() != r)
    throw StructuralError(std::string(what) + " must be " + std::to_string(r) + "x" + std::to_string(r) + ", got " +
                          std::to_string(m.rows()) + "x" + std::to_string(m.cols()));
}

BlockMeta make_meta(std::string kind, std::vector<Index> partition, Index r, const CMatrix& a) {
  BlockMeta meta;
  meta.kind = std::move(kind);
  meta.partition = std::move(partition);
  meta.block_size = r;
  meta.block_upper_hessenberg = is_block_upper_hessenberg(a, r);
  return meta;
}

// Deterministic probe points on the radius-2 circle used by the construction
// time oracle checks.
Complex probe_point(int k) { return std::polar(2.0, 0.3 + 1.1 * k); }

constexpr double kProbeConditionLimit = 1e8;
constexpr double kProbeTolerance = 1e-6;

// Fixes the sign convention of Y by comparing the resolvent against p(z)^{-1}
// at one admissible probe point. At most one flip; anything else is an error.
StandardTriple pin_sign(StandardTriple t, const MatPoly& p, const char* who) {
  for (int k = 0; k < 32; ++k) {
    const Complex z = probe_point(k);
    const CMatrix value = eval(p, z);
    if (condition_estimate(value) > kProbeConditionLimit) continue;
    if (condition_estimate(t.pencil().at(z)) > kProbeConditionLimit) continue;
    const CMatrix inverse = value.partialPivLu().inverse();
    const CMatrix r = resolvent_eval(t, z);
    const double scale = inverse.norm();
    if ((r - inverse).norm() <= kProbeTolerance * scale) return t;
    if ((r + inverse).norm() <= kProbeTolerance * scale)
      return StandardTriple(t.X(), t.pencil(), -t.Y(), t.weighted());
    std::ostringstream os;
    os << who << ": resolvent does not match p(z)^{-1} up to sign (relative deviation "
       << (r - inverse).norm() / scale << ")";
    throw VerificationError(os.str());
  }
  throw DegenerateInputError(std::string(who) + ": no admissible probe point for the sign check");
}

}  // namespace

StandardTriple scalar_shift_left(const StandardTriple& ta, const CMatrix& d0, const CMatrix& c0) {
  const Index r = ta.dim();
  const Index n = ta.size();
  require_square(d0, r, "scalar_shift_left: d0");
  require_square(c0, r, "scalar_shift_left: c0");
  const CMatrix ya = ta.effective_Y();

  CMatrix e = CMatrix::Zero(r + n, r + n);
  e.block(0, r, r, n) = c0 * ta.X();
  e.block(r, 0, n, r) = -ya;
  e.block(r, r, n, n) = ta.pencil().A();
  CMatrix d = block_diag({&d0, &ta.pencil().D()});

  CMatrix x = CMatrix::Zero(r, r + n);
  x.block(0, r, r, n) = -ta.X();
  CMatrix y = CMatrix::Zero(r + n, r);
  y.block(0, 0, r, r).setIdentity();
  auto meta = make_meta("shift_left", {r, n}, r, e);
  return {std::move(x), Pencil(std::move(d), std::move(e), std::move(meta)), std::move(y)};
}

StandardTriple scalar_shift_right(const StandardTriple& ta, const CMatrix& d0, const CMatrix& c0) {
  const Index r = ta.dim();
  const Index n = ta.size();
  require_square(d0, r, "scalar_shift_right: d0");
  require_square(c0, r, "scalar_shift_right: c0");
  const CMatrix ya = ta.effective_Y();

  CMatrix e = CMatrix::Zero(n + r, n + r);
  e.block(0, 0, n, n) = ta.pencil().A();
  e.block(0, n, n, r) = ya * c0;
  e.block(n, 0, r, n) = -ta.X();
  CMatrix d = block_diag({&ta.pencil().D(), &d0});

  CMatrix x = CMatrix::Zero(r, n + r);
  x.block(0, n, r, r).setIdentity();
  CMatrix y = CMatrix::Zero(n + r, r);
  y.block(0, 0, n, r) = -ya;
  auto meta = make_meta("shift_right", {n, r}, r, e);
  return {std::move(x), Pencil(std::move(d), std::move(e), std::move(meta)), std::move(y)};
}

StandardTriple product(const StandardTriple& ta, const StandardTriple& tb, ProductVariant variant) {
  const Index r = ta.dim();
  if (tb.dim() != r)
    throw StructuralError("product: factors have dimensions " + std::to_string(r) + " and " +
                          std::to_string(tb.dim()));
  const Index na = ta.size();
  const Index nb = tb.size();
  const CMatrix ya = ta.effective_Y();
  const CMatrix yb = tb.effective_Y();
  const CMatrix& a = ta.pencil().A();
  const CMatrix& b = tb.pencil().A();

  CMatrix f = CMatrix::Zero(na + nb, na + nb);
  CMatrix x = CMatrix::Zero(r, na + nb);
  CMatrix y = CMatrix::Zero(na + nb, r);
  CMatrix d;
  if (variant == ProductVariant::F1) {
    f.block(0, 0, na, na) = a;
    f.block(na, 0, nb, na) = yb * ta.X();
    f.block(na, na, nb, nb) = b;
    d = block_diag({&ta.pencil().D(), &tb.pencil().D()});
    x.block(0, na, r, nb) = tb.X();
    y.block(0, 0, na, r) = ya;
  } else {
    f.block(0, 0, nb, nb) = b;
    f.block(0, nb, nb, na) = yb * ta.X();
    f.block(nb, nb, na, na) = a;
    d = block_diag({&tb.pencil().D(), &ta.pencil().D()});
    x.block(0, 0, r, nb) = tb.X();
    y.block(nb, 0, na, r) = ya;
  }
  auto meta = variant == ProductVariant::F1 ? make_meta("product_f1", {na, nb}, r, f)
                                            : make_meta("product_f2", {nb, na}, r, f);
  return {std::move(x), Pencil(std::move(d), std::move(f), std::move(meta)), std::move(y)};
}

StandardTriple add_lower_degree(const StandardTriple& ta, const MatPoly& c) {
  const Index r = ta.dim();
  const Index n = ta.size();
  if (c.basis().kind != BasisKind::Monomial) throw ContractError("add_lower_degree: c must be in the monomial basis");
  if (c.dim() != r)
    throw StructuralError("add_lower_degree: c is " + std::to_string(c.dim()) + "x" + std::to_string(c.dim()) +
                          " but the triple has dimension " + std::to_string(r));
  if (n % r != 0) throw ContractError("add_lower_degree: pencil size is not a multiple of r");
  const int s = static_cast<int>(n / r);
  if (s < 1) throw ContractError("add_lower_degree: a has degree zero");
  if (c.grade() > s - 1)
    throw ContractError("add_lower_degree: deg c = " + std::to_string(c.grade()) + " is not below deg a = " +
                        std::to_string(s));

  const CMatrix& a = ta.pencil().A();
  CMatrix g = a;
  CMatrix krylov = ta.Y();  // A^k Y_A
  for (int k = 0; k <= c.grade(); ++k) {
    g -= krylov * c.data()[static_cast<std::size_t>(k)] * ta.X();
    if (k < c.grade()) krylov = a * krylov;
  }
  auto meta = ta.pencil().meta();
  meta.kind = "sum";
  meta.block_size = r;
  meta.block_upper_hessenberg = is_block_upper_hessenberg(g, r);
  StandardTriple out(ta.X(), Pencil(ta.pencil().D(), std::move(g), std::move(meta)), ta.Y(), ta.weighted());

  // a(z) is recovered from the input triple as the inverse of its resolvent.
  int checked = 0;
  for (int k = 0; k < 64 && checked < 3; ++k) {
    const Complex z = probe_point(k);
    if (condition_estimate(ta.pencil().at(z)) > kProbeConditionLimit) continue;
    if (condition_estimate(out.pencil().at(z)) > kProbeConditionLimit) continue;
    const CMatrix ra = resolvent_eval(ta, z);
    if (condition_estimate(ra) > kProbeConditionLimit) continue;
    const CMatrix sum = ra.partialPivLu().inverse() + eval(c, z);
    if (condition_estimate(sum) > kProbeConditionLimit) continue;
    const CMatrix expected = sum.partialPivLu().inverse();
    const double dev = (resolvent_eval(out, z) - expected).norm() / expected.norm();
    if (dev > kProbeTolerance) {
      std::ostringstream os;
      os << "add_lower_degree: corrected pencil does not represent a(z) + c(z) (relative resolvent deviation "
         << dev << " at z = " << z << ")";
      throw VerificationError(os.str());
    }
    ++checked;
  }
  if (checked == 0) throw DegenerateInputError("add_lower_degree: no admissible probe point for the sum check");
  return out;
}

StandardTriple composite(const StandardTriple& ta, const StandardTriple& tb, const CMatrix& d0, const CMatrix& c0) {
  const Index r = ta.dim();
  if (tb.dim() != r)
    throw StructuralError("composite: parts have dimensions " + std::to_string(r) + " and " +
                          std::to_string(tb.dim()));
  require_square(d0, r, "composite: d0");
  require_square(c0, r, "composite: c0");
  const Index na = ta.size();
  const Index nb = tb.size();
  const Index n = na + r + nb;
  const CMatrix ya = ta.effective_Y();
  const CMatrix yb = tb.effective_Y();

  CMatrix h = CMatrix::Zero(n, n);
  h.block(0, 0, na, na) = ta.pencil().A();
  h.block(0, na + r, na, nb) = -ya * c0 * tb.X();
  h.block(na, 0, r, na) = -ta.X();
  h.block(na + r, na, nb, r) = -yb;
  h.block(na + r, na + r, nb, nb) = tb.pencil().A();
  CMatrix d = block_diag({&ta.pencil().D(), &d0, &tb.pencil().D()});

  CMatrix x = CMatrix::Zero(r, n);
  x.block(0, na + r, r, nb) = tb.X();
  CMatrix y = CMatrix::Zero(n, r);
  y.block(0, 0, na, r) = ya;
  auto meta = make_meta("composite", {na, r, nb}, r, h);
  return {std::move(x), Pencil(std::move(d), std::move(h), std::move(meta)), std::move(y)};
}

StandardTriple frobenius_triple(const MatPoly& p) {
  if (p.basis().kind != BasisKind::Monomial) throw ContractError("frobenius_triple: monomial basis required");
  const int s = p.grade();
  if (s < 1) throw ContractError("frobenius_triple: grade must be at least 1");
  const Index r = p.dim();
  const Index n = s * r;
  const auto& alpha = p.data();
  const CMatrix& lead = alpha.back();
  const bool monic = lead == CMatrix::Identity(r, r);

  CMatrix a = CMatrix::Zero(n, n);
  for (int k = 1; k < s; ++k) a.block(k * r, (k - 1) * r, r, r).setIdentity();
  for (int k = 0; k < s; ++k) a.block(k * r, (s - 1) * r, r, r) = -alpha[static_cast<std::size_t>(k)];
  CMatrix d = CMatrix::Identity(n, n);
  d.block((s - 1) * r, (s - 1) * r, r, r) = lead;

  CMatrix x = CMatrix::Zero(r, n);
  x.block(0, (s - 1) * r, r, r).setIdentity();
  CMatrix y = CMatrix::Zero(n, r);
  y.block(0, 0, r, r).setIdentity();

  // For s >= 2, D*Y = Y and the weighted and unweighted resolvents coincide.
  // For s = 1 the weighted form would give a^{-1}(z) * alpha_1.
  const bool weighted = !monic && s >= 2;
  std::vector<Index> partition(static_cast<std::size_t>(s), r);
  auto meta = make_meta("frobenius", std::move(partition), r, a);
  StandardTriple t(std::move(x), Pencil(std::move(d), std::move(a), std::move(meta)), std::move(y), weighted);
  return pin_sign(std::move(t), p, "frobenius_triple");
}

StandardTriple lagrange_triple(const MatPoly& p) {
  if (p.basis().kind != BasisKind::Lagrange) throw ContractError("lagrange_triple: Lagrange basis required");
  const auto& nodes = p.basis().nodes;
  const auto& weights = p.basis().weights;
  const Index m = static_cast<Index>(nodes.size());
  if (m < 2) throw ContractError("lagrange_triple: at least two nodes are required");
  for (Index i = 0; i < m; ++i)
    for (Index j = i + 1; j < m; ++j)
      if (nodes[static_cast<std::size_t>(i)] == nodes[static_cast<std::size_t>(j)])
        throw ContractError("lagrange_triple: duplicate nodes");
  const Index r = p.dim();
  const Index n = (m + 1) * r;
  const CMatrix id = CMatrix::Identity(r, r);

  // a0 and a1 are A_0 and A_1 with det(A_0 - z A_1) = det a(z).
  CMatrix a0 = CMatrix::Zero(n, n);
  CMatrix a1 = CMatrix::Zero(n, n);
  for (Index k = 0; k < m; ++k) {
    const auto ks = static_cast<std::size_t>(k);
    a0.block(k * r, k * r, r, r) = -nodes[ks] * id;
    a0.block(k * r, m * r, r, r) = p.data()[ks];
    a0.block(m * r, k * r, r, r) = -weights[ks] * id;
    a1.block(k * r, k * r, r, r) = -id;
  }
  CMatrix x = CMatrix::Zero(r, n);
  x.block(0, m * r, r, r) = id;
  CMatrix y = CMatrix::Zero(n, r);
  for (Index k = 0; k < m; ++k) y.block(k * r, 0, r, r) = id;

  std::vector<Index> partition(static_cast<std::size_t>(m + 1), r);
  BlockMeta meta;
  meta.kind = "lagrange";
  meta.partition = std::move(partition);
  meta.block_size = r;
  meta.block_upper_hessenberg = is_block_upper_hessenberg(a0, r);
  // D*Y = Y because the zero block of D meets the zero block of Y.
  StandardTriple t(std::move(x), Pencil(-a1, -a0, std::move(meta)), std::move(y), true);
  return pin_sign(std::move(t), p, "lagrange_triple");
}

StandardTriple chebyshev_triple(const MatPoly& p) {
  if (p.basis().kind != BasisKind::Chebyshev) throw ContractError("chebyshev_triple: Chebyshev basis required");
  const int deg = p.grade();
  if (deg < 1) throw ContractError("chebyshev_triple: grade must be at least 1");
  const Index r = p.dim();
  const auto& b = p.data();
  const CMatrix id = CMatrix::Identity(r, r);

  if (deg == 1) {
    BlockMeta meta{"chebyshev", {r}, r, true};
    StandardTriple t(id, Pencil(b[1], -b[0], std::move(meta)), id);
    return pin_sign(std::move(t), p, "chebyshev_triple");
  }

  const Index nb = deg;
  const Index n = nb * r;
  CMatrix b0 = CMatrix::Zero(n, n);
  CMatrix b1 = CMatrix::Identity(n, n);
  b0.block(r, 0, r, r) = id;
  for (Index k = 2; k < nb; ++k) b0.block(k * r, (k - 1) * r, r, r) = 0.5 * id;
  for (Index k = 0; k + 2 < nb; ++k) b0.block(k * r, (k + 1) * r, r, r) = 0.5 * id;
  for (Index k = 0; k < nb; ++k) b0.block(k * r, (nb - 1) * r, r, r) = -b[static_cast<std::size_t>(k)];
  b0.block((nb - 2) * r, (nb - 1) * r, r, r) += b[static_cast<std::size_t>(nb)];
  b1.block((nb - 1) * r, (nb - 1) * r, r, r) = 2.0 * b[static_cast<std::size_t>(nb)];

  // The colleague pencil as displayed has determinant det b(z) / 2^{r(n-2)};
  // scaling its last block row restores det(zD - A) = det b(z) and leaves the
  // resolvent alone because Y only touches the first block.
  const double scale = std::ldexp(1.0, static_cast<int>(nb) - 2);
  b0.bottomRows(r) *= scale;
  b1.bottomRows(r) *= scale;

  CMatrix x = CMatrix::Zero(r, n);
  x.block(0, (nb - 1) * r, r, r) = id;
  CMatrix y = CMatrix::Zero(n, r);
  y.block(0, 0, r, r) = id;
  std::vector<Index> partition(static_cast<std::size_t>(nb), r);
  auto meta = make_meta("chebyshev", std::move(partition), r, b0);
  StandardTriple t(std::move(x), Pencil(std::move(b1), std::move(b0), std::move(meta)), std::move(y));
  return pin_sign(std::move(t), p, "chebyshev_triple");
}

}  // namespace alglin
