#include "alglin/json_io.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

namespace alglin {

namespace {

[[noreturn]] void fail(const std::string& where, const std::string& what) {
  throw ParseError(where + ": " + what);
}

const Json& field(const Json& j, const char* key, const std::string& where) {
  if (!j.is_object()) fail(where, "expected an object");
  auto it = j.find(key);
  if (it == j.end()) fail(where, std::string("missing field \"") + key + "\"");
  return *it;
}

Index index_field(const Json& j, const char* key, const std::string& where) {
  const Json& v = field(j, key, where);
  if (!v.is_number_integer() || v.get<long long>() < 0) fail(where + "." + key, "expected a non-negative integer");
  return static_cast<Index>(v.get<long long>());
}

std::string kind_name(BasisKind k) {
  switch (k) {
    case BasisKind::Monomial: return "monomial";
    case BasisKind::Chebyshev: return "chebyshev";
    case BasisKind::Lagrange: return "lagrange";
  }
  return "?";
}

std::string big_string(const BigInt& v) { return v.get_str(); }

Json int_matrix_rows(const IntMatrix& m) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(m(i, j).get_si());
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace

Json to_json(Complex z) { return Json::array({z.real(), z.imag()}); }

Json to_json(const CMatrix& m) {
  Json out = Json::array();
  for (Index i = 0; i < m.rows(); ++i)
    for (Index j = 0; j < m.cols(); ++j) out.push_back(to_json(m(i, j)));
  return out;
}

Json to_json(const MatPoly& p) {
  Json out;
  if (p.basis().kind == BasisKind::Lagrange) {
    Json nodes = Json::array();
    Json weights = Json::array();
    for (const auto& t : p.basis().nodes) nodes.push_back(to_json(t));
    for (const auto& b : p.basis().weights) weights.push_back(to_json(b));
    out["basis"] = {{"lagrange", {{"nodes", nodes}, {"weights", weights}}}};
  } else {
    out["basis"] = kind_name(p.basis().kind);
  }
  out["dim"] = p.dim();
  out["grade"] = p.grade();
  Json data = Json::array();
  for (const auto& m : p.data()) data.push_back(to_json(m));
  out["data"] = std::move(data);
  return out;
}

Json to_json(const Pencil& p) {
  Json out;
  out["N"] = p.size();
  out["D"] = to_json(p.D());
  out["A"] = to_json(p.A());
  const auto& meta = p.meta();
  out["block_meta"] = {{"kind", meta.kind},
                       {"partition", meta.partition},
                       {"block_size", meta.block_size},
                       {"block_upper_hessenberg", meta.block_upper_hessenberg}};
  return out;
}

Json to_json(const StandardTriple& t) {
  Json out;
  out["r"] = t.dim();
  out["N"] = t.size();
  out["X"] = to_json(t.X());
  out["Y"] = to_json(t.Y());
  out["pencil"] = to_json(t.pencil());
  out["weighted"] = t.weighted();
  return out;
}

Json to_json(const EigenReport& rep) {
  Json out;
  Json finite = Json::array();
  for (const auto& z : rep.finite) finite.push_back(to_json(z));
  out["finite"] = std::move(finite);
  out["infinite_count"] = rep.infinite_count;
  out["residuals"] = rep.residuals;
  out["shift"] = to_json(rep.shift_used);
  return out;
}

Json to_json(const HeightReport& rep) {
  Json out;
  out["height"] = rep.height;
  out["t_metric"] = rep.t_metric ? Json(*rep.t_metric) : Json(nullptr);
  out["is_bohemian_01"] = rep.is_bohemian_01;
  out["is_height1_integer"] = rep.is_height1_integer;
  return out;
}

Json to_json(const InverseStructureReport& rep) {
  Json out;
  out["dim"] = rep.inverse.rows();
  out["corner_value"] = big_string(rep.corner_value);
  Json c = Json::array();
  Json r = Json::array();
  for (const auto& v : rep.C) c.push_back(v.get_si());
  for (const auto& v : rep.R) r.push_back(v.get_si());
  out["C"] = std::move(c);
  out["R"] = std::move(r);
  out["height1"] = rep.height1;
  out["zero_block_ok"] = rep.zero_block_ok;
  out["diagonal_blocks_ok"] = rep.diagonal_blocks_ok;
  out["border_zero_ok"] = rep.border_zero_ok;
  out["recursion_ok"] = rep.recursion_ok;
  out["identity_ok"] = rep.identity_ok;
  if (rep.height1) out["inverse"] = int_matrix_rows(rep.inverse);
  return out;
}

Complex complex_from_json(const Json& j, const std::string& where) {
  if (j.is_number()) return {j.get<double>(), 0.0};
  if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number())
    fail(where, "expected a complex number [re, im]");
  return {j[0].get<double>(), j[1].get<double>()};
}

CMatrix matrix_from_json(const Json& j, Index rows, Index cols, const std::string& where) {
  if (!j.is_array()) fail(where, "expected a flat row-major list of complex numbers");
  if (static_cast<Index>(j.size()) != rows * cols)
    fail(where, "expected " + std::to_string(rows * cols) + " entries, found " + std::to_string(j.size()));
  CMatrix m(rows, cols);
  for (Index i = 0; i < rows; ++i)
    for (Index k = 0; k < cols; ++k) {
      const auto idx = static_cast<std::size_t>(i * cols + k);
      m(i, k) = complex_from_json(j[idx], where + "[" + std::to_string(idx) + "]");
    }
  return m;
}

CMatrix square_matrix_from_json(const Json& j, const std::string& where) {
  if (j.is_object()) {
    const Index n = index_field(j, "dim", where);
    return matrix_from_json(field(j, "data", where), n, n, where + ".data");
  }
  if (!j.is_array() || j.empty()) fail(where, "expected a matrix");
  const Index n = static_cast<Index>(j.size());
  CMatrix m(n, n);
  for (Index i = 0; i < n; ++i) {
    const Json& row = j[static_cast<std::size_t>(i)];
    const std::string rw = where + "[" + std::to_string(i) + "]";
    if (!row.is_array() || static_cast<Index>(row.size()) != n) fail(rw, "expected a row of length " + std::to_string(n));
    for (Index k = 0; k < n; ++k)
      m(i, k) = complex_from_json(row[static_cast<std::size_t>(k)], rw + "[" + std::to_string(k) + "]");
  }
  return m;
}

MatPoly matpoly_from_json(const Json& j, const std::string& where) {
  const Json& basis = field(j, "basis", where);
  const Index r = index_field(j, "dim", where);
  const Index s = index_field(j, "grade", where);
  if (r == 0) fail(where + ".dim", "dimension must be positive");
  const Json& data = field(j, "data", where);
  if (!data.is_array() || static_cast<Index>(data.size()) != s + 1)
    fail(where + ".data", "expected grade + 1 = " + std::to_string(s + 1) + " matrices");
  std::vector<CMatrix> mats;
  for (std::size_t k = 0; k < data.size(); ++k)
    mats.push_back(matrix_from_json(data[k], r, r, where + ".data[" + std::to_string(k) + "]"));

  try {
    if (basis.is_string()) {
      const auto name = basis.get<std::string>();
      if (name == "monomial") return MatPoly::monomial(std::move(mats));
      if (name == "chebyshev") return MatPoly::chebyshev(std::move(mats));
      fail(where + ".basis", "unknown basis \"" + name + "\"");
    }
    const Json& lag = field(basis, "lagrange", where + ".basis");
    const Json& nodes = field(lag, "nodes", where + ".basis.lagrange");
    const Json& weights = field(lag, "weights", where + ".basis.lagrange");
    if (!nodes.is_array() || !weights.is_array()) fail(where + ".basis.lagrange", "nodes and weights must be lists");
    std::vector<Complex> tau;
    std::vector<Complex> beta;
    for (std::size_t k = 0; k < nodes.size(); ++k)
      tau.push_back(complex_from_json(nodes[k], where + ".basis.lagrange.nodes[" + std::to_string(k) + "]"));
    for (std::size_t k = 0; k < weights.size(); ++k)
      beta.push_back(complex_from_json(weights[k], where + ".basis.lagrange.weights[" + std::to_string(k) + "]"));
    return MatPoly::lagrange(std::move(tau), std::move(beta), std::move(mats));
  } catch (const ParseError&) {
    throw;
  } catch (const Error& e) {
    fail(where, e.what());
  }
}

Pencil pencil_from_json(const Json& j, const std::string& where) {
  const Index n = index_field(j, "N", where);
  if (n == 0) fail(where + ".N", "pencil size must be positive");
  CMatrix d = matrix_from_json(field(j, "D", where), n, n, where + ".D");
  CMatrix a = matrix_from_json(field(j, "A", where), n, n, where + ".A");
  BlockMeta meta;
  if (auto it = j.find("block_meta"); it != j.end() && it->is_object()) {
    meta.kind = it->value("kind", std::string{});
    meta.block_size = it->value("block_size", Index{0});
    meta.block_upper_hessenberg = it->value("block_upper_hessenberg", false);
    if (auto p = it->find("partition"); p != it->end() && p->is_array())
      for (const auto& v : *p) meta.partition.push_back(v.get<Index>());
  }
  return {std::move(d), std::move(a), std::move(meta)};
}

StandardTriple triple_from_json(const Json& j, const std::string& where) {
  const Index r = index_field(j, "r", where);
  Pencil pencil = pencil_from_json(field(j, "pencil", where), where + ".pencil");
  const Index n = pencil.size();
  CMatrix x = matrix_from_json(field(j, "X", where), r, n, where + ".X");
  CMatrix y = matrix_from_json(field(j, "Y", where), n, r, where + ".Y");
  const bool weighted = j.value("weighted", false);
  return {std::move(x), std::move(pencil), std::move(y), weighted};
}

Json parse_json_text(const std::string& text, const std::string& source) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(source + ": malformed JSON at byte " + std::to_string(e.byte) + ": " + e.what());
  }
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(path + ": cannot open file");
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_json_text(ss.str(), path);
}

std::string to_csv(const IntMatrix& m) {
  std::string out;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (j) out += ',';
      out += m(i, j).get_str();
    }
    out += '\n';
  }
  return out;
}

}  // namespace alglin
