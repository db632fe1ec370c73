#pragma once

// JSON encodings. Complex numbers are [re, im]; matrices are flat row-major
// lists of complex numbers.

#include <string>

#include <json.hpp>

#include "alglin/eigensolve.hpp"
#include "alglin/mandelbrot.hpp"
#include "alglin/matpoly.hpp"
#include "alglin/pencil.hpp"

namespace alglin {

using Json = nlohmann::ordered_json;

Json to_json(Complex z);
Json to_json(const CMatrix& m);
Json to_json(const MatPoly& p);
Json to_json(const Pencil& p);
Json to_json(const StandardTriple& t);
Json to_json(const EigenReport& rep);
Json to_json(const HeightReport& rep);
Json to_json(const InverseStructureReport& rep);

// The parsers throw ParseError naming the offending location.
Complex complex_from_json(const Json& j, const std::string& where);
CMatrix matrix_from_json(const Json& j, Index rows, Index cols, const std::string& where);
MatPoly matpoly_from_json(const Json& j, const std::string& where = "$");
Pencil pencil_from_json(const Json& j, const std::string& where = "$");
StandardTriple triple_from_json(const Json& j, const std::string& where = "$");

// Square matrix given either as {"dim": n, "data": [...]} or as a list of rows.
CMatrix square_matrix_from_json(const Json& j, const std::string& where = "$");

Json parse_json_text(const std::string& text, const std::string& source);
Json read_json_file(const std::string& path);

std::string to_csv(const IntMatrix& m);

}  // namespace alglin
