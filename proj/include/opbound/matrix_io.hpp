#pragma once

#include <iosfwd>
#include <string>

#include "opbound/matrix.hpp"

namespace opbound {

/// Reads a matrix from disk.  Accepts Matrix Market files (array or
/// coordinate shape, complex or real field, general symmetry) and the JSON
/// shape {"rows": m, "cols": n, "re": [...], "im": [...]} with flat row-major
/// arrays.  Throws ParseError (with a line reference) or DimensionError.
ComplexMatrix load_matrix(const std::string& path);

ComplexMatrix parse_matrix_market(std::istream& in, const std::string& origin);
ComplexMatrix parse_matrix_json(std::istream& in, const std::string& origin);

/// Writes "%%MatrixMarket matrix array complex general" with 17 significant
/// digits; round-trips through load_matrix to full double precision.
void save_matrix_market(const ComplexMatrix& a, const std::string& path);
void write_matrix_market(const ComplexMatrix& a, std::ostream& out);

/// Coordinate-shape variant; zero entries are omitted.
void save_matrix_market_coordinate(const ComplexMatrix& a, const std::string& path);
void write_matrix_market_coordinate(const ComplexMatrix& a, std::ostream& out);

void save_matrix_json(const ComplexMatrix& a, const std::string& path);
void write_matrix_json(const ComplexMatrix& a, std::ostream& out);

/// 17-significant-digit scientific formatting, locale independent.
std::string format_double(double value);

} // namespace opbound
