#pragma once

#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "qsvand/dense.hpp"
#include "qsvand/displacement.hpp"

namespace qsvand::io {

inline constexpr int kSchemaVersion = 1;

// JSON instance document:
//   {schema_version, family, n, tau0, alpha, beta, gamma, delta, theta, nodes, alpha_rank, G, B}
// Generator arrays have n-1 entries (indices 1..n-1); G is n x alpha_rank and B is
// alpha_rank x n, both row-major flat arrays.
std::string serialize_instance(const DisplacementInstance& inst);
// validate_nodes = false admits zero or duplicated nodes. Throws ParseError.
DisplacementInstance parse_instance(const std::string& text, bool validate_nodes = true);

DisplacementInstance read_instance_file(const std::string& path, bool validate_nodes = true);
void write_text_file(const std::string& path, const std::string& text);

// Matrix dump: a "rows cols" line, then one line per row, numbers in %.17g.
void write_matrix(std::ostream& out, const DenseMatrix& m);
std::string format_matrix(const DenseMatrix& m);
// Reads one dump from the stream; throws ParseError.
DenseMatrix read_matrix(std::istream& in);
DenseMatrix parse_matrix(const std::string& text);

}  // namespace qsvand::io
