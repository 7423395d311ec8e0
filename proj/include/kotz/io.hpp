#pragma once

#include <string>

#include <nlohmann/json_fwd.hpp>

#include "kotz/linalg.hpp"

namespace kotz {

/// Reads a matrix from CSV (comma-separated, one row per line) or, when the
/// path ends in .json, from a JSON 2-D array. skip_header drops one line.
Matrix read_matrix(const std::string& path, bool skip_header = false);

/// Parses "1,2,3" inline, or reads the file when the string names one.
Vector parse_vector(const std::string& text_or_path);

void write_matrix_csv(const std::string& path, const Matrix& m);

nlohmann::json to_json(const Matrix& m);
nlohmann::json to_json(const Vector& v);
nlohmann::json to_json(const IndexSet& s);

}  // namespace kotz
