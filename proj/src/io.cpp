#include "kotz/io.hpp"

#include <filesystem>
#include <fstream>
#include <nlohmann/json.hpp>
#include <sstream>
#include <vector>

namespace kotz {

namespace {

std::vector<double> parse_csv_line(const std::string& line) {
  std::vector<double> out;
  std::stringstream ss(line);
  std::string cell;
  while (std::getline(ss, cell, ',')) {
    if (cell.find_first_not_of(" \t\r") == std::string::npos) continue;
    out.push_back(std::stod(cell));
  }
  return out;
}

Matrix rows_to_matrix(const std::vector<std::vector<double>>& rows, const std::string& source) {
  if (rows.empty()) throw Error("no rows in " + source);
  const std::size_t cols = rows.front().size();
  Matrix m(static_cast<Eigen::Index>(rows.size()), static_cast<Eigen::Index>(cols));
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw Error("ragged rows in " + source);
    for (std::size_t c = 0; c < cols; ++c) {
      m(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) = rows[r][c];
    }
  }
  return m;
}

}  // namespace

Matrix read_matrix(const std::string& path, bool skip_header) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open " + path);
  if (path.size() > 5 && path.substr(path.size() - 5) == ".json") {
    nlohmann::json j;
    in >> j;
    std::vector<std::vector<double>> rows;
    for (const auto& row : j) rows.push_back(row.get<std::vector<double>>());
    return rows_to_matrix(rows, path);
  }
  std::vector<std::vector<double>> rows;
  std::string line;
  bool first = true;
  while (std::getline(in, line)) {
    if (first && skip_header) {
      first = false;
      continue;
    }
    first = false;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    rows.push_back(parse_csv_line(line));
  }
  return rows_to_matrix(rows, path);
}

Vector parse_vector(const std::string& text_or_path) {
  std::vector<double> vals;
  if (std::filesystem::exists(text_or_path)) {
    std::ifstream in(text_or_path);
    std::string line;
    while (std::getline(in, line)) {
      for (double v : parse_csv_line(line)) vals.push_back(v);
    }
  } else {
    vals = parse_csv_line(text_or_path);
  }
  if (vals.empty()) throw Error("empty vector: " + text_or_path);
  Vector v(static_cast<Eigen::Index>(vals.size()));
  for (std::size_t i = 0; i < vals.size(); ++i) v[static_cast<Eigen::Index>(i)] = vals[i];
  return v;
}

void write_matrix_csv(const std::string& path, const Matrix& m) {
  std::ofstream out(path);
  if (!out) throw Error("cannot write " + path);
  out.precision(17);
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    for (Eigen::Index c = 0; c < m.cols(); ++c) {
      if (c > 0) out << ',';
      out << m(r, c);
    }
    out << '\n';
  }
}

nlohmann::json to_json(const Matrix& m) {
  nlohmann::json rows = nlohmann::json::array();
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    nlohmann::json row = nlohmann::json::array();
    for (Eigen::Index c = 0; c < m.cols(); ++c) row.push_back(m(r, c));
    rows.push_back(row);
  }
  return rows;
}

nlohmann::json to_json(const Vector& v) {
  nlohmann::json out = nlohmann::json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) out.push_back(v[i]);
  return out;
}

nlohmann::json to_json(const IndexSet& s) {
  nlohmann::json out = nlohmann::json::array();
  for (int m : s.members()) out.push_back(m);
  return out;
}

}  // namespace kotz
