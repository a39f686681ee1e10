#include "aec/csv.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <string_view>
#include <unordered_set>
#include <vector>

#include "aec/errors.hpp"

namespace aec {

std::string format_value(double v) {
  char buf[40];
  const int len = std::snprintf(buf, sizeof(buf), "%.17g", v);
  return std::string(buf, static_cast<std::size_t>(len));
}

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r')) {
    s.remove_prefix(1);
  }
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) {
    s.remove_suffix(1);
  }
  return s;
}

std::vector<std::string_view> split_fields(std::string_view line) {
  std::vector<std::string_view> fields;
  std::size_t start = 0;
  while (true) {
    const std::size_t comma = line.find(',', start);
    if (comma == std::string_view::npos) {
      fields.push_back(trim(line.substr(start)));
      break;
    }
    fields.push_back(trim(line.substr(start, comma - start)));
    start = comma + 1;
  }
  return fields;
}

double parse_cell(std::string_view cell, std::size_t line_no, const std::string& column) {
  double value = 0.0;
  const char* first = cell.data();
  const char* last = cell.data() + cell.size();
  const auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc() || ptr != last || cell.empty()) {
    throw CsvError("non-numeric value '" + std::string(cell) + "' at line " +
                   std::to_string(line_no) + ", column '" + column + "'");
  }
  if (!std::isfinite(value)) {
    throw CsvError("non-finite value at line " + std::to_string(line_no) +
                   ", column '" + column + "'");
  }
  return value;
}

}  // namespace

Dataset load_csv(const std::filesystem::path& path, const std::string& target_column,
                 TaskKind task) {
  std::ifstream in(path);
  if (!in) {
    throw IoError("cannot open '" + path.string() + "'");
  }

  std::string line;
  if (!std::getline(in, line)) {
    throw CsvError("'" + path.string() + "' is empty");
  }
  const auto header = split_fields(line);
  std::vector<std::string> columns(header.begin(), header.end());
  std::unordered_set<std::string> seen;
  for (const auto& name : columns) {
    if (name.empty()) {
      throw CsvError("empty column name in header of '" + path.string() + "'");
    }
    if (!seen.insert(name).second) {
      throw CsvError("duplicate column name '" + name + "' in '" + path.string() + "'");
    }
  }

  std::ptrdiff_t target_idx = -1;
  for (std::size_t j = 0; j < columns.size(); ++j) {
    if (columns[j] == target_column) target_idx = static_cast<std::ptrdiff_t>(j);
  }
  if (target_idx < 0) {
    throw CsvError("target column '" + target_column + "' not found in '" +
                   path.string() + "'");
  }

  const std::size_t n_cols = columns.size();
  std::vector<std::vector<double>> cells(n_cols);
  std::size_t line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    if (trim(line).empty()) continue;
    const auto fields = split_fields(line);
    if (fields.size() != n_cols) {
      throw CsvError("line " + std::to_string(line_no) + " has " +
                     std::to_string(fields.size()) + " fields, expected " +
                     std::to_string(n_cols));
    }
    for (std::size_t j = 0; j < n_cols; ++j) {
      const double v = parse_cell(fields[j], line_no, columns[j]);
      if (static_cast<std::ptrdiff_t>(j) == target_idx &&
          task == TaskKind::BinaryClassification && v != 0.0 && v != 1.0) {
        throw CsvError("classification target '" + columns[j] + "' has value " +
                       std::string(fields[j]) + " outside {0, 1} at line " +
                       std::to_string(line_no));
      }
      cells[j].push_back(v);
    }
  }

  const Eigen::Index n_samples = static_cast<Eigen::Index>(cells[0].size());
  const Eigen::Index n_features = static_cast<Eigen::Index>(n_cols - 1);
  Eigen::MatrixXd X(n_samples, n_features);
  Eigen::VectorXd y(n_samples);
  std::vector<std::string> feature_names;
  feature_names.reserve(n_cols - 1);
  Eigen::Index out = 0;
  for (std::size_t j = 0; j < n_cols; ++j) {
    if (static_cast<std::ptrdiff_t>(j) == target_idx) {
      for (Eigen::Index i = 0; i < n_samples; ++i) y(i) = cells[j][i];
    } else {
      feature_names.push_back(columns[j]);
      for (Eigen::Index i = 0; i < n_samples; ++i) X(i, out) = cells[j][i];
      ++out;
    }
  }
  return Dataset(std::move(feature_names), std::move(X), std::move(y), task);
}

void write_dataset_csv(const Dataset& d, const std::filesystem::path& path,
                       const std::string& target_name) {
  if (path.has_parent_path()) {
    std::filesystem::create_directories(path.parent_path());
  }
  std::ofstream out(path);
  if (!out) {
    throw IoError("cannot write '" + path.string() + "'");
  }
  for (const auto& name : d.feature_names()) out << name << ',';
  out << target_name << '\n';
  for (Eigen::Index i = 0; i < d.n_samples(); ++i) {
    for (Eigen::Index j = 0; j < d.n_features(); ++j) {
      out << format_value(d.features()(i, j)) << ',';
    }
    out << format_value(d.target()(i)) << '\n';
  }
  if (!out) {
    throw IoError("failed while writing '" + path.string() + "'");
  }
}

void write_correlation_csv(const CorrelationMatrix& c, const std::filesystem::path& path) {
  std::string body = "feature";
  for (const auto& name : c.names) {
    body += ',';
    body += name;
  }
  body += '\n';
  for (Eigen::Index i = 0; i < c.values.rows(); ++i) {
    body += c.names[static_cast<std::size_t>(i)];
    for (Eigen::Index j = 0; j < c.values.cols(); ++j) {
      body += ',';
      body += format_value(c.values(i, j));
    }
    body += '\n';
  }
  write_text_file(path, body);
}

void write_text_file(const std::filesystem::path& path, const std::string& content) {
  if (path.has_parent_path()) {
    std::filesystem::create_directories(path.parent_path());
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    throw IoError("cannot write '" + path.string() + "'");
  }
  out.write(content.data(), static_cast<std::streamsize>(content.size()));
  if (!out) {
    throw IoError("failed while writing '" + path.string() + "'");
  }
}

}  // namespace aec
