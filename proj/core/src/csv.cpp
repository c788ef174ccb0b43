#include "fglab/csv.hpp"

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "fglab/errors.hpp"

namespace fglab {

std::string format_significant(double v, int significant_digits) {
  char buf[48];
  std::snprintf(buf, sizeof(buf), "%.*g", significant_digits, v);
  return buf;
}

namespace {

std::string sanitize_cell(std::string s) {
  for (char& c : s)
    if (c == ',' || c == '\n' || c == '\r') c = ';';
  return s;
}

std::string trim(const std::string& s) {
  size_t a = s.find_first_not_of(" \t\r\n");
  if (a == std::string::npos) return "";
  size_t b = s.find_last_not_of(" \t\r\n");
  return s.substr(a, b - a + 1);
}

}  // namespace

std::string format_csv(const HeaderEntries& header,
                       const std::vector<std::string>& columns,
                       const Eigen::MatrixXd& data, int significant_digits) {
  std::ostringstream out;
  for (const auto& [key, value] : header)
    out << "# " << key << " = " << value << "\n";
  for (size_t j = 0; j < columns.size(); ++j) {
    if (j) out << ",";
    out << columns[j];
  }
  out << "\n";
  for (Eigen::Index i = 0; i < data.rows(); ++i) {
    for (Eigen::Index j = 0; j < data.cols(); ++j) {
      if (j) out << ",";
      out << format_significant(data(i, j), significant_digits);
    }
    out << "\n";
  }
  return out.str();
}

std::string format_csv_rows(const HeaderEntries& header,
                            const std::vector<std::string>& columns,
                            const std::vector<std::vector<std::string>>& rows) {
  std::ostringstream out;
  for (const auto& [key, value] : header)
    out << "# " << key << " = " << value << "\n";
  for (size_t j = 0; j < columns.size(); ++j) {
    if (j) out << ",";
    out << columns[j];
  }
  out << "\n";
  for (const auto& row : rows) {
    for (size_t j = 0; j < row.size(); ++j) {
      if (j) out << ",";
      out << sanitize_cell(row[j]);
    }
    out << "\n";
  }
  return out.str();
}

void write_csv_rows(const std::string& path, const HeaderEntries& header,
                    const std::vector<std::string>& columns,
                    const std::vector<std::vector<std::string>>& rows) {
  for (const auto& row : rows)
    if (row.size() != columns.size())
      throw ConfigError("csv row width does not match column count");
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ConfigError("cannot write file: " + path);
  out << format_csv_rows(header, columns, rows);
  if (!out) throw ConfigError("write failed: " + path);
}

void write_csv(const std::string& path, const HeaderEntries& header,
               const std::vector<std::string>& columns,
               const Eigen::MatrixXd& data, int significant_digits) {
  if (static_cast<size_t>(data.cols()) != columns.size())
    throw ConfigError("csv column count does not match data width");
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ConfigError("cannot write file: " + path);
  out << format_csv(header, columns, data, significant_digits);
  if (!out) throw ConfigError("write failed: " + path);
}

CsvTable read_csv(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot read csv file: " + path);
  CsvTable table;
  std::string line;
  bool have_columns = false;
  std::vector<std::vector<double>> rows;
  while (std::getline(in, line)) {
    std::string s = trim(line);
    if (s.empty()) continue;
    if (s[0] == '#') {
      size_t eq = s.find('=');
      if (eq != std::string::npos)
        table.header.emplace_back(trim(s.substr(1, eq - 1)),
                                  trim(s.substr(eq + 1)));
      continue;
    }
    std::vector<std::string> fields;
    std::istringstream ls(s);
    std::string field;
    while (std::getline(ls, field, ',')) fields.push_back(trim(field));
    if (!have_columns) {
      table.columns = fields;
      have_columns = true;
      continue;
    }
    if (fields.size() != table.columns.size())
      throw ConfigError(path + ": row width does not match header");
    std::vector<double> row;
    row.reserve(fields.size());
    for (const std::string& f : fields) {
      char* end = nullptr;
      double v = std::strtod(f.c_str(), &end);
      if (end == f.c_str() || *end != '\0')
        throw ConfigError(path + ": non-numeric cell '" + f + "'");
      row.push_back(v);
    }
    rows.push_back(std::move(row));
  }
  if (!have_columns) throw ConfigError(path + ": no header row");
  table.data.resize(static_cast<Eigen::Index>(rows.size()),
                    static_cast<Eigen::Index>(table.columns.size()));
  for (size_t i = 0; i < rows.size(); ++i)
    for (size_t j = 0; j < rows[i].size(); ++j)
      table.data(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) =
          rows[i][j];
  return table;
}

}  // namespace fglab
