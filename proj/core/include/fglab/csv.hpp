#pragma once

#include <Eigen/Dense>
#include <string>
#include <utility>
#include <vector>

namespace fglab {

using HeaderEntries = std::vector<std::pair<std::string, std::string>>;

// Writes a CSV file: '#'-prefixed "key = value" comment lines, a header
// row, then the data rows. Values are printed with %.*g at the given
// significant digits (6 for display files, 17 for raw companions), dot
// decimal separator, no locale dependence, LF line endings. Output is a
// pure function of the arguments, so identical inputs give identical bytes.
void write_csv(const std::string& path, const HeaderEntries& header,
               const std::vector<std::string>& columns,
               const Eigen::MatrixXd& data, int significant_digits = 6);

// In-memory variant, used by tests and by the writer itself.
std::string format_csv(const HeaderEntries& header,
                       const std::vector<std::string>& columns,
                       const Eigen::MatrixXd& data,
                       int significant_digits = 6);

// Same layout but with preformatted cells, for tables mixing labels and
// numbers. Commas and newlines in cells are replaced with ';' to keep rows
// parseable.
std::string format_csv_rows(const HeaderEntries& header,
                            const std::vector<std::string>& columns,
                            const std::vector<std::vector<std::string>>& rows);
void write_csv_rows(const std::string& path, const HeaderEntries& header,
                    const std::vector<std::string>& columns,
                    const std::vector<std::vector<std::string>>& rows);

// %.*g rendering used for every numeric cell.
std::string format_significant(double v, int significant_digits);

struct CsvTable {
  HeaderEntries header;
  std::vector<std::string> columns;
  Eigen::MatrixXd data;
};

// Reads a file written by write_csv. The plot layer goes through this so
// SVGs are derived from what was actually written, not from live solver
// state.
CsvTable read_csv(const std::string& path);

}  // namespace fglab
