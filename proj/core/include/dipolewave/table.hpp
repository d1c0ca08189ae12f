#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "dipolewave/outcome.hpp"

namespace dipolewave::figures {

/// A numeric value or one of the in-band tokens "inf", "nan", "undefined".
using Cell = std::variant<double, std::string>;

inline const std::string kInf = "inf";
inline const std::string kNan = "nan";
inline const std::string kUndefined = "undefined";

Cell to_cell(const Outcome& outcome);

/// Rectangular table of named series with a provenance block.
class FigureTable {
 public:
  explicit FigureTable(std::vector<std::string> columns);

  /// Throws contract_violation on a width mismatch, a non-finite double or
  /// an unknown token.
  void add_row(std::vector<Cell> row);
  void add_meta(std::string key, std::string value);

  const std::vector<std::string>& columns() const { return columns_; }
  const std::vector<std::vector<Cell>>& rows() const { return rows_; }
  const std::vector<std::pair<std::string, std::string>>& meta() const { return meta_; }

  std::size_t column_index(std::string_view name) const;
  /// Numeric value at (row, column); throws if the cell holds a token.
  double number(std::size_t row, std::string_view column) const;

  /// "# key: value" lines, a header line, then one line per row.
  std::string to_csv() const;
  std::string to_json() const;

 private:
  std::vector<std::string> columns_;
  std::vector<std::vector<Cell>> rows_;
  std::vector<std::pair<std::string, std::string>> meta_;
};

/// Shortest decimal form that round-trips.
std::string format_number(double value);

/// 64-bit FNV-1a, hex encoded. Used for the reproducibility hash in meta.
std::string fnv1a_hex(std::string_view bytes);

}  // namespace dipolewave::figures
