#include "dipolewave/table.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <sstream>

#include <json.hpp>

#include "dipolewave/errors.hpp"

namespace dipolewave::figures {

Cell to_cell(const Outcome& outcome) {
  switch (outcome.kind) {
    case Outcome::Kind::finite: return outcome.value;
    case Outcome::Kind::infinite: return kInf;
    case Outcome::Kind::undefined: return kUndefined;
  }
  return kNan;
}

FigureTable::FigureTable(std::vector<std::string> columns) : columns_(std::move(columns)) {
  if (columns_.empty()) throw contract_violation("FigureTable needs at least one column");
}

void FigureTable::add_row(std::vector<Cell> row) {
  if (row.size() != columns_.size()) {
    throw contract_violation("FigureTable: row width does not match the column count");
  }
  for (const Cell& cell : row) {
    if (const double* v = std::get_if<double>(&cell)) {
      if (!std::isfinite(*v)) {
        throw contract_violation("FigureTable: non-finite values must be emitted as tokens");
      }
    } else {
      const auto& token = std::get<std::string>(cell);
      if (token != kInf && token != kNan && token != kUndefined) {
        throw contract_violation("FigureTable: unknown token '" + token + "'");
      }
    }
  }
  rows_.push_back(std::move(row));
}

void FigureTable::add_meta(std::string key, std::string value) {
  meta_.emplace_back(std::move(key), std::move(value));
}

std::size_t FigureTable::column_index(std::string_view name) const {
  for (std::size_t i = 0; i < columns_.size(); ++i) {
    if (columns_[i] == name) return i;
  }
  throw contract_violation("FigureTable: no column named '" + std::string(name) + "'");
}

double FigureTable::number(std::size_t row, std::string_view column) const {
  const Cell& cell = rows_.at(row).at(column_index(column));
  if (const double* v = std::get_if<double>(&cell)) return *v;
  throw contract_violation("FigureTable: cell holds token '" + std::get<std::string>(cell) + "'");
}

std::string format_number(double value) {
  if (value == 0.0) return "0";  // also folds -0
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof(buf), value);
  return std::string(buf, res.ptr);
}

std::string FigureTable::to_csv() const {
  std::ostringstream out;
  for (const auto& [key, value] : meta_) out << "# " << key << ": " << value << '\n';
  for (std::size_t i = 0; i < columns_.size(); ++i) out << (i ? "," : "") << columns_[i];
  out << '\n';
  for (const auto& row : rows_) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i) out << ',';
      if (const double* v = std::get_if<double>(&row[i])) {
        out << format_number(*v);
      } else {
        out << std::get<std::string>(row[i]);
      }
    }
    out << '\n';
  }
  return out.str();
}

std::string FigureTable::to_json() const {
  nlohmann::ordered_json doc;
  doc["meta"] = nlohmann::ordered_json::object();
  for (const auto& [key, value] : meta_) doc["meta"][key] = value;
  doc["columns"] = columns_;
  doc["rows"] = nlohmann::ordered_json::array();
  for (const auto& row : rows_) {
    auto jrow = nlohmann::ordered_json::array();
    for (const Cell& cell : row) {
      if (const double* v = std::get_if<double>(&cell)) {
        jrow.push_back(*v);
      } else {
        jrow.push_back(std::get<std::string>(cell));
      }
    }
    doc["rows"].push_back(std::move(jrow));
  }
  return doc.dump(2) + "\n";
}

std::string fnv1a_hex(std::string_view bytes) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

}  // namespace dipolewave::figures
