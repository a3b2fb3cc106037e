#pragma once
// Flat tables and their CSV / JSON / text renderings.
//
// Reals are written with 17 significant digits in CSV and text; JSON uses the
// shortest representation that parses back to the same double.

#include <cstdint>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "json.hpp"

namespace dk::cli {

enum class ColumnKind { integer, real, boolean, text };

struct Column {
  std::string name;
  ColumnKind kind = ColumnKind::real;
};

/// monostate is an empty cell (CSV: nothing, JSON: null). Missing reals use it
/// too; NaN does not survive JSON.
using Cell = std::variant<std::monostate, std::int64_t, double, bool, std::string>;

struct Table {
  std::vector<Column> columns;
  std::vector<std::vector<Cell>> rows;

  std::string header() const;
  /// Multiplies every non-empty real cell of the named columns by `factor`.
  void scale_columns(const std::vector<std::string>& names, double factor);
};

enum class OutputFormat { csv, json, text };

OutputFormat parse_format(std::string_view s);
std::string_view to_string(OutputFormat f);

std::string format_real(double x);

std::string to_csv(const Table& t);
nlohmann::json to_json(const Table& t);
std::string to_text(const Table& t);
std::string render(const Table& t, OutputFormat f);

/// Inverse of to_csv for a known column layout. Throws std::runtime_error on
/// a header mismatch or a malformed cell.
Table parse_csv(std::string_view text, const std::vector<Column>& columns);
/// Inverse of to_json.
Table from_json(const nlohmann::json& j, const std::vector<Column>& columns);

}  // namespace dk::cli
