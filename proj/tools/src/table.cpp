#include "dirac_kepler_cli/table.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <sstream>
#include <stdexcept>

namespace dk::cli {

namespace {

std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\n\r") == std::string::npos) return s;
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"') out += '"';
    out += ch;
  }
  out += '"';
  return out;
}

std::string cell_text(const Cell& c) {
  struct V {
    std::string operator()(std::monostate) const { return ""; }
    std::string operator()(std::int64_t v) const { return std::to_string(v); }
    std::string operator()(double v) const { return format_real(v); }
    std::string operator()(bool v) const { return v ? "true" : "false"; }
    std::string operator()(const std::string& v) const { return v; }
  };
  return std::visit(V{}, c);
}

// One CSV record, honouring quotes. Advances pos past the line terminator.
std::vector<std::string> csv_record(std::string_view text, std::size_t& pos) {
  std::vector<std::string> fields;
  std::string cur;
  bool quoted = false;
  while (pos < text.size()) {
    const char ch = text[pos++];
    if (quoted) {
      if (ch == '"') {
        if (pos < text.size() && text[pos] == '"') {
          cur += '"';
          ++pos;
        } else {
          quoted = false;
        }
      } else {
        cur += ch;
      }
    } else if (ch == '"') {
      quoted = true;
    } else if (ch == ',') {
      fields.push_back(std::move(cur));
      cur.clear();
    } else if (ch == '\n') {
      break;
    } else if (ch != '\r') {
      cur += ch;
    }
  }
  if (quoted) throw std::runtime_error("unterminated quote in CSV");
  fields.push_back(std::move(cur));
  return fields;
}

Cell parse_cell(const std::string& s, ColumnKind kind) {
  if (s.empty()) return std::monostate{};
  switch (kind) {
    case ColumnKind::integer: {
      std::int64_t v = 0;
      auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
      if (ec != std::errc{} || p != s.data() + s.size()) throw std::runtime_error("bad integer: " + s);
      return v;
    }
    case ColumnKind::real: {
      // strtod, since from_chars does not take "inf"/"nan" spellings on every libstdc++.
      char* end = nullptr;
      const double v = std::strtod(s.c_str(), &end);
      if (end != s.c_str() + s.size()) throw std::runtime_error("bad real: " + s);
      return v;
    }
    case ColumnKind::boolean:
      if (s == "true") return true;
      if (s == "false") return false;
      throw std::runtime_error("bad boolean: " + s);
    case ColumnKind::text:
      return s;
  }
  return std::monostate{};
}

}  // namespace

std::string Table::header() const {
  std::string h;
  for (std::size_t i = 0; i < columns.size(); ++i) {
    if (i) h += ',';
    h += columns[i].name;
  }
  return h;
}

void Table::scale_columns(const std::vector<std::string>& names, double factor) {
  for (std::size_t c = 0; c < columns.size(); ++c) {
    bool hit = false;
    for (const auto& n : names) hit = hit || n == columns[c].name;
    if (!hit) continue;
    for (auto& row : rows) {
      if (auto* v = std::get_if<double>(&row[c])) *v *= factor;
    }
  }
}

OutputFormat parse_format(std::string_view s) {
  if (s == "csv") return OutputFormat::csv;
  if (s == "json") return OutputFormat::json;
  if (s == "text") return OutputFormat::text;
  throw std::invalid_argument("unknown format: " + std::string(s));
}

std::string_view to_string(OutputFormat f) {
  switch (f) {
    case OutputFormat::csv:
      return "csv";
    case OutputFormat::json:
      return "json";
    case OutputFormat::text:
      return "text";
  }
  return "text";
}

std::string format_real(double x) {
  if (std::isnan(x)) return "nan";
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

std::string to_csv(const Table& t) {
  std::string out = t.header() + "\n";
  for (const auto& row : t.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i) out += ',';
      out += csv_escape(cell_text(row[i]));
    }
    out += '\n';
  }
  return out;
}

nlohmann::json to_json(const Table& t) {
  nlohmann::json j;
  j["columns"] = nlohmann::json::array();
  for (const auto& c : t.columns) j["columns"].push_back(c.name);
  j["rows"] = nlohmann::json::array();
  for (const auto& row : t.rows) {
    nlohmann::json obj = nlohmann::json::object();
    for (std::size_t i = 0; i < row.size(); ++i) {
      const std::string& key = t.columns[i].name;
      std::visit(
          [&](const auto& v) {
            using T = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<T, std::monostate>) {
              obj[key] = nullptr;
            } else if constexpr (std::is_same_v<T, double>) {
              // JSON has no NaN/inf; those become null.
              if (std::isfinite(v)) obj[key] = v; else obj[key] = nullptr;
            } else {
              obj[key] = v;
            }
          },
          row[i]);
    }
    j["rows"].push_back(std::move(obj));
  }
  return j;
}

std::string to_text(const Table& t) {
  std::vector<std::vector<std::string>> cells;
  std::vector<std::size_t> width(t.columns.size());
  for (std::size_t i = 0; i < t.columns.size(); ++i) width[i] = t.columns[i].name.size();
  for (const auto& row : t.rows) {
    auto& line = cells.emplace_back();
    for (std::size_t i = 0; i < row.size(); ++i) {
      line.push_back(cell_text(row[i]));
      width[i] = std::max(width[i], line.back().size());
    }
  }
  std::ostringstream os;
  auto put = [&](std::size_t i, const std::string& s) {
    if (i) os << "  ";
    os << s << std::string(width[i] - s.size(), ' ');
  };
  for (std::size_t i = 0; i < t.columns.size(); ++i) put(i, t.columns[i].name);
  os << '\n';
  for (const auto& line : cells) {
    for (std::size_t i = 0; i < line.size(); ++i) put(i, line[i]);
    os << '\n';
  }
  return os.str();
}

std::string render(const Table& t, OutputFormat f) {
  switch (f) {
    case OutputFormat::csv:
      return to_csv(t);
    case OutputFormat::json:
      return to_json(t).dump(2) + "\n";
    case OutputFormat::text:
      return to_text(t);
  }
  return {};
}

Table parse_csv(std::string_view text, const std::vector<Column>& columns) {
  Table t;
  t.columns = columns;
  std::size_t pos = 0;
  const auto head = csv_record(text, pos);
  if (head.size() != columns.size()) throw std::runtime_error("CSV header width mismatch");
  for (std::size_t i = 0; i < head.size(); ++i) {
    if (head[i] != columns[i].name) throw std::runtime_error("unexpected CSV column " + head[i]);
  }
  while (pos < text.size()) {
    const auto rec = csv_record(text, pos);
    if (rec.size() == 1 && rec[0].empty()) continue;
    if (rec.size() != columns.size()) throw std::runtime_error("CSV row width mismatch");
    auto& row = t.rows.emplace_back();
    for (std::size_t i = 0; i < rec.size(); ++i) row.push_back(parse_cell(rec[i], columns[i].kind));
  }
  return t;
}

Table from_json(const nlohmann::json& j, const std::vector<Column>& columns) {
  Table t;
  t.columns = columns;
  for (const auto& obj : j.at("rows")) {
    auto& row = t.rows.emplace_back();
    for (const auto& c : columns) {
      const auto& v = obj.at(c.name);
      if (v.is_null()) {
        row.emplace_back(std::monostate{});
        continue;
      }
      switch (c.kind) {
        case ColumnKind::integer:
          row.emplace_back(v.get<std::int64_t>());
          break;
        case ColumnKind::real:
          row.emplace_back(v.get<double>());
          break;
        case ColumnKind::boolean:
          row.emplace_back(v.get<bool>());
          break;
        case ColumnKind::text:
          row.emplace_back(v.get<std::string>());
          break;
      }
    }
  }
  return t;
}

}  // namespace dk::cli
