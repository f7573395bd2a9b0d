#include "kgbound_cli/table.hpp"

#include <cmath>
#include <cstdio>
#include <json.hpp>
#include <stdexcept>

#include "kgbound_cli/config.hpp"

namespace kgbound::cli {

void Table::add_row(std::vector<Cell> row) {
  if (row.size() != columns.size()) throw std::logic_error("row width does not match columns");
  rows.push_back(std::move(row));
}

Format parse_format(const std::string& text) {
  if (text == "csv") return Format::csv;
  if (text == "json") return Format::json;
  throw ConfigError("format must be csv or json, got '" + text + "'");
}

namespace {

std::string csv_cell(const Cell& c) {
  if (auto* i = std::get_if<long long>(&c)) return std::to_string(*i);
  if (auto* d = std::get_if<double>(&c)) {
    if (std::isnan(*d)) return "nan";
    if (std::isinf(*d)) return *d > 0 ? "inf" : "-inf";
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.12g", *d);
    return buf;
  }
  const auto& s = std::get<std::string>(c);
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string q = "\"";
  for (char ch : s) {
    if (ch == '"') q += '"';
    q += ch;
  }
  return q + "\"";
}

std::string json_cell(const Cell& c) {
  if (auto* i = std::get_if<long long>(&c)) return std::to_string(*i);
  if (auto* d = std::get_if<double>(&c)) {
    if (!std::isfinite(*d)) return "null";
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", *d);
    return buf;
  }
  return nlohmann::json(std::get<std::string>(c)).dump();
}

std::string json_key(const std::string& k) { return nlohmann::json(k).dump(); }

}  // namespace

void write_csv(const Table& t, std::ostream& os) {
  for (const auto& [key, value] : t.meta) os << "# " << key << '=' << csv_cell(value) << '\n';
  for (std::size_t i = 0; i < t.columns.size(); ++i) os << (i ? "," : "") << t.columns[i];
  os << '\n';
  for (const auto& row : t.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) os << (i ? "," : "") << csv_cell(row[i]);
    os << '\n';
  }
}

void write_json(const Table& t, std::ostream& os) {
  os << "{\n  \"meta\": {";
  for (std::size_t i = 0; i < t.meta.size(); ++i) {
    os << (i ? "," : "") << "\n    " << json_key(t.meta[i].first) << ": "
       << json_cell(t.meta[i].second);
  }
  os << (t.meta.empty() ? "}" : "\n  }") << ",\n  \"rows\": [";
  for (std::size_t r = 0; r < t.rows.size(); ++r) {
    os << (r ? "," : "") << "\n    {";
    for (std::size_t i = 0; i < t.rows[r].size(); ++i) {
      os << (i ? ", " : "") << json_key(t.columns[i]) << ": " << json_cell(t.rows[r][i]);
    }
    os << "}";
  }
  os << (t.rows.empty() ? "]" : "\n  ]") << "\n}\n";
}

void write_table(const Table& t, Format f, std::ostream& os) {
  if (f == Format::csv) {
    write_csv(t, os);
  } else {
    write_json(t, os);
  }
}

}  // namespace kgbound::cli
