#pragma once

#include <ostream>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace kgbound::cli {

using Cell = std::variant<long long, double, std::string>;

/// Column-ordered result table with metadata.
struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;
  std::vector<std::pair<std::string, Cell>> meta;

  void add_row(std::vector<Cell> row);
};

enum class Format { csv, json };
Format parse_format(const std::string& text);

/// CSV: '#' metadata lines, header row, 12 significant digits.
void write_csv(const Table& t, std::ostream& os);
/// JSON: {"meta": {...}, "rows": [{...}, ...]}, 17 significant digits, null for non-finite.
void write_json(const Table& t, std::ostream& os);
void write_table(const Table& t, Format f, std::ostream& os);

}  // namespace kgbound::cli
