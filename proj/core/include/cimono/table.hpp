#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace cimono {

/// One output cell: empty (rendered as blank / null), bool, integer, double
/// (17 significant digits, round-trip safe) or string.
using Cell = std::variant<std::monostate, bool, std::int64_t, double, std::string>;

/// Row-oriented table with a fixed column set; every subcommand of the CLI
/// emits exactly one of these.
struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;

  explicit Table(std::vector<std::string> cols) : columns(std::move(cols)) {}
  void add_row(std::vector<Cell> row);
};

enum class OutputFormat { csv, json };

/// Parse "csv" / "json"; throws std::domain_error otherwise.
OutputFormat parse_format(std::string_view name);

/// %.17g rendering: enough digits that parsing the text recovers the bits.
std::string format_double(double v);

/// RFC-4180-style CSV: header row, comma separated, strings quoted (and
/// embedded quotes doubled) when they contain a comma, quote or newline.
std::string render_csv(const Table& table);

/// JSON array of flat objects keyed by column name.
std::string render_json(const Table& table);

std::string render(const Table& table, OutputFormat format);

}  // namespace cimono
