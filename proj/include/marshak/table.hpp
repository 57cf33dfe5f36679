// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

namespace marshak {

inline constexpr const char* kVersion = "0.1.0";

/// One table cell; numbers always print with round-trip precision.
struct Cell {
  enum class Kind { number, integer, text } kind = Kind::number;
  double num = 0.0;
  std::int64_t integer = 0;
  std::string text;

  static Cell of(double v) { return Cell{Kind::number, v, 0, {}}; }
  static Cell of(int v) { return Cell{Kind::integer, 0.0, v, {}}; }
  static Cell of(std::int64_t v) { return Cell{Kind::integer, 0.0, v, {}}; }
  static Cell of(std::string v) { return Cell{Kind::text, 0.0, 0, std::move(v)}; }
};

/// Column-labelled table with an ordered metadata header. Serialization is
/// deterministic: fixed column order, %.17g floats, no locale, no
/// timestamps unless the caller added one.
struct BenchmarkTable {
  std::vector<std::pair<std::string, std::string>> metadata;
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;

  void meta(std::string key, std::string value);
  void add_row(std::vector<Cell> row);
};

enum class TableFormat { csv, json };

/// %.17g formatting; parses back to the identical double.
std::string format_double(double v);

void write_csv(const BenchmarkTable& table, std::ostream& os);
void write_json(const BenchmarkTable& table, std::ostream& os);

/// Write to path ("-" = stdout) atomically: temp file in the target
/// directory, then rename.
void write_table(const BenchmarkTable& table, const std::string& path, TableFormat format);

}  // namespace marshak
