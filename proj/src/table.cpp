// SPDX-License-Identifier: Apache-2.0
#include "marshak/table.hpp"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <ostream>
#include <stdexcept>

#include <json.hpp>

namespace marshak {

void BenchmarkTable::meta(std::string key, std::string value) {
  metadata.emplace_back(std::move(key), std::move(value));
}

void BenchmarkTable::add_row(std::vector<Cell> row) {
  if (row.size() != columns.size()) {
    throw std::invalid_argument("BenchmarkTable: row width does not match columns");
  }
  rows.push_back(std::move(row));
}

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

namespace {

std::string cell_text(const Cell& c) {
  switch (c.kind) {
    case Cell::Kind::number:
      return format_double(c.num);
    case Cell::Kind::integer:
      return std::to_string(c.integer);
    case Cell::Kind::text:
      return c.text;
  }
  return {};
}

}  // namespace

void write_csv(const BenchmarkTable& table, std::ostream& os) {
  for (const auto& [key, value] : table.metadata) {
    os << "# " << key << " = " << value << "\n";
  }
  for (size_t i = 0; i < table.columns.size(); ++i) {
    os << (i ? "," : "") << table.columns[i];
  }
  os << "\n";
  for (const auto& row : table.rows) {
    for (size_t i = 0; i < row.size(); ++i) {
      os << (i ? "," : "") << cell_text(row[i]);
    }
    os << "\n";
  }
}

void write_json(const BenchmarkTable& table, std::ostream& os) {
  nlohmann::ordered_json doc;
  nlohmann::ordered_json meta = nlohmann::ordered_json::object();
  for (const auto& [key, value] : table.metadata) meta[key] = value;
  doc["metadata"] = std::move(meta);
  doc["rows"] = nlohmann::ordered_json::array();
  for (const auto& row : table.rows) {
    nlohmann::ordered_json obj = nlohmann::ordered_json::object();
    for (size_t i = 0; i < row.size(); ++i) {
      switch (row[i].kind) {
        case Cell::Kind::number:
          obj[table.columns[i]] = row[i].num;
          break;
        case Cell::Kind::integer:
          obj[table.columns[i]] = row[i].integer;
          break;
        case Cell::Kind::text:
          obj[table.columns[i]] = row[i].text;
          break;
      }
    }
    doc["rows"].push_back(std::move(obj));
  }
  os << doc.dump(2) << "\n";
}

void write_table(const BenchmarkTable& table, const std::string& path, TableFormat format) {
  if (path == "-") {
    if (format == TableFormat::csv) {
      write_csv(table, std::cout);
    } else {
      write_json(table, std::cout);
    }
    std::cout.flush();
    return;
  }

  namespace fs = std::filesystem;
  const fs::path target(path);
  fs::path tmp = target;
  tmp += ".tmp";
  {
    std::ofstream os(tmp, std::ios::binary | std::ios::trunc);
    if (!os) throw std::runtime_error("write_table: cannot open " + tmp.string());
    if (format == TableFormat::csv) {
      write_csv(table, os);
    } else {
      write_json(table, os);
    }
    os.flush();
    if (!os) throw std::runtime_error("write_table: write failed for " + tmp.string());
  }
  fs::rename(tmp, target);
}

}  // namespace marshak
