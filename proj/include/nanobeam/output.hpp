#pragma once

// Plot-ready tables written as CSV and JSON with a provenance header.

#include <cstdint>
#include <filesystem>
#include <string>
#include <variant>
#include <vector>

#include "json.hpp"

namespace nanobeam {

/// Scientific notation, 8 significant digits; NaN renders as "nan".
std::string format_number(double v);

/// Value of format_number(v) parsed back, so JSON and CSV carry identical numbers.
double rounded(double v);

using Cell = std::variant<double, std::int64_t, std::string>;

struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;

  void add_row(std::vector<Cell> row);
};

struct Provenance {
  std::string config_hash;  // FNV-1a 64 of the canonical config JSON, hex
  std::uint64_t seed = 0;
  std::string version;
  std::string command;
};

std::string fnv1a_hex(const std::string& text);
Provenance make_provenance(const nlohmann::json& config, std::uint64_t seed, std::string command);

enum class OutputFormat { Csv, Json, Both };
OutputFormat parse_format(const std::string& s);

std::string to_csv(const Table& t, const Provenance& p);
nlohmann::json to_json(const Table& t, const Provenance& p);

/// Writes <dir>/<stem>.csv and/or <dir>/<stem>.json; returns the paths written.
std::vector<std::filesystem::path> write_table(const std::filesystem::path& dir,
                                               const std::string& stem, const Table& t,
                                               const Provenance& p, OutputFormat fmt);

/// Minimal static SVG line plot of (x, y) series.
std::string svg_line_plot(const std::vector<double>& x, const std::vector<std::vector<double>>& ys,
                          const std::string& title, const std::string& x_label);

}  // namespace nanobeam
