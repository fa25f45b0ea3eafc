#pragma once

#include <cstdint>
#include <fstream>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "actkit/series.hpp"

namespace actkit {

// Shortest decimal representation that round-trips the exact double, so
// artifacts are byte-stable across runs and platforms.
std::string format_double(double v);

// Deterministic CSV emission; one string cell optionally leads each row.
class CsvWriter {
public:
  explicit CsvWriter(const std::string& path);
  void header(std::span<const std::string_view> names);
  void row(std::span<const double> values);
  void row(std::string_view label, std::span<const double> values);
  void raw_row(std::span<const std::string_view> cells);
  void close();

private:
  std::ofstream out_;
  std::string path_;
  void put_line(const std::string& line);
};

// Per-instrument series CSVs (timestamp,V,N,Q) plus a series.json manifest
// (instrument, interval, day count, bin count) in `dir`.
void save_universe(const Universe& universe, const std::string& dir);
Universe load_universe(const std::string& dir);

}  // namespace actkit
