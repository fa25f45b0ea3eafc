#include "actkit/csv.hpp"

#include <charconv>
#include <filesystem>
#include <system_error>

#include <json.hpp>

#include "actkit/calendar.hpp"
#include "actkit/errors.hpp"

namespace fs = std::filesystem;
using json = nlohmann::json;

namespace actkit {

std::string format_double(double v) {
  char buf[32];
  auto [p, ec] = std::to_chars(buf, buf + sizeof buf, v);
  if (ec != std::errc()) return "nan";
  return std::string(buf, p);
}

CsvWriter::CsvWriter(const std::string& path) : out_(path, std::ios::binary), path_(path) {
  if (!out_) throw io_error("cannot open for writing: " + path);
}

void CsvWriter::put_line(const std::string& line) {
  out_ << line << '\n';
  if (!out_) throw io_error("write failed: " + path_);
}

void CsvWriter::header(std::span<const std::string_view> names) { raw_row(names); }

void CsvWriter::raw_row(std::span<const std::string_view> cells) {
  std::string line;
  for (std::size_t i = 0; i < cells.size(); ++i) {
    if (i) line += ',';
    line += cells[i];
  }
  put_line(line);
}

void CsvWriter::row(std::span<const double> values) {
  std::string line;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) line += ',';
    line += format_double(values[i]);
  }
  put_line(line);
}

void CsvWriter::row(std::string_view label, std::span<const double> values) {
  std::string line(label);
  for (double v : values) {
    line += ',';
    line += format_double(v);
  }
  put_line(line);
}

void CsvWriter::close() {
  out_.close();
  if (out_.fail()) throw io_error("close failed: " + path_);
}

void save_universe(const Universe& universe, const std::string& dir) {
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec) throw io_error("cannot create directory " + dir + ": " + ec.message());

  json manifest;
  manifest["instruments"] = json::array();
  std::string interval_label;
  for (const auto& [sym, series] : universe) {
    if (interval_label.empty())
      interval_label = series.interval.label();
    const std::string file = sym + ".csv";
    CsvWriter csv(dir + "/" + file);
    static constexpr std::string_view cols[] = {"timestamp", "V", "N", "Q"};
    csv.header(cols);
    for (std::size_t i = 0; i < series.bins.size(); ++i) {
      const auto& b = series.bins[i];
      std::string cells[4] = {format_iso_datetime(series.start[i]), format_double(b.value),
                              std::to_string(b.trades), std::to_string(b.shares)};
      std::string_view views[4] = {cells[0], cells[1], cells[2], cells[3]};
      csv.raw_row(views);
    }
    csv.close();
    manifest["instruments"].push_back({{"symbol", sym},
                                       {"interval", series.interval.label()},
                                       {"trading_days", series.trading_days},
                                       {"bins", series.bins.size()},
                                       {"file", file}});
  }
  manifest["interval"] = interval_label;
  std::ofstream out(dir + "/series.json", std::ios::binary);
  if (!out) throw io_error("cannot open for writing: " + dir + "/series.json");
  out << manifest.dump(2) << '\n';
  if (!out) throw io_error("write failed: " + dir + "/series.json");
}

namespace {

double parse_csv_double(std::string_view s, const std::string& where) {
  double v;
  auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || p != s.data() + s.size())
    throw parse_error(where + ": bad numeric field '" + std::string(s) + "'");
  return v;
}

std::int64_t parse_csv_int(std::string_view s, const std::string& where) {
  std::int64_t v;
  auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || p != s.data() + s.size())
    throw parse_error(where + ": bad integer field '" + std::string(s) + "'");
  return v;
}

}  // namespace

Universe load_universe(const std::string& dir) {
  std::ifstream in(dir + "/series.json");
  if (!in) throw io_error("cannot open " + dir + "/series.json");
  json manifest = json::parse(in, nullptr, true);

  Universe universe;
  for (const auto& entry : manifest.at("instruments")) {
    ActivitySeries series;
    series.symbol = entry.at("symbol").get<std::string>();
    series.interval = SamplingInterval::parse(entry.at("interval").get<std::string>());
    series.trading_days = entry.at("trading_days").get<int>();
    const std::string path = dir + "/" + entry.at("file").get<std::string>();

    std::ifstream csv(path);
    if (!csv) throw io_error("cannot open " + path);
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(csv, line)) {
      ++lineno;
      if (!line.empty() && line.back() == '\r') line.pop_back();
      if (line.empty() || lineno == 1) continue;  // header
      const std::string where = path + ":" + std::to_string(lineno);
      std::string_view text(line);
      std::string_view cells[4];
      std::size_t pos = 0;
      for (int c = 0; c < 4; ++c) {
        std::size_t comma = text.find(',', pos);
        if (comma == std::string_view::npos) {
          if (c != 3) throw parse_error(where + ": expected 4 columns");
          comma = text.size();
        }
        cells[c] = text.substr(pos, comma - pos);
        pos = comma + 1;
      }
      std::int64_t t;
      if (!parse_iso_datetime(cells[0], t))
        throw parse_error(where + ": bad timestamp '" + std::string(cells[0]) + "'");
      ActivityBin bin;
      bin.value = parse_csv_double(cells[1], where);
      bin.trades = parse_csv_int(cells[2], where);
      bin.shares = parse_csv_int(cells[3], where);
      series.start.push_back(t);
      series.bins.push_back(bin);
    }
    const std::size_t expected = entry.at("bins").get<std::size_t>();
    if (series.bins.size() != expected)
      throw parse_error(path + ": expected " + std::to_string(expected) + " bins, found " +
                        std::to_string(series.bins.size()));
    universe.emplace(series.symbol, std::move(series));
  }
  return universe;
}

}  // namespace actkit
