#include "actkit/calendar.hpp"

#include <algorithm>
#include <charconv>
#include <cstdio>
#include <fstream>

#include "actkit/errors.hpp"

namespace actkit {

// Howard Hinnant's public-domain civil date algorithms.
std::int64_t days_from_civil(int y, int m, int d) {
  y -= m <= 2;
  const std::int64_t era = (y >= 0 ? y : y - 399) / 400;
  const unsigned yoe = static_cast<unsigned>(y - era * 400);
  const unsigned doy = (153u * (m + (m > 2 ? -3 : 9)) + 2) / 5 + d - 1;
  const unsigned doe = yoe * 365 + yoe / 4 - yoe / 100 + doy;
  return era * 146097 + static_cast<std::int64_t>(doe) - 719468;
}

void civil_from_days(std::int64_t z, int& y, int& m, int& d) {
  z += 719468;
  const std::int64_t era = (z >= 0 ? z : z - 146096) / 146097;
  const unsigned doe = static_cast<unsigned>(z - era * 146097);
  const unsigned yoe = (doe - doe / 1460 + doe / 36524 - doe / 146096) / 365;
  const std::int64_t yr = static_cast<std::int64_t>(yoe) + era * 400;
  const unsigned doy = doe - (365 * yoe + yoe / 4 - yoe / 100);
  const unsigned mp = (5 * doy + 2) / 153;
  d = static_cast<int>(doy - (153 * mp + 2) / 5 + 1);
  m = static_cast<int>(mp + (mp < 10 ? 3 : -9));
  y = static_cast<int>(yr + (m <= 2));
}

namespace {

bool parse_uint(std::string_view s, int& out) {
  auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
  return ec == std::errc() && p == s.data() + s.size();
}

bool parse_date_fields(std::string_view s, std::int64_t& days) {
  if (s.size() != 10 || s[4] != '-' || s[7] != '-') return false;
  int y, m, d;
  if (!parse_uint(s.substr(0, 4), y) || !parse_uint(s.substr(5, 2), m) ||
      !parse_uint(s.substr(8, 2), d))
    return false;
  if (m < 1 || m > 12 || d < 1 || d > 31) return false;
  days = days_from_civil(y, m, d);
  return true;
}

}  // namespace

std::int64_t parse_iso_date(std::string_view text) {
  std::int64_t days;
  if (!parse_date_fields(text, days))
    throw parse_error("invalid ISO date: '" + std::string(text) + "'");
  return days;
}

std::string format_iso_date(std::int64_t days) {
  int y, m, d;
  civil_from_days(days, y, m, d);
  char buf[16];
  std::snprintf(buf, sizeof buf, "%04d-%02d-%02d", y, m, d);
  return buf;
}

bool parse_iso_datetime(std::string_view text, std::int64_t& epoch_sec) {
  if (text.size() != 19) return false;
  if (text[10] != ' ' && text[10] != 'T') return false;
  if (text[13] != ':' || text[16] != ':') return false;
  std::int64_t days;
  if (!parse_date_fields(text.substr(0, 10), days)) return false;
  int hh, mm, ss;
  if (!parse_uint(text.substr(11, 2), hh) || !parse_uint(text.substr(14, 2), mm) ||
      !parse_uint(text.substr(17, 2), ss))
    return false;
  if (hh > 23 || mm > 59 || ss > 60) return false;
  epoch_sec = days * 86400 + hh * 3600 + mm * 60 + ss;
  return true;
}

std::string format_iso_datetime(std::int64_t epoch_sec) {
  std::int64_t days = epoch_sec / 86400;
  int sec = static_cast<int>(epoch_sec - days * 86400);
  if (sec < 0) {
    sec += 86400;
    --days;
  }
  int y, m, d;
  civil_from_days(days, y, m, d);
  char buf[24];
  std::snprintf(buf, sizeof buf, "%04d-%02d-%02d %02d:%02d:%02d", y, m, d,
                sec / 3600, (sec / 60) % 60, sec % 60);
  return buf;
}

TradingCalendar TradingCalendar::load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw io_error("cannot open calendar file: " + path);
  std::vector<std::int64_t> days;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    std::int64_t d;
    if (!parse_date_fields(line, d))
      throw parse_error(path + ":" + std::to_string(lineno) +
                        ": invalid calendar date '" + line + "'");
    days.push_back(d);
  }
  return from_days(std::move(days));
}

TradingCalendar TradingCalendar::from_days(std::vector<std::int64_t> days) {
  if (std::adjacent_find(days.begin(), days.end(),
                         [](auto a, auto b) { return a >= b; }) != days.end())
    throw std::invalid_argument("calendar dates must be strictly increasing");
  TradingCalendar cal;
  cal.days_ = std::move(days);
  cal.index_.reserve(cal.days_.size());
  for (std::size_t i = 0; i < cal.days_.size(); ++i) cal.index_[cal.days_[i]] = i;
  return cal;
}

}  // namespace actkit
