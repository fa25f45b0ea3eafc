#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace actkit {

// Regular US equity session, 09:30:00-16:00:00 exchange-local, 390 minutes.
inline constexpr int kSessionOpenSec = 9 * 3600 + 30 * 60;
inline constexpr int kSessionCloseSec = 16 * 3600;
inline constexpr int kSessionMinutes = 390;
inline constexpr int kSessionSeconds = kSessionMinutes * 60;

// Proleptic Gregorian day count relative to 1970-01-01.
std::int64_t days_from_civil(int year, int month, int day);
void civil_from_days(std::int64_t days, int& year, int& month, int& day);

// "YYYY-MM-DD" -> day count. Throws parse_error on malformed input.
std::int64_t parse_iso_date(std::string_view text);
std::string format_iso_date(std::int64_t days);

// "YYYY-MM-DD HH:MM:SS" (or 'T' separator) -> seconds since epoch, naive
// local time. Returns false on malformed input.
bool parse_iso_datetime(std::string_view text, std::int64_t& epoch_sec);
std::string format_iso_datetime(std::int64_t epoch_sec);

// Ordered set of trading-session dates.
class TradingCalendar {
public:
  // One ISO date per line; blank lines ignored.
  static TradingCalendar load(const std::string& path);
  // Dates must be strictly increasing.
  static TradingCalendar from_days(std::vector<std::int64_t> days);

  std::size_t size() const { return days_.size(); }
  std::int64_t day(std::size_t i) const { return days_[i]; }
  const std::vector<std::int64_t>& days() const { return days_; }

  // Session index of a date, or -1 when the date is not a session.
  std::ptrdiff_t index_of(std::int64_t day) const {
    auto it = index_.find(day);
    return it == index_.end() ? -1 : static_cast<std::ptrdiff_t>(it->second);
  }

private:
  std::vector<std::int64_t> days_;
  std::unordered_map<std::int64_t, std::size_t> index_;
};

}  // namespace actkit
