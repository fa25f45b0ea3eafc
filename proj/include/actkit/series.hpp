#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "actkit/calendar.hpp"

namespace actkit {

// Bin width used to aggregate trades. Intraday lengths must divide the
// 390-minute session; multi-day lengths count whole sessions.
struct SamplingInterval {
  enum class Kind { intraday, multiday };

  Kind kind = Kind::intraday;
  int length = 5;  // minutes (intraday) or sessions (multiday)

  static SamplingInterval intraday(int minutes);
  static SamplingInterval multiday(int days);
  // "5m", "30m", "1d", "5d", "20d", generally "<n>m" / "<n>d".
  static SamplingInterval parse(std::string_view spec);

  std::string label() const;
  bool is_intraday() const { return kind == Kind::intraday; }
  int bins_per_session() const { return kSessionMinutes / length; }
  // Span expressed in trading minutes (1d = 390).
  double minutes() const {
    return is_intraday() ? length : static_cast<double>(length) * kSessionMinutes;
  }

  auto operator<=>(const SamplingInterval&) const = default;
};

struct ActivityBin {
  double value = 0.0;        // V, sum of price * shares
  std::int64_t trades = 0;   // N
  std::int64_t shares = 0;   // Q
};

struct ActivitySeries {
  std::string symbol;
  SamplingInterval interval;
  std::vector<std::int64_t> start;  // bin start, epoch seconds, strictly increasing
  std::vector<ActivityBin> bins;
  int trading_days = 0;  // distinct session dates with >= 1 trade

  std::size_t size() const { return bins.size(); }
  std::vector<double> values() const;
};

// Instruments keyed by symbol; ordered so that iteration is deterministic.
using Universe = std::map<std::string, ActivitySeries>;

}  // namespace actkit
