#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "actkit/series.hpp"

namespace actkit {

// Normalized mean activity per intraday slot: A(s) = <V>_s / <V>. The
// count-weighted mean of A(s) over slots is 1 by construction.
struct IntradayPattern {
  std::string symbol;
  int slot_minutes = 0;
  std::vector<double> values;        // A(s)
  std::vector<std::int64_t> counts;  // bins contributing to each slot

  int slots() const { return static_cast<int>(values.size()); }
};

// Requires an intraday series spanning >= 2 sessions, slot_minutes dividing
// 390 and covering a whole number of bins. Zero-activity bins are included
// in the slot means; a zero global mean is an error.
IntradayPattern intraday_pattern(const ActivitySeries& series, int slot_minutes);

struct MarketPattern {
  int slot_minutes = 0;
  std::vector<double> mean;    // per-slot mean of A(s) across instruments
  std::vector<double> stddev;  // population std across instruments
  std::size_t instruments = 0;
};

// Slot-wise mean and standard deviation over instruments. All patterns must
// share the slot grid.
MarketPattern market_pattern(std::span<const IntradayPattern> patterns);

// Divides V(t) by A(s) at the bin's intraday position; N and Q unchanged.
// A(s) = 0 with nonzero V in the slot is an error; 0/0 stays 0. Multi-day
// series are rejected: the pattern is an intraday construct.
ActivitySeries deseasonalize(const ActivitySeries& series, const IntradayPattern& pattern);

}  // namespace actkit
