#pragma once

#include <span>
#include <string>
#include <utility>
#include <vector>

#include "actkit/calendar.hpp"
#include "actkit/series.hpp"
#include "actkit/trades.hpp"

namespace actkit {

// Bins the trades of one instrument onto the calendar grid. Trades must be
// sorted by time and every trade date must be a calendar session. Empty bins
// are materialized with zeros. For multi-day intervals the calendar is cut
// into consecutive groups from the start; a trailing partial group is dropped
// together with any trades falling into it.
ActivitySeries aggregate_instrument(std::span<const TradeRecord> trades,
                                    SamplingInterval interval,
                                    const TradingCalendar& calendar,
                                    std::string symbol);

// Groups trades by symbol (input order is irrelevant; records are sorted by
// time per instrument) and aggregates instruments concurrently.
Universe aggregate_universe(std::span<const TradeRecord> trades,
                            SamplingInterval interval,
                            const TradingCalendar& calendar, int threads = 0);

struct ExclusionReport {
  std::vector<std::pair<std::string, int>> excluded;  // symbol, trading days
};

// Keeps instruments with trading_days >= min_days. Idempotent.
Universe filter_universe(const Universe& universe, int min_days,
                         ExclusionReport* report = nullptr);

struct InstrumentAverages {
  std::string symbol;
  double mean_value = 0.0;   // <V>
  double mean_trades = 0.0;  // <N>
  double mean_shares = 0.0;  // <Q>
};

struct CrossMeasureReport {
  std::vector<InstrumentAverages> instruments;  // entries used in the fits
  std::vector<std::string> excluded;            // instruments with <V> = 0
  double pearson_log_nv = 0.0;
  double pearson_log_qv = 0.0;
  double exponent_nv = 0.0;  // slope of log<N> vs log<V>
  double exponent_qv = 0.0;  // slope of log<Q> vs log<V>
  double stderr_nv = 0.0;
  double stderr_qv = 0.0;
};

// Cross-measure relations on a 1-day universe: per-instrument averages over
// all bins, correlations and power-law slopes in log-log coordinates.
// Requires >= 3 instruments with <V> > 0 and non-degenerate spread.
CrossMeasureReport cross_measure_report(const Universe& daily);

}  // namespace actkit
