#include "actkit/pattern.hpp"

#include <stdexcept>

#include "actkit/stats.hpp"

namespace actkit {

namespace {

int slot_of_bin(const ActivitySeries& series, std::size_t bin_index, int slot_minutes) {
  const int per_day = series.interval.bins_per_session();
  const int pos = static_cast<int>(bin_index % static_cast<std::size_t>(per_day));
  return (pos * series.interval.length) / slot_minutes;
}

void check_slot_compat(const ActivitySeries& series, int slot_minutes) {
  if (!series.interval.is_intraday())
    throw std::invalid_argument("pattern: series must be intraday, got " +
                                series.interval.label());
  if (slot_minutes < 1 || kSessionMinutes % slot_minutes != 0)
    throw std::invalid_argument("pattern: slot length must divide 390 minutes, got " +
                                std::to_string(slot_minutes));
  if (slot_minutes % series.interval.length != 0)
    throw std::invalid_argument("pattern: slot of " + std::to_string(slot_minutes) +
                                " min must cover whole " + series.interval.label() + " bins");
}

}  // namespace

IntradayPattern intraday_pattern(const ActivitySeries& series, int slot_minutes) {
  check_slot_compat(series, slot_minutes);
  const int per_day = series.interval.bins_per_session();
  if (series.bins.size() < 2 * static_cast<std::size_t>(per_day))
    throw std::invalid_argument("pattern: series must span >= 2 sessions");

  const int n_slots = kSessionMinutes / slot_minutes;
  std::vector<CompensatedSum> slot_sum(n_slots);
  IntradayPattern pattern;
  pattern.symbol = series.symbol;
  pattern.slot_minutes = slot_minutes;
  pattern.counts.assign(n_slots, 0);

  CompensatedSum total;
  for (std::size_t i = 0; i < series.bins.size(); ++i) {
    const int s = slot_of_bin(series, i, slot_minutes);
    slot_sum[s].add(series.bins[i].value);
    pattern.counts[s] += 1;
    total.add(series.bins[i].value);
  }
  const double global_mean = total.value() / static_cast<double>(series.bins.size());
  if (global_mean <= 0.0)
    throw std::runtime_error("pattern: zero mean activity, pattern undefined (symbol " +
                             series.symbol + ")");

  pattern.values.resize(n_slots);
  for (int s = 0; s < n_slots; ++s) {
    const double slot_mean =
        pattern.counts[s] > 0 ? slot_sum[s].value() / static_cast<double>(pattern.counts[s]) : 0.0;
    pattern.values[s] = slot_mean / global_mean;
  }
  return pattern;
}

MarketPattern market_pattern(std::span<const IntradayPattern> patterns) {
  if (patterns.empty()) throw std::invalid_argument("market_pattern: no patterns");
  const int slot_minutes = patterns[0].slot_minutes;
  const int n_slots = patterns[0].slots();
  for (const auto& p : patterns)
    if (p.slot_minutes != slot_minutes || p.slots() != n_slots)
      throw std::invalid_argument("market_pattern: mismatched slot grids (" +
                                  std::to_string(slot_minutes) + "m vs " +
                                  std::to_string(p.slot_minutes) + "m)");

  MarketPattern market;
  market.slot_minutes = slot_minutes;
  market.instruments = patterns.size();
  market.mean.resize(n_slots);
  market.stddev.resize(n_slots);
  std::vector<double> column(patterns.size());
  for (int s = 0; s < n_slots; ++s) {
    for (std::size_t i = 0; i < patterns.size(); ++i) column[i] = patterns[i].values[s];
    market.mean[s] = mean(column);
    market.stddev[s] = patterns.size() > 1 ? stddev_pop(column) : 0.0;
  }
  return market;
}

ActivitySeries deseasonalize(const ActivitySeries& series, const IntradayPattern& pattern) {
  check_slot_compat(series, pattern.slot_minutes);
  if (pattern.slots() != kSessionMinutes / pattern.slot_minutes)
    throw std::invalid_argument("deseasonalize: pattern has wrong slot count");

  ActivitySeries adjusted = series;
  for (std::size_t i = 0; i < adjusted.bins.size(); ++i) {
    const int s = slot_of_bin(series, i, pattern.slot_minutes);
    const double a = pattern.values[s];
    double& v = adjusted.bins[i].value;
    if (a == 0.0) {
      if (v != 0.0)
        throw std::runtime_error("deseasonalize: A(s) = 0 at slot " + std::to_string(s) +
                                 " with nonzero activity (symbol " + series.symbol + ")");
      // 0/0 stays 0
    } else {
      v /= a;
    }
  }
  return adjusted;
}

}  // namespace actkit
