#include "actkit/ingest.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <unordered_set>

#include "actkit/parallel.hpp"
#include "actkit/stats.hpp"

namespace actkit {

namespace {

// Bin start timestamps for the full calendar grid.
std::vector<std::int64_t> grid_starts(SamplingInterval iv, const TradingCalendar& cal) {
  std::vector<std::int64_t> starts;
  if (iv.is_intraday()) {
    const int per_day = iv.bins_per_session();
    starts.reserve(cal.size() * static_cast<std::size_t>(per_day));
    for (std::size_t s = 0; s < cal.size(); ++s) {
      const std::int64_t open = cal.day(s) * 86400 + kSessionOpenSec;
      for (int b = 0; b < per_day; ++b)
        starts.push_back(open + static_cast<std::int64_t>(b) * iv.length * 60);
    }
  } else {
    const std::size_t groups = cal.size() / static_cast<std::size_t>(iv.length);
    starts.reserve(groups);
    for (std::size_t g = 0; g < groups; ++g)
      starts.push_back(cal.day(g * static_cast<std::size_t>(iv.length)) * 86400 +
                       kSessionOpenSec);
  }
  return starts;
}

}  // namespace

ActivitySeries aggregate_instrument(std::span<const TradeRecord> trades,
                                    SamplingInterval interval,
                                    const TradingCalendar& calendar,
                                    std::string symbol) {
  if (calendar.size() == 0) throw std::invalid_argument("aggregate: empty calendar");

  ActivitySeries series;
  series.symbol = std::move(symbol);
  series.interval = interval;
  series.start = grid_starts(interval, calendar);
  series.bins.assign(series.start.size(), ActivityBin{});

  // V accumulated compensated per bin, collapsed to double at the end.
  std::vector<CompensatedSum> value(series.bins.size());

  const int per_day = interval.is_intraday() ? interval.bins_per_session() : 0;
  const std::size_t day_groups =
      interval.is_intraday() ? 0 : calendar.size() / static_cast<std::size_t>(interval.length);

  std::unordered_set<std::int64_t> traded_days;
  for (const auto& t : trades) {
    const std::int64_t day = t.time >= 0 ? t.time / 86400 : (t.time - 86399) / 86400;
    const std::ptrdiff_t session = calendar.index_of(day);
    if (session < 0)
      throw std::runtime_error("trade on " + format_iso_date(day) +
                               " which is not a calendar session (symbol " +
                               series.symbol + ")");
    traded_days.insert(day);

    std::size_t bin;
    if (interval.is_intraday()) {
      const int rel = static_cast<int>(t.time - day * 86400) - kSessionOpenSec;
      int slot = rel / (interval.length * 60);
      if (slot >= per_day) slot = per_day - 1;  // the 16:00:00 print
      bin = static_cast<std::size_t>(session) * static_cast<std::size_t>(per_day) +
            static_cast<std::size_t>(slot);
    } else {
      const std::size_t group =
          static_cast<std::size_t>(session) / static_cast<std::size_t>(interval.length);
      if (group >= day_groups) continue;  // trailing partial group
      bin = group;
    }
    value[bin].add(t.price * static_cast<double>(t.shares));
    series.bins[bin].trades += 1;
    series.bins[bin].shares += t.shares;
  }
  for (std::size_t i = 0; i < series.bins.size(); ++i)
    series.bins[i].value = value[i].value();
  series.trading_days = static_cast<int>(traded_days.size());
  return series;
}

Universe aggregate_universe(std::span<const TradeRecord> trades,
                            SamplingInterval interval,
                            const TradingCalendar& calendar, int threads) {
  std::map<std::string, std::vector<TradeRecord>> by_symbol;
  for (const auto& t : trades) by_symbol[t.symbol].push_back(t);

  std::vector<std::pair<const std::string*, std::vector<TradeRecord>*>> work;
  work.reserve(by_symbol.size());
  for (auto& [sym, recs] : by_symbol) work.emplace_back(&sym, &recs);

  std::vector<ActivitySeries> results(work.size());
  parallel_for(work.size(), threads, [&](std::size_t i) {
    auto& recs = *work[i].second;
    std::stable_sort(recs.begin(), recs.end(),
                     [](const TradeRecord& a, const TradeRecord& b) { return a.time < b.time; });
    results[i] = aggregate_instrument(recs, interval, calendar, *work[i].first);
  });

  Universe universe;
  for (auto& s : results) {
    std::string key = s.symbol;
    universe.emplace(std::move(key), std::move(s));
  }
  return universe;
}

Universe filter_universe(const Universe& universe, int min_days,
                         ExclusionReport* report) {
  if (min_days < 1) throw std::invalid_argument("filter_universe: min_days must be >= 1");
  Universe kept;
  for (const auto& [sym, series] : universe) {
    if (series.trading_days >= min_days)
      kept.emplace(sym, series);
    else if (report)
      report->excluded.emplace_back(sym, series.trading_days);
  }
  return kept;
}

CrossMeasureReport cross_measure_report(const Universe& daily) {
  CrossMeasureReport report;
  std::vector<double> log_v, log_n, log_q;
  for (const auto& [sym, series] : daily) {
    if (series.bins.empty()) {
      report.excluded.push_back(sym);
      continue;
    }
    const double n = static_cast<double>(series.bins.size());
    CompensatedSum sv;
    std::int64_t sn = 0, sq = 0;
    for (const auto& b : series.bins) {
      sv.add(b.value);
      sn += b.trades;
      sq += b.shares;
    }
    InstrumentAverages avg;
    avg.symbol = sym;
    avg.mean_value = sv.value() / n;
    avg.mean_trades = static_cast<double>(sn) / n;
    avg.mean_shares = static_cast<double>(sq) / n;
    if (avg.mean_value <= 0.0) {
      report.excluded.push_back(sym);
      continue;
    }
    report.instruments.push_back(avg);
    log_v.push_back(std::log(avg.mean_value));
    log_n.push_back(std::log(avg.mean_trades));
    log_q.push_back(std::log(avg.mean_shares));
  }

  if (report.instruments.size() < 3)
    throw std::runtime_error("cross_measure_report: need >= 3 instruments with <V> > 0, have " +
                             std::to_string(report.instruments.size()));

  report.pearson_log_nv = pearson(log_n, log_v);
  report.pearson_log_qv = pearson(log_q, log_v);
  const LineFit nv = fit_line(log_v, log_n);
  const LineFit qv = fit_line(log_v, log_q);
  report.exponent_nv = nv.slope;
  report.exponent_qv = qv.slope;
  report.stderr_nv = nv.slope_stderr;
  report.stderr_qv = qv.slope_stderr;
  return report;
}

}  // namespace actkit
