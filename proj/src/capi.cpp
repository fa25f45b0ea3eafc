#include "actkit/actkit.h"

#include <cstring>
#include <memory>
#include <string>
#include <vector>

#include "actkit/calendar.hpp"
#include "actkit/csv.hpp"
#include "actkit/dfa.hpp"
#include "actkit/distribution.hpp"
#include "actkit/errors.hpp"
#include "actkit/growth.hpp"
#include "actkit/ingest.hpp"
#include "actkit/pattern.hpp"
#include "actkit/series.hpp"
#include "actkit/stats.hpp"
#include "actkit/surrogate.hpp"
#include "actkit/trades.hpp"

using namespace actkit;

namespace {

thread_local std::string g_last_error;

void set_error(std::string msg) { g_last_error = std::move(msg); }

actk_status translate(const std::exception& e) {
  set_error(e.what());
  if (dynamic_cast<const io_error*>(&e)) return ACTK_EIO;
  if (dynamic_cast<const parse_error*>(&e)) return ACTK_EPARSE;
  if (dynamic_cast<const std::invalid_argument*>(&e)) return ACTK_EINVAL;
  return ACTK_EFAIL;
}

template <typename Fn>
actk_status guarded(Fn&& fn) {
  try {
    fn();
    return ACTK_OK;
  } catch (const std::exception& e) {
    return translate(e);
  } catch (...) {
    set_error("unknown error");
    return ACTK_EFAIL;
  }
}

actk_status null_arg(const char* what) {
  set_error(std::string("null argument: ") + what);
  return ACTK_EINVAL;
}

}  // namespace

struct actk_calendar {
  TradingCalendar cal;
};
struct actk_trades {
  std::vector<TradeRecord> records;
  TradeParseStats stats;
};
struct actk_universe {
  Universe universe;
  std::vector<const std::string*> symbols;  // sorted, backed by the map keys

  void index() {
    symbols.clear();
    symbols.reserve(universe.size());
    for (const auto& [sym, s] : universe) symbols.push_back(&sym);
  }
  const ActivitySeries* find(const char* symbol) const {
    auto it = universe.find(symbol);
    return it == universe.end() ? nullptr : &it->second;
  }
};
struct actk_patterns {
  std::vector<IntradayPattern> patterns;  // sorted by symbol
};
struct actk_growth {
  GrowthObservations obs;
};
struct actk_binned {
  BinnedStat stat;
};
struct actk_dfa {
  DfaResult result;
};
struct actk_cross_section {
  HurstCrossSection cross;
};
struct actk_size_relation {
  HurstSizeRelation rel;
};
struct actk_relation {
  RelationExperiment experiment;
};
struct actk_csv {
  CsvWriter writer;
};

extern "C" {

const char* actk_version(void) { return "0.1.0"; }

const char* actk_last_error(void) { return g_last_error.c_str(); }

void actk_buffer_free(double* buffer) { delete[] buffer; }

/* calendar */

actk_status actk_calendar_load(const char* path, actk_calendar** out) {
  if (!path || !out) return null_arg("actk_calendar_load");
  return guarded([&] { *out = new actk_calendar{TradingCalendar::load(path)}; });
}

size_t actk_calendar_size(const actk_calendar* cal) { return cal ? cal->cal.size() : 0; }

void actk_calendar_free(actk_calendar* cal) { delete cal; }

/* trades */

actk_status actk_trades_load(const char* const* paths, size_t n_paths, char delimiter,
                             int session_policy, actk_trades** out) {
  if (!paths || !out) return null_arg("actk_trades_load");
  return guarded([&] {
    TradeParseOptions opt;
    opt.delimiter = delimiter ? delimiter : ',';
    opt.session_policy = session_policy == ACTK_SESSION_REJECT_FILE
                             ? SessionPolicy::reject_file
                             : SessionPolicy::drop_row;
    auto trades = std::make_unique<actk_trades>();
    for (size_t i = 0; i < n_paths; ++i)
      trades->stats += parse_trades(paths[i], opt, trades->records);
    *out = trades.release();
  });
}

size_t actk_trades_count(const actk_trades* trades) {
  return trades ? trades->records.size() : 0;
}

void actk_trades_stats(const actk_trades* trades, actk_trade_stats* out) {
  if (!trades || !out) return;
  out->rows = trades->stats.rows;
  out->parsed = trades->stats.parsed;
  out->malformed = trades->stats.malformed;
  out->out_of_session = trades->stats.out_of_session;
}

void actk_trades_free(actk_trades* trades) { delete trades; }

/* universe */

actk_status actk_aggregate(const actk_trades* trades, const actk_calendar* cal,
                           const char* interval, int threads, actk_universe** out) {
  if (!trades || !cal || !interval || !out) return null_arg("actk_aggregate");
  return guarded([&] {
    auto u = std::make_unique<actk_universe>();
    u->universe = aggregate_universe(trades->records, SamplingInterval::parse(interval),
                                     cal->cal, threads);
    u->index();
    *out = u.release();
  });
}

actk_status actk_universe_filter(const actk_universe* universe, int min_days,
                                 actk_universe** out) {
  if (!universe || !out) return null_arg("actk_universe_filter");
  return guarded([&] {
    auto u = std::make_unique<actk_universe>();
    u->universe = filter_universe(universe->universe, min_days);
    u->index();
    *out = u.release();
  });
}

size_t actk_universe_size(const actk_universe* universe) {
  return universe ? universe->universe.size() : 0;
}

const char* actk_universe_symbol(const actk_universe* universe, size_t index) {
  if (!universe || index >= universe->symbols.size()) return nullptr;
  return universe->symbols[index]->c_str();
}

actk_status actk_universe_day_count(const actk_universe* universe, const char* symbol,
                                    int* out) {
  if (!universe || !symbol || !out) return null_arg("actk_universe_day_count");
  const ActivitySeries* s = universe->find(symbol);
  if (!s) {
    set_error(std::string("unknown symbol: ") + symbol);
    return ACTK_EINVAL;
  }
  *out = s->trading_days;
  return ACTK_OK;
}

actk_status actk_universe_bin_count(const actk_universe* universe, const char* symbol,
                                    size_t* out) {
  if (!universe || !symbol || !out) return null_arg("actk_universe_bin_count");
  const ActivitySeries* s = universe->find(symbol);
  if (!s) {
    set_error(std::string("unknown symbol: ") + symbol);
    return ACTK_EINVAL;
  }
  *out = s->bins.size();
  return ACTK_OK;
}

actk_status actk_universe_values(const actk_universe* universe, const char* symbol,
                                 double* out, size_t cap, size_t* n) {
  if (!universe || !symbol || !out || !n) return null_arg("actk_universe_values");
  const ActivitySeries* s = universe->find(symbol);
  if (!s) {
    set_error(std::string("unknown symbol: ") + symbol);
    return ACTK_EINVAL;
  }
  if (cap < s->bins.size()) {
    set_error("buffer too small");
    return ACTK_EINVAL;
  }
  for (std::size_t i = 0; i < s->bins.size(); ++i) out[i] = s->bins[i].value;
  *n = s->bins.size();
  return ACTK_OK;
}

actk_status actk_universe_means(const actk_universe* universe, const char* symbol,
                                double* mean_v, double* mean_n, double* mean_q) {
  if (!universe || !symbol) return null_arg("actk_universe_means");
  const ActivitySeries* s = universe->find(symbol);
  if (!s) {
    set_error(std::string("unknown symbol: ") + symbol);
    return ACTK_EINVAL;
  }
  if (s->bins.empty()) {
    set_error(std::string("empty series: ") + symbol);
    return ACTK_EFAIL;
  }
  CompensatedSum sv;
  std::int64_t sn = 0, sq = 0;
  for (const auto& b : s->bins) {
    sv.add(b.value);
    sn += b.trades;
    sq += b.shares;
  }
  const double count = static_cast<double>(s->bins.size());
  if (mean_v) *mean_v = sv.value() / count;
  if (mean_n) *mean_n = static_cast<double>(sn) / count;
  if (mean_q) *mean_q = static_cast<double>(sq) / count;
  return ACTK_OK;
}

actk_status actk_universe_pool(const actk_universe* universe, double** out, size_t* n,
                               size_t* zeros) {
  if (!universe || !out || !n) return null_arg("actk_universe_pool");
  return guarded([&] {
    std::size_t z = 0;
    std::vector<double> pooled = pooled_positive_values(universe->universe, &z);
    auto* buf = new double[pooled.size()];
    std::memcpy(buf, pooled.data(), pooled.size() * sizeof(double));
    *out = buf;
    *n = pooled.size();
    if (zeros) *zeros = z;
  });
}

actk_status actk_universe_save(const actk_universe* universe, const char* dir) {
  if (!universe || !dir) return null_arg("actk_universe_save");
  return guarded([&] { save_universe(universe->universe, dir); });
}

actk_status actk_universe_load(const char* dir, actk_universe** out) {
  if (!dir || !out) return null_arg("actk_universe_load");
  return guarded([&] {
    auto u = std::make_unique<actk_universe>();
    u->universe = load_universe(dir);
    u->index();
    *out = u.release();
  });
}

void actk_universe_free(actk_universe* universe) { delete universe; }

actk_status actk_cross_measure_report(const actk_universe* daily,
                                      actk_cross_measures* out) {
  if (!daily || !out) return null_arg("actk_cross_measure_report");
  return guarded([&] {
    const CrossMeasureReport report = cross_measure_report(daily->universe);
    out->pearson_log_nv = report.pearson_log_nv;
    out->pearson_log_qv = report.pearson_log_qv;
    out->exponent_nv = report.exponent_nv;
    out->exponent_qv = report.exponent_qv;
    out->stderr_nv = report.stderr_nv;
    out->stderr_qv = report.stderr_qv;
    out->instruments = report.instruments.size();
    out->excluded = report.excluded.size();
  });
}

/* pattern */

actk_status actk_patterns_compute(const actk_universe* universe, int slot_minutes,
                                  actk_patterns** out) {
  if (!universe || !out) return null_arg("actk_patterns_compute");
  return guarded([&] {
    auto ps = std::make_unique<actk_patterns>();
    ps->patterns.reserve(universe->universe.size());
    for (const auto& [sym, series] : universe->universe)
      ps->patterns.push_back(intraday_pattern(series, slot_minutes));
    if (ps->patterns.empty()) throw std::invalid_argument("empty universe");
    *out = ps.release();
  });
}

int actk_patterns_slots(const actk_patterns* patterns) {
  return patterns && !patterns->patterns.empty() ? patterns->patterns[0].slots() : 0;
}

int actk_patterns_slot_minutes(const actk_patterns* patterns) {
  return patterns && !patterns->patterns.empty() ? patterns->patterns[0].slot_minutes : 0;
}

namespace {
const IntradayPattern* find_pattern(const actk_patterns* patterns, const char* symbol) {
  for (const auto& p : patterns->patterns)
    if (p.symbol == symbol) return &p;
  return nullptr;
}
}  // namespace

actk_status actk_patterns_values(const actk_patterns* patterns, const char* symbol,
                                 double* out, size_t cap, size_t* n) {
  if (!patterns || !symbol || !out || !n) return null_arg("actk_patterns_values");
  const IntradayPattern* p = find_pattern(patterns, symbol);
  if (!p) {
    set_error(std::string("unknown symbol: ") + symbol);
    return ACTK_EINVAL;
  }
  if (cap < p->values.size()) {
    set_error("buffer too small");
    return ACTK_EINVAL;
  }
  std::memcpy(out, p->values.data(), p->values.size() * sizeof(double));
  *n = p->values.size();
  return ACTK_OK;
}

actk_status actk_market_pattern(const actk_patterns* patterns, double* mean,
                                double* stddev, size_t cap, size_t* n) {
  if (!patterns || !mean || !stddev || !n) return null_arg("actk_market_pattern");
  return guarded([&] {
    const MarketPattern market = market_pattern(patterns->patterns);
    if (cap < market.mean.size()) throw std::invalid_argument("buffer too small");
    std::memcpy(mean, market.mean.data(), market.mean.size() * sizeof(double));
    std::memcpy(stddev, market.stddev.data(), market.stddev.size() * sizeof(double));
    *n = market.mean.size();
  });
}

actk_status actk_deseasonalize(const actk_universe* universe,
                               const actk_patterns* patterns, actk_universe** out) {
  if (!universe || !patterns || !out) return null_arg("actk_deseasonalize");
  return guarded([&] {
    auto u = std::make_unique<actk_universe>();
    for (const auto& [sym, series] : universe->universe) {
      const IntradayPattern* p = find_pattern(patterns, sym.c_str());
      if (!p) throw std::invalid_argument("no pattern for symbol " + sym);
      u->universe.emplace(sym, deseasonalize(series, *p));
    }
    u->index();
    *out = u.release();
  });
}

void actk_patterns_free(actk_patterns* patterns) { delete patterns; }

/* distribution */

actk_status actk_pdf_histogram(const double* values, size_t n, size_t bins, int scheme,
                               double lo, double hi, double* centers, double* density) {
  if (!values || !centers || !density) return null_arg("actk_pdf_histogram");
  return guarded([&] {
    const BinScheme s = scheme == ACTK_BINS_LINEAR ? BinScheme::linear : BinScheme::log_width;
    const PdfEstimate pdf = (lo == 0.0 && hi == 0.0)
                                ? pdf_histogram({values, n}, bins, s)
                                : pdf_histogram({values, n}, bins, s, lo, hi);
    std::memcpy(centers, pdf.center.data(), bins * sizeof(double));
    std::memcpy(density, pdf.density.data(), bins * sizeof(double));
  });
}

actk_status actk_normalize_logs(const double* values, size_t n, double* out) {
  if (!values || !out) return null_arg("actk_normalize_logs");
  return guarded([&] {
    const std::vector<double> z = normalize_logs({values, n});
    std::memcpy(out, z.data(), z.size() * sizeof(double));
  });
}

actk_status actk_fit_lognormal(const double* values, size_t n, actk_lognormal_fit* out) {
  if (!values || !out) return null_arg("actk_fit_lognormal");
  return guarded([&] {
    const LogNormalFit fit = fit_lognormal({values, n});
    out->mu = fit.mu;
    out->sigma = fit.sigma;
    out->ks = fit.ks;
    out->n = fit.n;
  });
}

/* growth */

actk_status actk_growth_new(actk_growth** out) {
  if (!out) return null_arg("actk_growth_new");
  *out = new actk_growth{};
  return ACTK_OK;
}

actk_status actk_growth_add_series(actk_growth* growth, const double* values, size_t n) {
  if (!growth || !values) return null_arg("actk_growth_add_series");
  return guarded([&] { growth->obs.append({values, n}); });
}

actk_status actk_growth_add_universe(actk_growth* growth, const actk_universe* universe) {
  if (!growth || !universe) return null_arg("actk_growth_add_universe");
  return guarded([&] {
    for (const auto& [sym, series] : universe->universe) growth->obs.append(series);
  });
}

size_t actk_growth_count(const actk_growth* growth) {
  return growth ? growth->obs.size() : 0;
}

size_t actk_growth_skipped(const actk_growth* growth) {
  return growth ? growth->obs.skipped : 0;
}

void actk_growth_free(actk_growth* growth) { delete growth; }

actk_status actk_growth_stats(const actk_growth* growth, int bins_per_decade,
                              int64_t min_count, actk_binned** out) {
  if (!growth || !out) return null_arg("actk_growth_stats");
  return guarded([&] {
    *out = new actk_binned{conditional_stats(growth->obs, bins_per_decade, min_count)};
  });
}

size_t actk_binned_size(const actk_binned* binned) {
  return binned ? binned->stat.bins.size() : 0;
}

actk_status actk_binned_row(const actk_binned* binned, size_t index, actk_bin_row* out) {
  if (!binned || !out) return null_arg("actk_binned_row");
  if (index >= binned->stat.bins.size()) {
    set_error("bin index out of range");
    return ACTK_EINVAL;
  }
  const GrowthBin& b = binned->stat.bins[index];
  out->lo = b.lo;
  out->hi = b.hi;
  out->center = b.center;
  out->count = b.count;
  out->mean = b.mean;
  out->sd = b.sd;
  return ACTK_OK;
}

void actk_binned_free(actk_binned* binned) { delete binned; }

actk_status actk_fit_beta(const actk_binned* binned, double lo, double hi,
                          actk_power_fit* out) {
  if (!binned || !out) return null_arg("actk_fit_beta");
  return guarded([&] {
    const PowerLawFit fit = fit_beta(binned->stat, lo, hi);
    out->exponent = fit.exponent;
    out->intercept = fit.intercept;
    out->stderr_exponent = fit.stderr_exponent;
    out->lo = fit.lo;
    out->hi = fit.hi;
    out->bins_used = fit.bins_used;
  });
}

/* dfa */

namespace {
DfaConfig to_config(const actk_dfa_config* c) {
  DfaConfig cfg;
  if (c) {
    cfg.detrend_order = c->detrend_order;
    cfg.windows_per_decade = c->windows_per_decade;
    cfg.min_window = c->min_window;
    cfg.max_window = c->max_window;
    cfg.fit_lo = c->fit_lo;
    cfg.fit_hi = c->fit_hi;
    cfg.log_transform = c->log_transform != 0;
  }
  return cfg;
}
}  // namespace

void actk_dfa_config_default(actk_dfa_config* out) {
  if (!out) return;
  const DfaConfig cfg;
  out->detrend_order = cfg.detrend_order;
  out->windows_per_decade = cfg.windows_per_decade;
  out->min_window = cfg.min_window;
  out->max_window = cfg.max_window;
  out->fit_lo = cfg.fit_lo;
  out->fit_hi = cfg.fit_hi;
  out->log_transform = cfg.log_transform ? 1 : 0;
}

actk_status actk_dfa_run(const double* values, size_t n, const actk_dfa_config* config,
                         actk_dfa** out) {
  if (!values || !out) return null_arg("actk_dfa_run");
  return guarded([&] { *out = new actk_dfa{dfa({values, n}, to_config(config))}; });
}

size_t actk_dfa_points(const actk_dfa* handle) {
  return handle ? handle->result.points.size() : 0;
}

actk_status actk_dfa_point(const actk_dfa* handle, size_t index, size_t* window,
                           double* fluctuation) {
  if (!handle) return null_arg("actk_dfa_point");
  if (index >= handle->result.points.size()) {
    set_error("point index out of range");
    return ACTK_EINVAL;
  }
  if (window) *window = handle->result.points[index].window;
  if (fluctuation) *fluctuation = handle->result.points[index].fluctuation;
  return ACTK_OK;
}

actk_status actk_dfa_fit(const actk_dfa* handle, double* hurst, double* stderr_h) {
  if (!handle) return null_arg("actk_dfa_fit");
  if (hurst) *hurst = handle->result.fit.hurst;
  if (stderr_h) *stderr_h = handle->result.fit.stderr_hurst;
  return ACTK_OK;
}

void actk_dfa_free(actk_dfa* handle) { delete handle; }

actk_status actk_hurst_cross_section(const actk_universe* universe,
                                     const actk_universe* daily,
                                     const actk_dfa_config* config, int threads,
                                     actk_cross_section** out) {
  if (!universe || !daily || !out) return null_arg("actk_hurst_cross_section");
  return guarded([&] {
    std::map<std::string, double> means;
    for (const auto& [sym, series] : daily->universe) {
      if (series.bins.empty()) continue;
      CompensatedSum sv;
      for (const auto& b : series.bins) sv.add(b.value);
      means[sym] = sv.value() / static_cast<double>(series.bins.size());
    }
    *out = new actk_cross_section{
        hurst_cross_section(universe->universe, means, to_config(config), threads)};
  });
}

size_t actk_cross_size(const actk_cross_section* cross) {
  return cross ? cross->cross.rows.size() : 0;
}

const char* actk_cross_symbol(const actk_cross_section* cross, size_t index) {
  if (!cross || index >= cross->cross.rows.size()) return nullptr;
  return cross->cross.rows[index].symbol.c_str();
}

actk_status actk_cross_row(const actk_cross_section* cross, size_t index, double* hurst,
                           double* stderr_h, double* mean_daily_value) {
  if (!cross) return null_arg("actk_cross_row");
  if (index >= cross->cross.rows.size()) {
    set_error("row index out of range");
    return ACTK_EINVAL;
  }
  const InstrumentHurst& row = cross->cross.rows[index];
  if (hurst) *hurst = row.hurst;
  if (stderr_h) *stderr_h = row.stderr_hurst;
  if (mean_daily_value) *mean_daily_value = row.mean_daily_value;
  return ACTK_OK;
}

actk_status actk_cross_summary(const actk_cross_section* cross, double* mean_hurst,
                               double* sd_hurst, double* ks, int* low_n) {
  if (!cross) return null_arg("actk_cross_summary");
  if (mean_hurst) *mean_hurst = cross->cross.mean_hurst;
  if (sd_hurst) *sd_hurst = cross->cross.sd_hurst;
  if (ks) *ks = cross->cross.ks;
  if (low_n) *low_n = cross->cross.low_n ? 1 : 0;
  return ACTK_OK;
}

size_t actk_cross_failures(const actk_cross_section* cross) {
  return cross ? cross->cross.failures.size() : 0;
}

actk_status actk_cross_points(const actk_cross_section* cross, const char* symbol,
                              size_t* windows, double* fluctuations, size_t cap,
                              size_t* n) {
  if (!cross || !symbol || !windows || !fluctuations || !n)
    return null_arg("actk_cross_points");
  auto it = cross->cross.details.find(symbol);
  if (it == cross->cross.details.end()) {
    set_error(std::string("no DFA detail for symbol: ") + symbol);
    return ACTK_EINVAL;
  }
  const auto& points = it->second.points;
  if (cap < points.size()) {
    set_error("buffer too small");
    return ACTK_EINVAL;
  }
  for (std::size_t i = 0; i < points.size(); ++i) {
    windows[i] = points[i].window;
    fluctuations[i] = points[i].fluctuation;
  }
  *n = points.size();
  return ACTK_OK;
}

void actk_cross_free(actk_cross_section* cross) { delete cross; }

actk_status actk_hurst_vs_size(const actk_cross_section* cross, int bins_per_decade,
                               actk_size_relation** out) {
  if (!cross || !out) return null_arg("actk_hurst_vs_size");
  return guarded([&] {
    *out = new actk_size_relation{hurst_vs_size(cross->cross, bins_per_decade)};
  });
}

size_t actk_size_relation_bins(const actk_size_relation* rel) {
  return rel ? rel->rel.bins.size() : 0;
}

actk_status actk_size_relation_bin(const actk_size_relation* rel, size_t index,
                                   actk_size_bin* out) {
  if (!rel || !out) return null_arg("actk_size_relation_bin");
  if (index >= rel->rel.bins.size()) {
    set_error("bin index out of range");
    return ACTK_EINVAL;
  }
  const HurstSizeBin& b = rel->rel.bins[index];
  out->center = b.center;
  out->mean_log_value = b.mean_log_value;
  out->count = b.count;
  out->mean_hurst = b.mean_hurst;
  out->sd_hurst = b.sd_hurst;
  return ACTK_OK;
}

actk_status actk_size_relation_fit(const actk_size_relation* rel, double* slope,
                                   double* intercept, double* stderr_slope) {
  if (!rel) return null_arg("actk_size_relation_fit");
  if (slope) *slope = rel->rel.slope;
  if (intercept) *intercept = rel->rel.intercept;
  if (stderr_slope) *stderr_slope = rel->rel.stderr_slope;
  return ACTK_OK;
}

void actk_size_relation_free(actk_size_relation* rel) { delete rel; }

/* surrogate */

uint64_t actk_member_seed(uint64_t base, uint64_t index) {
  return member_seed(base, index);
}

actk_status actk_correlated_noise(size_t length, double target_hurst, uint64_t seed,
                                  double* out) {
  if (!out) return null_arg("actk_correlated_noise");
  return guarded([&] {
    SurrogateSpec spec;
    spec.length = length;
    spec.target_hurst = target_hurst;
    spec.seed = seed;
    const std::vector<double> x = correlated_noise(spec);
    std::memcpy(out, x.data(), x.size() * sizeof(double));
  });
}

actk_status actk_lognormal_activity(size_t length, double target_hurst, double log_mu,
                                    double log_sigma, uint64_t seed, double* out) {
  if (!out) return null_arg("actk_lognormal_activity");
  return guarded([&] {
    SurrogateSpec spec;
    spec.length = length;
    spec.target_hurst = target_hurst;
    spec.log_mu = log_mu;
    spec.log_sigma = log_sigma;
    spec.seed = seed;
    const std::vector<double> x = lognormal_activity(spec);
    std::memcpy(out, x.data(), x.size() * sizeof(double));
  });
}

actk_status actk_relation_experiment(const double* h_targets, size_t n_targets,
                                     size_t ensemble, size_t length, double log_mu,
                                     double log_sigma, uint64_t seed, int threads,
                                     actk_relation** out) {
  if ((!h_targets && n_targets) || !out) return null_arg("actk_relation_experiment");
  return guarded([&] {
    SurrogateSpec spec;
    spec.length = length;
    spec.log_mu = log_mu;
    spec.log_sigma = log_sigma;
    spec.seed = seed;
    *out = new actk_relation{
        relation_experiment({h_targets, n_targets}, ensemble, spec, DfaConfig{}, threads)};
  });
}

size_t actk_relation_rows(const actk_relation* rel) {
  return rel ? rel->experiment.rows.size() : 0;
}

actk_status actk_relation_row_get(const actk_relation* rel, size_t index,
                                  actk_relation_row* out) {
  if (!rel || !out) return null_arg("actk_relation_row_get");
  if (index >= rel->experiment.rows.size()) {
    set_error("row index out of range");
    return ACTK_EINVAL;
  }
  const RelationRow& row = rel->experiment.rows[index];
  out->target_hurst = row.target_hurst;
  out->mean_hurst = row.mean_hurst;
  out->stderr_hurst = row.stderr_hurst;
  out->beta = row.beta;
  out->stderr_beta = row.stderr_beta;
  out->one_minus_hurst = row.one_minus_hurst;
  out->members_ok = row.members_ok;
  out->failed = row.error.empty() ? 0 : 1;
  return ACTK_OK;
}

const char* actk_relation_row_error(const actk_relation* rel, size_t index) {
  if (!rel || index >= rel->experiment.rows.size()) return nullptr;
  return rel->experiment.rows[index].error.c_str();
}

void actk_relation_free(actk_relation* rel) { delete rel; }

/* csv */

actk_status actk_csv_open(const char* path, actk_csv** out) {
  if (!path || !out) return null_arg("actk_csv_open");
  return guarded([&] { *out = new actk_csv{CsvWriter(path)}; });
}

actk_status actk_csv_header(actk_csv* csv, const char* const* names, size_t n) {
  if (!csv || !names) return null_arg("actk_csv_header");
  return guarded([&] {
    std::vector<std::string_view> cells(names, names + n);
    csv->writer.header(cells);
  });
}

actk_status actk_csv_row(actk_csv* csv, const char* label, const double* values,
                         size_t n) {
  if (!csv || (!values && n)) return null_arg("actk_csv_row");
  return guarded([&] {
    if (label)
      csv->writer.row(label, {values, n});
    else
      csv->writer.row({values, n});
  });
}

actk_status actk_csv_raw(actk_csv* csv, const char* const* cells, size_t n) {
  if (!csv || !cells) return null_arg("actk_csv_raw");
  return guarded([&] {
    std::vector<std::string_view> views(cells, cells + n);
    csv->writer.raw_row(views);
  });
}

actk_status actk_csv_close(actk_csv* csv) {
  if (!csv) return null_arg("actk_csv_close");
  const actk_status status = guarded([&] { csv->writer.close(); });
  delete csv;
  return status;
}

} /* extern "C" */
