/*
 * actkit C API: equity-activity analysis toolkit.
 *
 * All functions return ACTK_OK (0) on success or a nonzero status code;
 * actk_last_error() holds a thread-local message for the most recent
 * failure on the calling thread. Objects returned through out-parameters
 * are owned by the caller and released with the matching *_free function.
 * Handles are opaque; NULL is never a valid handle argument.
 */

#ifndef ACTKIT_H
#define ACTKIT_H

#include <stddef.h>
#include <stdint.h>

#ifndef ACTK_API
#define ACTK_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

enum {
  ACTK_OK = 0,
  ACTK_EINVAL = 1, /* invalid argument / precondition violated */
  ACTK_EFAIL = 2,  /* computation failed (degenerate data, ...) */
  ACTK_EIO = 3,    /* file I/O failure */
  ACTK_EPARSE = 4, /* malformed input data */
};
typedef int actk_status;

ACTK_API const char* actk_version(void);
ACTK_API const char* actk_last_error(void);

/* Frees buffers allocated by the library (actk_universe_pool etc.). */
ACTK_API void actk_buffer_free(double* buffer);

/* ---------------------------------------------------------------- calendar */

typedef struct actk_calendar actk_calendar;

ACTK_API actk_status actk_calendar_load(const char* path, actk_calendar** out);
ACTK_API size_t actk_calendar_size(const actk_calendar* cal);
ACTK_API void actk_calendar_free(actk_calendar* cal);

/* ------------------------------------------------------------------ trades */

typedef struct actk_trades actk_trades;

enum {
  ACTK_SESSION_REJECT_FILE = 0,
  ACTK_SESSION_DROP_ROW = 1,
};

typedef struct actk_trade_stats {
  size_t rows;
  size_t parsed;
  size_t malformed;
  size_t out_of_session;
} actk_trade_stats;

/* Parses one or more delimited trade files (plain or gzip). */
ACTK_API actk_status actk_trades_load(const char* const* paths, size_t n_paths,
                                      char delimiter, int session_policy,
                                      actk_trades** out);
ACTK_API size_t actk_trades_count(const actk_trades* trades);
ACTK_API void actk_trades_stats(const actk_trades* trades, actk_trade_stats* out);
ACTK_API void actk_trades_free(actk_trades* trades);

/* ---------------------------------------------------------------- universe */

typedef struct actk_universe actk_universe;

/* interval: "5m", "30m", "1d", "5d", "20d", generally "<n>m" / "<n>d" */
ACTK_API actk_status actk_aggregate(const actk_trades* trades, const actk_calendar* cal,
                                    const char* interval, int threads,
                                    actk_universe** out);
ACTK_API actk_status actk_universe_filter(const actk_universe* universe, int min_days,
                                          actk_universe** out);
ACTK_API size_t actk_universe_size(const actk_universe* universe);
/* Symbols are exposed in sorted order; the pointer stays valid while the
 * universe lives. */
ACTK_API const char* actk_universe_symbol(const actk_universe* universe, size_t index);
ACTK_API actk_status actk_universe_day_count(const actk_universe* universe,
                                             const char* symbol, int* out);
ACTK_API actk_status actk_universe_bin_count(const actk_universe* universe,
                                             const char* symbol, size_t* out);
/* Copies the V column into caller storage of capacity `cap`. */
ACTK_API actk_status actk_universe_values(const actk_universe* universe,
                                          const char* symbol, double* out, size_t cap,
                                          size_t* n);
/* Per-instrument averages over all bins: <V>, <N>, <Q>. */
ACTK_API actk_status actk_universe_means(const actk_universe* universe,
                                         const char* symbol, double* mean_v,
                                         double* mean_n, double* mean_q);
/* All positive bin values pooled over the universe; *out is released with
 * actk_buffer_free. */
ACTK_API actk_status actk_universe_pool(const actk_universe* universe, double** out,
                                        size_t* n, size_t* zeros);
ACTK_API actk_status actk_universe_save(const actk_universe* universe, const char* dir);
ACTK_API actk_status actk_universe_load(const char* dir, actk_universe** out);
ACTK_API void actk_universe_free(actk_universe* universe);

typedef struct actk_cross_measures {
  double pearson_log_nv;
  double pearson_log_qv;
  double exponent_nv;
  double exponent_qv;
  double stderr_nv;
  double stderr_qv;
  size_t instruments;
  size_t excluded;
} actk_cross_measures;

ACTK_API actk_status actk_cross_measure_report(const actk_universe* daily,
                                               actk_cross_measures* out);

/* ----------------------------------------------------------------- pattern */

typedef struct actk_patterns actk_patterns;

/* Intraday pattern A(s) for every instrument of an intraday universe. */
ACTK_API actk_status actk_patterns_compute(const actk_universe* universe,
                                           int slot_minutes, actk_patterns** out);
ACTK_API int actk_patterns_slots(const actk_patterns* patterns);
ACTK_API int actk_patterns_slot_minutes(const actk_patterns* patterns);
ACTK_API actk_status actk_patterns_values(const actk_patterns* patterns,
                                          const char* symbol, double* out, size_t cap,
                                          size_t* n);
/* Slot-wise mean and population std across instruments. */
ACTK_API actk_status actk_market_pattern(const actk_patterns* patterns, double* mean,
                                         double* stddev, size_t cap, size_t* n);
/* V(t) -> V(t)/A(s); N, Q unchanged. */
ACTK_API actk_status actk_deseasonalize(const actk_universe* universe,
                                        const actk_patterns* patterns,
                                        actk_universe** out);
ACTK_API void actk_patterns_free(actk_patterns* patterns);

/* ------------------------------------------------------------ distribution */

enum {
  ACTK_BINS_LOG = 0,
  ACTK_BINS_LINEAR = 1,
};

/* Histogram density estimate. Pass lo = hi = 0 to span the data range;
 * otherwise values outside [lo, hi] are excluded from counts but kept in the
 * normalization. `centers` and `density` must hold `bins` doubles. */
ACTK_API actk_status actk_pdf_histogram(const double* values, size_t n, size_t bins,
                                        int scheme, double lo, double hi,
                                        double* centers, double* density);
/* z = (ln v - <ln v>) / sigma(ln v); out must hold n doubles. */
ACTK_API actk_status actk_normalize_logs(const double* values, size_t n, double* out);

typedef struct actk_lognormal_fit {
  double mu;
  double sigma;
  double ks;
  size_t n;
} actk_lognormal_fit;

ACTK_API actk_status actk_fit_lognormal(const double* values, size_t n,
                                        actk_lognormal_fit* out);

/* ------------------------------------------------------------------ growth */

typedef struct actk_growth actk_growth;
typedef struct actk_binned actk_binned;

ACTK_API actk_status actk_growth_new(actk_growth** out);
/* Appends g = ln(1 + V(t)/V(t-1)) observations from one series. */
ACTK_API actk_status actk_growth_add_series(actk_growth* growth, const double* values,
                                            size_t n);
ACTK_API actk_status actk_growth_add_universe(actk_growth* growth,
                                              const actk_universe* universe);
ACTK_API size_t actk_growth_count(const actk_growth* growth);
ACTK_API size_t actk_growth_skipped(const actk_growth* growth);
ACTK_API void actk_growth_free(actk_growth* growth);

typedef struct actk_bin_row {
  double lo;
  double hi;
  double center;
  int64_t count;
  double mean;
  double sd;
} actk_bin_row;

/* Conditional mean/std of g over logarithmic bins of V(t-1). */
ACTK_API actk_status actk_growth_stats(const actk_growth* growth, int bins_per_decade,
                                       int64_t min_count, actk_binned** out);
ACTK_API size_t actk_binned_size(const actk_binned* binned);
ACTK_API actk_status actk_binned_row(const actk_binned* binned, size_t index,
                                     actk_bin_row* out);
ACTK_API void actk_binned_free(actk_binned* binned);

typedef struct actk_power_fit {
  double exponent;
  double intercept;
  double stderr_exponent;
  double lo;
  double hi;
  size_t bins_used;
} actk_power_fit;

/* sigma(g|V_i) ~ V_i^-beta over [lo, hi]; 0, 0 selects the default range
 * (occupied bins trimmed by half a decade at each end). */
ACTK_API actk_status actk_fit_beta(const actk_binned* binned, double lo, double hi,
                                   actk_power_fit* out);

/* --------------------------------------------------------------------- dfa */

typedef struct actk_dfa_config {
  int detrend_order;      /* >= 1 */
  int windows_per_decade; /* >= 1 */
  size_t min_window;      /* 0 -> 2 * (order + 2) */
  size_t max_window;      /* 0 -> n / 4 */
  double fit_lo;          /* 0, 0 -> fit over all window sizes */
  double fit_hi;
  int log_transform; /* analyze ln V (cross-section only) */
} actk_dfa_config;

ACTK_API void actk_dfa_config_default(actk_dfa_config* out);

typedef struct actk_dfa actk_dfa;

ACTK_API actk_status actk_dfa_run(const double* values, size_t n,
                                  const actk_dfa_config* config, actk_dfa** out);
ACTK_API size_t actk_dfa_points(const actk_dfa* dfa);
ACTK_API actk_status actk_dfa_point(const actk_dfa* dfa, size_t index, size_t* window,
                                    double* fluctuation);
ACTK_API actk_status actk_dfa_fit(const actk_dfa* dfa, double* hurst, double* stderr_h);
ACTK_API void actk_dfa_free(actk_dfa* dfa);

typedef struct actk_cross_section actk_cross_section;

/* Per-instrument DFA over a deseasonalized universe; daily supplies <V> at
 * 1-day per symbol. */
ACTK_API actk_status actk_hurst_cross_section(const actk_universe* universe,
                                              const actk_universe* daily,
                                              const actk_dfa_config* config, int threads,
                                              actk_cross_section** out);
ACTK_API size_t actk_cross_size(const actk_cross_section* cross);
ACTK_API const char* actk_cross_symbol(const actk_cross_section* cross, size_t index);
ACTK_API actk_status actk_cross_row(const actk_cross_section* cross, size_t index,
                                    double* hurst, double* stderr_h,
                                    double* mean_daily_value);
ACTK_API actk_status actk_cross_summary(const actk_cross_section* cross,
                                        double* mean_hurst, double* sd_hurst, double* ks,
                                        int* low_n);
ACTK_API size_t actk_cross_failures(const actk_cross_section* cross);
/* F(l) curve of one instrument; windows/fluctuations hold `cap` entries. */
ACTK_API actk_status actk_cross_points(const actk_cross_section* cross,
                                       const char* symbol, size_t* windows,
                                       double* fluctuations, size_t cap, size_t* n);
ACTK_API void actk_cross_free(actk_cross_section* cross);

typedef struct actk_size_relation actk_size_relation;

typedef struct actk_size_bin {
  double center;
  double mean_log_value;
  int64_t count;
  double mean_hurst;
  double sd_hurst;
} actk_size_bin;

ACTK_API actk_status actk_hurst_vs_size(const actk_cross_section* cross,
                                        int bins_per_decade, actk_size_relation** out);
ACTK_API size_t actk_size_relation_bins(const actk_size_relation* rel);
ACTK_API actk_status actk_size_relation_bin(const actk_size_relation* rel, size_t index,
                                            actk_size_bin* out);
ACTK_API actk_status actk_size_relation_fit(const actk_size_relation* rel, double* slope,
                                            double* intercept, double* stderr_slope);
ACTK_API void actk_size_relation_free(actk_size_relation* rel);

/* --------------------------------------------------------------- surrogate */

/* splitmix64-mixed seed for ensemble member `index`. */
ACTK_API uint64_t actk_member_seed(uint64_t base, uint64_t index);

/* Zero-mean unit-variance series with spectrum ~ f^-(2H-1); length must be a
 * power of two >= 8 and out must hold `length` doubles. */
ACTK_API actk_status actk_correlated_noise(size_t length, double target_hurst,
                                           uint64_t seed, double* out);
/* exp(log_mu + log_sigma * noise): log-normal marginal, Hurst target_hurst. */
ACTK_API actk_status actk_lognormal_activity(size_t length, double target_hurst,
                                             double log_mu, double log_sigma,
                                             uint64_t seed, double* out);

typedef struct actk_relation actk_relation;

typedef struct actk_relation_row {
  double target_hurst;
  double mean_hurst;
  double stderr_hurst;
  double beta;
  double stderr_beta;
  double one_minus_hurst;
  size_t members_ok;
  int failed; /* nonzero when the row failed; see actk_relation_row_error */
} actk_relation_row;

/* beta = 1 - H experiment: per target H, an ensemble of log-normal
 * surrogates is measured with DFA (H) and the growth statistics (beta).
 * Requires ensemble >= 16 and length >= 2^14 (power of two). */
ACTK_API actk_status actk_relation_experiment(const double* h_targets, size_t n_targets,
                                              size_t ensemble, size_t length,
                                              double log_mu, double log_sigma,
                                              uint64_t seed, int threads,
                                              actk_relation** out);
ACTK_API size_t actk_relation_rows(const actk_relation* rel);
ACTK_API actk_status actk_relation_row_get(const actk_relation* rel, size_t index,
                                           actk_relation_row* out);
ACTK_API const char* actk_relation_row_error(const actk_relation* rel, size_t index);
ACTK_API void actk_relation_free(actk_relation* rel);

/* --------------------------------------------------------------------- csv */

typedef struct actk_csv actk_csv;

/* Deterministic CSV writer: doubles are emitted in shortest round-trip
 * form so identical runs produce byte-identical artifacts. */
ACTK_API actk_status actk_csv_open(const char* path, actk_csv** out);
ACTK_API actk_status actk_csv_header(actk_csv* csv, const char* const* names, size_t n);
/* label may be NULL for an all-numeric row. */
ACTK_API actk_status actk_csv_row(actk_csv* csv, const char* label, const double* values,
                                  size_t n);
ACTK_API actk_status actk_csv_raw(actk_csv* csv, const char* const* cells, size_t n);
/* Flushes, closes and releases the writer (also on error). */
ACTK_API actk_status actk_csv_close(actk_csv* csv);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* ACTKIT_H */
