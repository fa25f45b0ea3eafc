#pragma once

#include <cstddef>
#include <map>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "actkit/series.hpp"

namespace actkit {

struct DfaConfig {
  int detrend_order = 1;
  int windows_per_decade = 8;
  std::size_t min_window = 0;  //. 0 -> 2 * (detrend_order + 2)
  std::size_t max_window = 0;  // 0 -> n / 4
  double fit_lo = 0.0;         // fit range in window units; 0,0 -> full range
  double fit_hi = 0.0;
  bool log_transform = false;  // analyze ln V instead of V (cross-section only)

  std::size_t effective_min_window() const {
    return min_window ? min_window : 2 * static_cast<std::size_t>(detrend_order + 2);
  }
};

// Cumulative profile Y(k) = sum_{j<=k} (x_j - mean). Y ends at 0 up to
// rounding.
std::vector<double> profile(std::span<const double> x);

// Log-spaced integer window sizes in [min_window, max_window].
std::vector<std::size_t> window_sizes(std::size_t n, const DfaConfig& config);

struct DfaPoint {
  std::size_t window = 0;
  double fluctuation = 0.0;
};

// RMS fluctuation of the polynomially detrended profile per window size.
// Windows are taken from both ends of the series (2 * floor(n/l) segments).
// Requires n >= 4 * min_window and a nonconstant series.
std::vector<DfaPoint> fluctuation_function(std::span<const double> x,
                                           const DfaConfig& config = {});

// Same, over an explicit window list (each window must satisfy
// order + 2 <= l <= n).
std::vector<DfaPoint> fluctuation_function(std::span<const double> x,
                                           const DfaConfig& config,
                                           std::span<const std::size_t> windows);

struct HurstFit {
  double hurst = 0.0;
  double stderr_hurst = 0.0;
  double lo = 0.0, hi = 0.0;
  std::size_t points_used = 0;
  std::size_t excluded_zero_f = 0;
};

// Least-squares slope of log F vs log l over [lo, hi] (0,0 = all points).
// Points with F = 0 are excluded; >= 4 usable points required.
HurstFit hurst(std::span<const DfaPoint> points, double lo = 0.0, double hi = 0.0);

struct DfaResult {
  std::vector<DfaPoint> points;
  HurstFit fit;
};

DfaResult dfa(std::span<const double> x, const DfaConfig& config = {});

struct InstrumentHurst {
  std::string symbol;
  double hurst = 0.0;
  double stderr_hurst = 0.0;
  double mean_daily_value = 0.0;
};

struct HurstCrossSection {
  std::vector<InstrumentHurst> rows;  // sorted by symbol
  std::vector<std::pair<std::string, std::string>> failures;  // symbol, reason
  double mean_hurst = 0.0;
  double sd_hurst = 0.0;   // population
  double ks = 0.0;         // standardized H vs N(0,1)
  bool low_n = false;      // fewer than 10 instruments
  std::map<std::string, DfaResult> details;  // per-instrument F(l) curves
};

// Per-instrument DFA over a (deseasonalized 5-min) universe plus the normal
// fit of the H distribution. Instruments whose DFA fails are recorded and
// skipped. daily_mean_value supplies <V> at 1-day per symbol.
HurstCrossSection hurst_cross_section(const Universe& universe,
                                      const std::map<std::string, double>& daily_mean_value,
                                      const DfaConfig& config = {}, int threads = 0);

struct HurstSizeBin {
  double center = 0.0;        // geometric center in <V>
  double mean_log_value = 0.0;  // mean ln<V> of members, regression abscissa
  std::int64_t count = 0;
  double mean_hurst = 0.0;
  double sd_hurst = 0.0;
};

struct HurstSizeRelation {
  std::vector<HurstSizeBin> bins;  // occupied bins only
  double slope = 0.0;              // dH / d ln<V>
  double intercept = 0.0;
  double stderr_slope = 0.0;
};

// Bins H by log <V> and regresses per-bin mean H on per-bin mean ln<V>.
// Requires >= 3 occupied bins and a nondegenerate <V> spread.
HurstSizeRelation hurst_vs_size(const HurstCrossSection& cross, int bins_per_decade = 4);

}  // namespace actkit
