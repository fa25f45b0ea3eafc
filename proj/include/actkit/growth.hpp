#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "actkit/series.hpp"

namespace actkit {

// Pooled growth observations: g = ln(1 + V(t)/V(t-1)) keyed by the initial
// value V(t-1). Pairs with V(t-1) = 0 are skipped and counted.
struct GrowthObservations {
  std::vector<double> initial;  // V(t-1)
  std::vector<double> rate;     // g
  std::size_t skipped = 0;

  std::size_t size() const { return rate.size(); }
  void append(std::span<const double> values);
  void append(const ActivitySeries& series) { append(series.values()); }
  void merge(const GrowthObservations& other);
};

GrowthObservations growth_rates(const ActivitySeries& series);
GrowthObservations growth_rates(std::span<const double> values);

struct GrowthBin {
  double lo = 0.0, hi = 0.0;
  double center = 0.0;  // geometric center of the bin
  std::int64_t count = 0;
  double mean = 0.0;
  double sd = 0.0;  // population convention
};

struct BinnedStat {
  std::vector<GrowthBin> bins;
  std::int64_t total = 0;
  std::int64_t min_count_for_fit = 10;  // bins below this are flagged out of fits
};

// Logarithmic bins spanning [min V_i, max V_i]. Mergeable accumulation
// (count, sum, sum of squares per bin), so partial histograms from disjoint
// instrument sets combine associatively.
class GrowthHistogram {
public:
  GrowthHistogram(double lo, double hi, int bins_per_decade);
  void add(double initial, double rate);
  void add(const GrowthObservations& obs);
  void merge(const GrowthHistogram& other);
  BinnedStat finish(std::int64_t min_count_for_fit) const;

private:
  double log_lo_, log_hi_, width_;
  std::size_t bins_;
  struct Accum {
    std::int64_t n = 0;
    double sum = 0.0, sumsq = 0.0;
  };
  std::vector<Accum> acc_;
};

BinnedStat conditional_stats(const GrowthObservations& obs, int bins_per_decade = 8,
                             std::int64_t min_count = 10);

struct PowerLawFit {
  double exponent = 0.0;  // beta: sigma(g|V_i) ~ V_i^(-beta)
  double intercept = 0.0;
  double stderr_exponent = 0.0;
  double lo = 0.0, hi = 0.0;  // fit range in V_i units
  std::size_t bins_used = 0;
  std::size_t excluded_zero_sd = 0;
};

// Least-squares slope of log sd vs log V_i over occupied in-range bins,
// negated. Pass lo = hi = 0 for the default range, which trims half a decade
// off each end of the occupied bins. Requires >= 3 usable bins; zero-sd bins
// are excluded and counted.
PowerLawFit fit_beta(const BinnedStat& stat, double lo = 0.0, double hi = 0.0);

struct MeanGrowthRow {
  double center = 0.0;
  std::int64_t count = 0;
  double mean = 0.0;
};

struct MeanGrowthReport {
  std::vector<MeanGrowthRow> rows;
  double reference = 0.0;  // ln 2, the large-V_i limit for persistent series
};

MeanGrowthReport mean_growth_report(const BinnedStat& stat);

}  // namespace actkit
