#pragma once

#include <cstddef>
#include <span>
#include <utility>
#include <vector>

#include "actkit/series.hpp"

namespace actkit {

enum class BinScheme { log_width, linear };

struct PdfEstimate {
  BinScheme scheme = BinScheme::log_width;
  std::vector<double> edges;    // bins + 1
  std::vector<double> center;   // geometric (log) or arithmetic (linear) centers
  std::vector<double> density;  // count / (total samples * bin width)
  std::size_t sample_count = 0;

  // Numeric integral sum(density * width); 1 up to out-of-range mass.
  double total_mass() const;
};

// Histogram density estimate over the data range. Log scheme requires
// strictly positive values and errors listing offenders.
PdfEstimate pdf_histogram(std::span<const double> values, std::size_t bins,
                          BinScheme scheme);

// Fixed-range variant: values outside [lo, hi] are excluded from the counts
// but kept in the normalization, so densities from different samples share a
// grid and stay comparable.
PdfEstimate pdf_histogram(std::span<const double> values, std::size_t bins,
                          BinScheme scheme, double lo, double hi);

// z = (ln v - <ln v>) / sigma(ln v), population convention. Output has mean 0
// and standard deviation 1. Requires >= 2 distinct positive values.
std::vector<double> normalize_logs(std::span<const double> values);

struct LogNormalFit {
  double mu = 0.0;     // <ln V>
  double sigma = 0.0;  // sigma(ln V), population
  double ks = 0.0;     // KS distance of standardized ln V vs N(0,1)
  std::size_t n = 0;
};

// Moment fit of ln V; requires >= 30 strictly positive values and nonzero
// spread.
LogNormalFit fit_lognormal(std::span<const double> values);

// All positive bin values pooled over the universe; zero bins counted.
std::vector<double> pooled_positive_values(const Universe& universe,
                                           std::size_t* zeros = nullptr);

struct IntervalMoments {
  SamplingInterval interval;
  double mean_log = 0.0;
  double sd_log = 0.0;
  std::size_t n = 0;      // positive bins pooled
  std::size_t zeros = 0;  // excluded zero bins
};

// One row per sampling interval: moments of ln V pooled over all instruments.
std::vector<IntervalMoments> moments_vs_interval(
    std::span<const std::pair<SamplingInterval, const Universe*>> universes);

}  // namespace actkit
