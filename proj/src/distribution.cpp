#include "actkit/distribution.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "actkit/stats.hpp"

namespace actkit {

double PdfEstimate::total_mass() const {
  CompensatedSum s;
  for (std::size_t i = 0; i < density.size(); ++i)
    s.add(density[i] * (edges[i + 1] - edges[i]));
  return s.value();
}

namespace {

void check_positive(std::span<const double> values, const char* who) {
  std::string offenders;
  int shown = 0;
  std::size_t bad = 0;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (!(values[i] > 0.0)) {
      ++bad;
      if (shown < 5) {
        offenders += (shown ? ", " : "") + std::string("[") + std::to_string(i) +
                     "]=" + std::to_string(values[i]);
        ++shown;
      }
    }
  }
  if (bad)
    throw std::invalid_argument(std::string(who) + ": " + std::to_string(bad) +
                                " nonpositive value(s): " + offenders);
}

PdfEstimate histogram_impl(std::span<const double> values, std::size_t bins,
                           BinScheme scheme, double lo, double hi) {
  PdfEstimate pdf;
  pdf.scheme = scheme;
  pdf.sample_count = values.size();
  pdf.edges.resize(bins + 1);
  const bool log_scheme = scheme == BinScheme::log_width;
  const double llo = log_scheme ? std::log(lo) : lo;
  const double lhi = log_scheme ? std::log(hi) : hi;
  for (std::size_t i = 0; i <= bins; ++i) {
    const double t = static_cast<double>(i) / static_cast<double>(bins);
    const double e = llo + t * (lhi - llo);
    pdf.edges[i] = log_scheme ? std::exp(e) : e;
  }
  pdf.edges.front() = lo;
  pdf.edges.back() = hi;

  std::vector<std::size_t> count(bins, 0);
  const double width = (lhi - llo) / static_cast<double>(bins);
  for (double v : values) {
    const double u = log_scheme ? std::log(v) : v;
    if (u < llo || u > lhi) continue;
    std::size_t idx = u >= lhi ? bins - 1
                               : static_cast<std::size_t>((u - llo) / width);
    if (idx >= bins) idx = bins - 1;
    ++count[idx];
  }

  pdf.center.resize(bins);
  pdf.density.resize(bins);
  const double n = static_cast<double>(values.size());
  for (std::size_t i = 0; i < bins; ++i) {
    const double w = pdf.edges[i + 1] - pdf.edges[i];
    pdf.center[i] = log_scheme ? std::sqrt(pdf.edges[i] * pdf.edges[i + 1])
                               : 0.5 * (pdf.edges[i] + pdf.edges[i + 1]);
    pdf.density[i] = w > 0.0 ? static_cast<double>(count[i]) / (n * w) : 0.0;
  }
  return pdf;
}

}  // namespace

PdfEstimate pdf_histogram(std::span<const double> values, std::size_t bins,
                          BinScheme scheme) {
  if (bins < 1) throw std::invalid_argument("pdf_histogram: need >= 1 bin");
  if (values.empty()) throw std::invalid_argument("pdf_histogram: empty input");
  if (scheme == BinScheme::log_width) check_positive(values, "pdf_histogram");

  auto [lo_it, hi_it] = std::minmax_element(values.begin(), values.end());
  double lo = *lo_it, hi = *hi_it;
  if (lo == hi) {
    // single-valued sample: a narrow bin around the value
    if (scheme == BinScheme::log_width) {
      lo *= 1.0 - 1e-9;
      hi *= 1.0 + 1e-9;
    } else {
      const double h = std::max(std::abs(lo), 1.0) * 1e-9;
      lo -= h;
      hi += h;
    }
  }
  return histogram_impl(values, bins, scheme, lo, hi);
}

PdfEstimate pdf_histogram(std::span<const double> values, std::size_t bins,
                          BinScheme scheme, double lo, double hi) {
  if (bins < 1) throw std::invalid_argument("pdf_histogram: need >= 1 bin");
  if (values.empty()) throw std::invalid_argument("pdf_histogram: empty input");
  if (!(lo < hi)) throw std::invalid_argument("pdf_histogram: need lo < hi");
  if (scheme == BinScheme::log_width) {
    if (lo <= 0.0) throw std::invalid_argument("pdf_histogram: log bins need lo > 0");
    check_positive(values, "pdf_histogram");
  }
  return histogram_impl(values, bins, scheme, lo, hi);
}

std::vector<double> normalize_logs(std::span<const double> values) {
  if (values.size() < 2)
    throw std::invalid_argument("normalize_logs: need >= 2 values");
  check_positive(values, "normalize_logs");

  std::vector<double> z(values.size());
  for (std::size_t i = 0; i < values.size(); ++i) z[i] = std::log(values[i]);
  const double m = mean(z);
  const double sd = stddev_pop(z);
  if (sd == 0.0)
    throw std::runtime_error("normalize_logs: zero variance");
  for (double& v : z) v = (v - m) / sd;
  return z;
}

LogNormalFit fit_lognormal(std::span<const double> values) {
  if (values.size() < 30)
    throw std::invalid_argument("fit_lognormal: need >= 30 values, got " +
                                std::to_string(values.size()));
  check_positive(values, "fit_lognormal");

  std::vector<double> logs(values.size());
  for (std::size_t i = 0; i < values.size(); ++i) logs[i] = std::log(values[i]);
  LogNormalFit fit;
  fit.n = values.size();
  fit.mu = mean(logs);
  fit.sigma = stddev_pop(logs);
  if (fit.sigma == 0.0)
    throw std::runtime_error("fit_lognormal: zero variance (constant sample)");
  for (double& v : logs) v = (v - fit.mu) / fit.sigma;
  fit.ks = ks_standard_normal(std::move(logs));
  return fit;
}

std::vector<double> pooled_positive_values(const Universe& universe, std::size_t* zeros) {
  std::vector<double> pooled;
  std::size_t z = 0;
  for (const auto& [sym, series] : universe)
    for (const auto& b : series.bins) {
      if (b.value > 0.0)
        pooled.push_back(b.value);
      else
        ++z;
    }
  if (zeros) *zeros = z;
  return pooled;
}

std::vector<IntervalMoments> moments_vs_interval(
    std::span<const std::pair<SamplingInterval, const Universe*>> universes) {
  std::vector<IntervalMoments> rows;
  rows.reserve(universes.size());
  for (const auto& [interval, universe] : universes) {
    IntervalMoments row;
    row.interval = interval;
    std::vector<double> pooled = pooled_positive_values(*universe, &row.zeros);
    if (pooled.empty())
      throw std::runtime_error("moments_vs_interval: no positive bins at " +
                               interval.label());
    for (double& v : pooled) v = std::log(v);
    row.mean_log = mean(pooled);
    row.sd_log = stddev_pop(pooled);
    row.n = pooled.size();
    rows.push_back(row);
  }
  return rows;
}

}  // namespace actkit
