#include "actkit/stats.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace actkit {

double mean(std::span<const double> x) {
  if (x.empty()) throw std::invalid_argument("mean: empty input");
  CompensatedSum s;
  for (double v : x) s.add(v);
  return s.value() / static_cast<double>(x.size());
}

double stddev_pop(std::span<const double> x) {
  if (x.empty()) throw std::invalid_argument("stddev_pop: empty input");
  const double m = mean(x);
  CompensatedSum s;
  for (double v : x) s.add((v - m) * (v - m));
  return std::sqrt(s.value() / static_cast<double>(x.size()));
}

double pearson(std::span<const double> x, std::span<const double> y) {
  if (x.size() != y.size())
    throw std::invalid_argument("pearson: size mismatch");
  if (x.size() < 2) throw std::invalid_argument("pearson: need >= 2 points");
  const double mx = mean(x);
  const double my = mean(y);
  CompensatedSum sxy, sxx, syy;
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double dx = x[i] - mx;
    const double dy = y[i] - my;
    sxy.add(dx * dy);
    sxx.add(dx * dx);
    syy.add(dy * dy);
  }
  const double denom = std::sqrt(sxx.value()) * std::sqrt(syy.value());
  if (denom == 0.0)
    throw std::runtime_error("pearson: degenerate variance (zero spread)");
  return sxy.value() / denom;
}

LineFit fit_line(std::span<const double> x, std::span<const double> y) {
  if (x.size() != y.size())
    throw std::invalid_argument("fit_line: size mismatch");
  const std::size_t n = x.size();
  if (n < 2) throw std::invalid_argument("fit_line: need >= 2 points");
  const double mx = mean(x);
  const double my = mean(y);
  CompensatedSum sxy, sxx;
  for (std::size_t i = 0; i < n; ++i) {
    sxy.add((x[i] - mx) * (y[i] - my));
    sxx.add((x[i] - mx) * (x[i] - mx));
  }
  if (sxx.value() == 0.0)
    throw std::runtime_error("fit_line: degenerate abscissa (zero spread)");
  LineFit fit;
  fit.n = n;
  fit.slope = sxy.value() / sxx.value();
  fit.intercept = my - fit.slope * mx;
  if (n > 2) {
    CompensatedSum ssr;
    for (std::size_t i = 0; i < n; ++i) {
      const double r = y[i] - (fit.intercept + fit.slope * x[i]);
      ssr.add(r * r);
    }
    const double s2 = std::max(0.0, ssr.value()) / static_cast<double>(n - 2);
    fit.slope_stderr = std::sqrt(s2 / sxx.value());
  }
  return fit;
}

double normal_cdf(double z) { return 0.5 * std::erfc(-z / std::sqrt(2.0)); }

double ks_standard_normal(std::vector<double> sample) {
  if (sample.empty())
    throw std::invalid_argument("ks_standard_normal: empty sample");
  std::sort(sample.begin(), sample.end());
  const double n = static_cast<double>(sample.size());
  double d = 0.0;
  for (std::size_t i = 0; i < sample.size(); ++i) {
    const double cdf = normal_cdf(sample[i]);
    d = std::max(d, std::abs(cdf - static_cast<double>(i + 1) / n));
    d = std::max(d, std::abs(cdf - static_cast<double>(i) / n));
  }
  return d;
}

}  // namespace actkit
