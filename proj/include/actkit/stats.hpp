#pragma once

#include <cmath>
#include <cstddef>
#include <span>
#include <vector>

namespace actkit {

// Neumaier-compensated accumulator. Error stays below one ulp per addend
// regardless of the number of terms.
class CompensatedSum {
public:
  void add(double x) {
    double t = sum_ + x;
    if (std::abs(sum_) >= std::abs(x))
      comp_ += (sum_ - t) + x;
    else
      comp_ += (x - t) + sum_;
    sum_ = t;
  }
  double value() const { return sum_ + comp_; }

private:
  double sum_ = 0.0;
  double comp_ = 0.0;
};

double mean(std::span<const double> x);

// Population convention: sqrt(<x^2> - <x>^2), divide by n.
double stddev_pop(std::span<const double> x);

double pearson(std::span<const double> x, std::span<const double> y);

struct LineFit {
  double slope = 0.0;
  double intercept = 0.0;
  double slope_stderr = 0.0;
  std::size_t n = 0;
};

// Ordinary least squares y = intercept + slope * x. Slope standard error is
// the usual regression estimate (0 when n == 2 or the fit is exact).
LineFit fit_line(std::span<const double> x, std::span<const double> y);

double normal_cdf(double z);

// Two-sided Kolmogorov-Smirnov distance of a sample against N(0,1).
double ks_standard_normal(std::vector<double> sample);

}  // namespace actkit
