#include "actkit/growth.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "actkit/stats.hpp"

namespace actkit {

void GrowthObservations::append(std::span<const double> values) {
  if (values.size() < 2)
    throw std::invalid_argument("growth_rates: need >= 2 bins");
  for (std::size_t t = 1; t < values.size(); ++t) {
    const double prev = values[t - 1];
    if (prev > 0.0) {
      initial.push_back(prev);
      rate.push_back(std::log1p(values[t] / prev));
    } else {
      ++skipped;
    }
  }
}

void GrowthObservations::merge(const GrowthObservations& other) {
  initial.insert(initial.end(), other.initial.begin(), other.initial.end());
  rate.insert(rate.end(), other.rate.begin(), other.rate.end());
  skipped += other.skipped;
}

GrowthObservations growth_rates(const ActivitySeries& series) {
  GrowthObservations obs;
  obs.append(series);
  return obs;
}

GrowthObservations growth_rates(std::span<const double> values) {
  GrowthObservations obs;
  obs.append(values);
  return obs;
}

GrowthHistogram::GrowthHistogram(double lo, double hi, int bins_per_decade) {
  if (!(lo > 0.0) || !(hi >= lo))
    throw std::invalid_argument("GrowthHistogram: need 0 < lo <= hi");
  if (bins_per_decade < 1)
    throw std::invalid_argument("GrowthHistogram: bins_per_decade must be >= 1");
  log_lo_ = std::log10(lo);
  log_hi_ = std::log10(hi);
  if (log_hi_ == log_lo_) log_hi_ = log_lo_ + 1e-9;  // single-valued V_i
  bins_ = static_cast<std::size_t>(
      std::ceil((log_hi_ - log_lo_) * static_cast<double>(bins_per_decade) - 1e-12));
  bins_ = std::max<std::size_t>(bins_, 1);
  width_ = (log_hi_ - log_lo_) / static_cast<double>(bins_);
  acc_.resize(bins_);
}

void GrowthHistogram::add(double initial, double rate) {
  const double u = std::log10(initial);
  if (u < log_lo_ || u > log_hi_) return;
  std::size_t idx = u >= log_hi_ ? bins_ - 1 : static_cast<std::size_t>((u - log_lo_) / width_);
  if (idx >= bins_) idx = bins_ - 1;
  auto& a = acc_[idx];
  a.n += 1;
  a.sum += rate;
  a.sumsq += rate * rate;
}

void GrowthHistogram::add(const GrowthObservations& obs) {
  for (std::size_t i = 0; i < obs.size(); ++i) add(obs.initial[i], obs.rate[i]);
}

void GrowthHistogram::merge(const GrowthHistogram& other) {
  if (other.bins_ != bins_ || other.log_lo_ != log_lo_ || other.log_hi_ != log_hi_)
    throw std::invalid_argument("GrowthHistogram::merge: incompatible grids");
  for (std::size_t i = 0; i < bins_; ++i) {
    acc_[i].n += other.acc_[i].n;
    acc_[i].sum += other.acc_[i].sum;
    acc_[i].sumsq += other.acc_[i].sumsq;
  }
}

BinnedStat GrowthHistogram::finish(std::int64_t min_count_for_fit) const {
  BinnedStat stat;
  stat.min_count_for_fit = min_count_for_fit;
  stat.bins.reserve(bins_);
  for (std::size_t i = 0; i < bins_; ++i) {
    GrowthBin bin;
    bin.lo = std::pow(10.0, log_lo_ + width_ * static_cast<double>(i));
    bin.hi = std::pow(10.0, log_lo_ + width_ * static_cast<double>(i + 1));
    bin.center = std::pow(10.0, log_lo_ + width_ * (static_cast<double>(i) + 0.5));
    bin.count = acc_[i].n;
    if (acc_[i].n > 0) {
      const double n = static_cast<double>(acc_[i].n);
      bin.mean = acc_[i].sum / n;
      const double var = std::max(0.0, acc_[i].sumsq / n - bin.mean * bin.mean);
      bin.sd = std::sqrt(var);
    }
    stat.total += acc_[i].n;
    stat.bins.push_back(bin);
  }
  return stat;
}

BinnedStat conditional_stats(const GrowthObservations& obs, int bins_per_decade,
                             std::int64_t min_count) {
  if (obs.size() == 0)
    throw std::invalid_argument("conditional_stats: no observations");
  auto [lo_it, hi_it] = std::minmax_element(obs.initial.begin(), obs.initial.end());
  GrowthHistogram hist(*lo_it, *hi_it, bins_per_decade);
  hist.add(obs);
  return hist.finish(min_count);
}

PowerLawFit fit_beta(const BinnedStat& stat, double lo, double hi) {
  // occupied = enough observations for a meaningful bin std
  std::vector<const GrowthBin*> occupied;
  for (const auto& b : stat.bins)
    if (b.count >= stat.min_count_for_fit) occupied.push_back(&b);
  if (occupied.empty()) throw std::runtime_error("fit_beta: no occupied bins");

  if (lo == 0.0 && hi == 0.0) {
    // default range trims half a decade off each end of the occupied bins
    const double half_decade = std::sqrt(10.0);
    lo = occupied.front()->center * half_decade;
    hi = occupied.back()->center / half_decade;
  }
  if (!(lo < hi))
    throw std::runtime_error("fit_beta: empty fit range after trimming");

  PowerLawFit fit;
  fit.lo = lo;
  fit.hi = hi;
  std::vector<double> x, y;
  for (const auto* b : occupied) {
    if (b->center < lo || b->center > hi) continue;
    if (b->sd <= 0.0) {
      ++fit.excluded_zero_sd;
      continue;
    }
    x.push_back(std::log(b->center));
    y.push_back(std::log(b->sd));
  }
  if (x.size() < 3)
    throw std::runtime_error("fit_beta: need >= 3 occupied bins in range, have " +
                             std::to_string(x.size()));
  const LineFit line = fit_line(x, y);
  fit.exponent = -line.slope;
  fit.intercept = line.intercept;
  fit.stderr_exponent = line.slope_stderr;
  fit.bins_used = x.size();
  return fit;
}

MeanGrowthReport mean_growth_report(const BinnedStat& stat) {
  if (stat.bins.empty())
    throw std::invalid_argument("mean_growth_report: empty statistic");
  MeanGrowthReport report;
  report.reference = std::numbers::ln2;
  for (const auto& b : stat.bins) {
    if (b.count == 0) continue;
    report.rows.push_back({b.center, b.count, b.mean});
  }
  return report;
}

}  // namespace actkit
