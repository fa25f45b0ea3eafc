#include "actkit/dfa.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "actkit/parallel.hpp"
#include "actkit/stats.hpp"

namespace actkit {

namespace {

// Gaussian elimination with partial pivoting; a is (m x m) row-major,
// b the right-hand side, solution written to b.
void solve_small(std::vector<double>& a, std::vector<double>& b, std::size_t m) {
  for (std::size_t col = 0; col < m; ++col) {
    std::size_t pivot = col;
    for (std::size_t r = col + 1; r < m; ++r)
      if (std::abs(a[r * m + col]) > std::abs(a[pivot * m + col])) pivot = r;
    if (a[pivot * m + col] == 0.0)
      throw std::runtime_error("dfa: singular detrending system");
    if (pivot != col) {
      for (std::size_t c = 0; c < m; ++c) std::swap(a[col * m + c], a[pivot * m + c]);
      std::swap(b[col], b[pivot]);
    }
    const double inv = 1.0 / a[col * m + col];
    for (std::size_t r = col + 1; r < m; ++r) {
      const double f = a[r * m + col] * inv;
      if (f == 0.0) continue;
      for (std::size_t c = col; c < m; ++c) a[r * m + c] -= f * a[col * m + c];
      b[r] -= f * b[col];
    }
  }
  for (std::size_t col = m; col-- > 0;) {
    double s = b[col];
    for (std::size_t c = col + 1; c < m; ++c) s -= a[col * m + c] * b[c];
    b[col] = s / a[col * m + col];
  }
}

// Detrends one window of the profile in place of accumulation: returns the
// sum of squared residuals of the order-p least-squares polynomial.
// `basis` holds the scaled abscissa powers, row i = (1, u_i, ..., u_i^p).
double window_ssr(const double* y, std::size_t len, int order,
                  const std::vector<double>& basis,
                  const std::vector<double>& gram) {
  const std::size_t m = static_cast<std::size_t>(order) + 1;
  std::vector<double> a = gram;  // solve mutates
  std::vector<double> rhs(m, 0.0);
  for (std::size_t i = 0; i < len; ++i) {
    const double* row = &basis[i * m];
    for (std::size_t j = 0; j < m; ++j) rhs[j] += row[j] * y[i];
  }
  solve_small(a, rhs, m);
  double ssr = 0.0;
  for (std::size_t i = 0; i < len; ++i) {
    const double* row = &basis[i * m];
    double fit = 0.0;
    for (std::size_t j = 0; j < m; ++j) fit += rhs[j] * row[j];
    const double r = y[i] - fit;
    ssr += r * r;
  }
  return ssr;
}

}  // namespace

std::vector<double> profile(std::span<const double> x) {
  if (x.size() < 4) throw std::invalid_argument("profile: need >= 4 points");
  CompensatedSum total;
  for (double v : x) total.add(v);
  const double m = total.value() / static_cast<double>(x.size());
  std::vector<double> y(x.size());
  CompensatedSum running;
  for (std::size_t i = 0; i < x.size(); ++i) {
    running.add(x[i] - m);
    y[i] = running.value();
  }
  return y;
}

std::vector<std::size_t> window_sizes(std::size_t n, const DfaConfig& config) {
  const std::size_t min_w = config.effective_min_window();
  const std::size_t max_w = config.max_window ? config.max_window : n / 4;
  if (config.windows_per_decade < 1)
    throw std::invalid_argument("dfa: windows_per_decade must be >= 1");
  if (min_w <= static_cast<std::size_t>(config.detrend_order) + 1)
    throw std::invalid_argument("dfa: min_window must exceed detrend_order + 1");
  if (max_w < min_w)
    throw std::invalid_argument("dfa: series too short for the window range");

  std::vector<std::size_t> windows;
  const double step = 1.0 / static_cast<double>(config.windows_per_decade);
  for (int k = 0;; ++k) {
    const double w = static_cast<double>(min_w) * std::pow(10.0, step * k);
    const auto l = static_cast<std::size_t>(std::llround(w));
    if (l > max_w) break;
    if (windows.empty() || l != windows.back()) windows.push_back(l);
  }
  return windows;
}

std::vector<DfaPoint> fluctuation_function(std::span<const double> x,
                                           const DfaConfig& config,
                                           std::span<const std::size_t> windows) {
  const std::size_t n = x.size();
  const int order = config.detrend_order;
  if (order < 1) throw std::invalid_argument("dfa: detrend_order must be >= 1");
  const auto [mn, mx] = std::minmax_element(x.begin(), x.end());
  if (*mn == *mx) throw std::runtime_error("dfa: constant series is degenerate");

  const std::vector<double> y = profile(x);
  const std::size_t m = static_cast<std::size_t>(order) + 1;

  std::vector<DfaPoint> points;
  points.reserve(windows.size());
  std::vector<double> basis;
  std::vector<double> gram;
  for (const std::size_t len : windows) {
    if (len < m + 1 || len > n)
      throw std::invalid_argument("dfa: window " + std::to_string(len) +
                                  " invalid for order " + std::to_string(order) +
                                  " and length " + std::to_string(n));
    // Abscissa centered on the window and scaled to [-0.5, 0.5], which keeps
    // the normal equations well conditioned for small orders.
    basis.assign(len * m, 0.0);
    for (std::size_t i = 0; i < len; ++i) {
      const double u =
          (static_cast<double>(i) - 0.5 * static_cast<double>(len - 1)) /
          static_cast<double>(len);
      double p = 1.0;
      for (std::size_t j = 0; j < m; ++j) {
        basis[i * m + j] = p;
        p *= u;
      }
    }
    gram.assign(m * m, 0.0);
    for (std::size_t i = 0; i < len; ++i)
      for (std::size_t j = 0; j < m; ++j)
        for (std::size_t k = j; k < m; ++k)
          gram[j * m + k] += basis[i * m + j] * basis[i * m + k];
    for (std::size_t j = 0; j < m; ++j)
      for (std::size_t k = 0; k < j; ++k) gram[j * m + k] = gram[k * m + j];

    const std::size_t segments = n / len;
    CompensatedSum ssr;
    for (std::size_t s = 0; s < segments; ++s)
      ssr.add(window_ssr(&y[s * len], len, order, basis, gram));
    for (std::size_t s = 0; s < segments; ++s)
      ssr.add(window_ssr(&y[n - (s + 1) * len], len, order, basis, gram));

    const double denom = static_cast<double>(2 * segments * len);
    points.push_back({len, std::sqrt(std::max(0.0, ssr.value()) / denom)});
  }
  return points;
}

std::vector<DfaPoint> fluctuation_function(std::span<const double> x,
                                           const DfaConfig& config) {
  const std::size_t min_w = config.effective_min_window();
  if (x.size() < 4 * min_w)
    throw std::invalid_argument("dfa: series length " + std::to_string(x.size()) +
                                " below 4 * min_window = " + std::to_string(4 * min_w));
  return fluctuation_function(x, config, window_sizes(x.size(), config));
}

HurstFit hurst(std::span<const DfaPoint> points, double lo, double hi) {
  HurstFit fit;
  fit.lo = lo;
  fit.hi = hi;
  std::vector<double> lx, ly;
  for (const auto& p : points) {
    const double l = static_cast<double>(p.window);
    if (lo != 0.0 && l < lo) continue;
    if (hi != 0.0 && l > hi) continue;
    if (p.fluctuation <= 0.0) {
      ++fit.excluded_zero_f;
      continue;
    }
    lx.push_back(std::log(l));
    ly.push_back(std::log(p.fluctuation));
  }
  if (lx.size() < 4)
    throw std::runtime_error("hurst: need >= 4 usable points in range, have " +
                             std::to_string(lx.size()));
  const LineFit line = fit_line(lx, ly);
  fit.hurst = line.slope;
  fit.stderr_hurst = line.slope_stderr;
  fit.points_used = lx.size();
  if (lo == 0.0 && hi == 0.0) {
    fit.lo = static_cast<double>(points.front().window);
    fit.hi = static_cast<double>(points.back().window);
  }
  return fit;
}

DfaResult dfa(std::span<const double> x, const DfaConfig& config) {
  DfaResult result;
  result.points = fluctuation_function(x, config);
  result.fit = hurst(result.points, config.fit_lo, config.fit_hi);
  return result;
}

HurstCrossSection hurst_cross_section(const Universe& universe,
                                      const std::map<std::string, double>& daily_mean_value,
                                      const DfaConfig& config, int threads) {
  if (universe.size() < 2)
    throw std::invalid_argument("hurst_cross_section: need >= 2 instruments");

  std::vector<const ActivitySeries*> series;
  series.reserve(universe.size());
  for (const auto& [sym, s] : universe) series.push_back(&s);

  struct Slot {
    bool ok = false;
    DfaResult result;
    std::string error;
  };
  std::vector<Slot> slots(series.size());

  parallel_for(series.size(), threads, [&](std::size_t i) {
    try {
      std::vector<double> values = series[i]->values();
      if (config.log_transform) {
        for (double& v : values) {
          if (v <= 0.0)
            throw std::runtime_error("log transform undefined on zero-activity bins");
          v = std::log(v);
        }
      }
      slots[i].result = dfa(values, config);
      slots[i].ok = true;
    } catch (const std::exception& e) {
      slots[i].error = e.what();
    }
  });

  HurstCrossSection cross;
  std::vector<double> hs;
  for (std::size_t i = 0; i < series.size(); ++i) {
    const std::string& sym = series[i]->symbol;
    if (!slots[i].ok) {
      cross.failures.emplace_back(sym, slots[i].error);
      continue;
    }
    auto it = daily_mean_value.find(sym);
    if (it == daily_mean_value.end()) {
      cross.failures.emplace_back(sym, "no daily <V> for symbol");
      continue;
    }
    InstrumentHurst row;
    row.symbol = sym;
    row.hurst = slots[i].result.fit.hurst;
    row.stderr_hurst = slots[i].result.fit.stderr_hurst;
    row.mean_daily_value = it->second;
    cross.rows.push_back(row);
    cross.details.emplace(sym, std::move(slots[i].result));
    hs.push_back(row.hurst);
  }

  if (hs.size() < 2)
    throw std::runtime_error("hurst_cross_section: fewer than 2 instruments succeeded");
  cross.low_n = hs.size() < 10;
  cross.mean_hurst = mean(hs);
  cross.sd_hurst = stddev_pop(hs);
  if (cross.sd_hurst > 0.0) {
    std::vector<double> z(hs.size());
    for (std::size_t i = 0; i < hs.size(); ++i)
      z[i] = (hs[i] - cross.mean_hurst) / cross.sd_hurst;
    cross.ks = ks_standard_normal(std::move(z));
  } else {
    cross.ks = std::numeric_limits<double>::quiet_NaN();
  }
  return cross;
}

HurstSizeRelation hurst_vs_size(const HurstCrossSection& cross, int bins_per_decade) {
  if (bins_per_decade < 1)
    throw std::invalid_argument("hurst_vs_size: bins_per_decade must be >= 1");
  if (cross.rows.size() < 3)
    throw std::invalid_argument("hurst_vs_size: need >= 3 instruments");

  double lo = cross.rows[0].mean_daily_value, hi = lo;
  for (const auto& r : cross.rows) {
    if (!(r.mean_daily_value > 0.0))
      throw std::runtime_error("hurst_vs_size: nonpositive <V> for " + r.symbol);
    lo = std::min(lo, r.mean_daily_value);
    hi = std::max(hi, r.mean_daily_value);
  }
  if (lo == hi)
    throw std::runtime_error("hurst_vs_size: degenerate <V> spread");

  const double log_lo = std::log10(lo);
  const double log_hi = std::log10(hi);
  const auto bins = static_cast<std::size_t>(std::max<double>(
      1.0, std::ceil((log_hi - log_lo) * static_cast<double>(bins_per_decade) - 1e-12)));
  const double width = (log_hi - log_lo) / static_cast<double>(bins);

  struct Accum {
    std::int64_t n = 0;
    double sum_h = 0.0, sumsq_h = 0.0, sum_lnv = 0.0;
  };
  std::vector<Accum> acc(bins);
  for (const auto& r : cross.rows) {
    const double u = std::log10(r.mean_daily_value);
    std::size_t idx = u >= log_hi ? bins - 1 : static_cast<std::size_t>((u - log_lo) / width);
    if (idx >= bins) idx = bins - 1;
    acc[idx].n += 1;
    acc[idx].sum_h += r.hurst;
    acc[idx].sumsq_h += r.hurst * r.hurst;
    acc[idx].sum_lnv += std::log(r.mean_daily_value);
  }

  HurstSizeRelation rel;
  std::vector<double> x, y;
  for (std::size_t i = 0; i < bins; ++i) {
    if (acc[i].n == 0) continue;
    HurstSizeBin bin;
    const double n = static_cast<double>(acc[i].n);
    bin.center = std::pow(10.0, log_lo + width * (static_cast<double>(i) + 0.5));
    bin.count = acc[i].n;
    bin.mean_hurst = acc[i].sum_h / n;
    bin.sd_hurst = std::sqrt(std::max(0.0, acc[i].sumsq_h / n - bin.mean_hurst * bin.mean_hurst));
    bin.mean_log_value = acc[i].sum_lnv / n;
    rel.bins.push_back(bin);
    x.push_back(bin.mean_log_value);
    y.push_back(bin.mean_hurst);
  }
  if (rel.bins.size() < 3)
    throw std::runtime_error("hurst_vs_size: need >= 3 occupied bins, have " +
                             std::to_string(rel.bins.size()));
  const LineFit line = fit_line(x, y);
  rel.slope = line.slope;
  rel.intercept = line.intercept;
  rel.stderr_slope = line.slope_stderr;
  return rel;
}

}  // namespace actkit
