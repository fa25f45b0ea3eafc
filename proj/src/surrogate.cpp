#include "actkit/surrogate.hpp"

#include <cmath>
#include <complex>
#include <numbers>
#include <random>
#include <stdexcept>

#include "actkit/parallel.hpp"
#include "actkit/stats.hpp"

namespace actkit {

namespace {

bool is_power_of_two(std::size_t n) { return n != 0 && (n & (n - 1)) == 0; }

// In-place iterative radix-2 FFT (power-of-two length). sign = -1 forward,
// +1 inverse (unscaled).
void fft(std::vector<std::complex<double>>& a, int sign) {
  const std::size_t n = a.size();
  for (std::size_t i = 1, j = 0; i < n; ++i) {
    std::size_t bit = n >> 1;
    for (; j & bit; bit >>= 1) j ^= bit;
    j ^= bit;
    if (i < j) std::swap(a[i], a[j]);
  }
  for (std::size_t len = 2; len <= n; len <<= 1) {
    const double ang = sign * 2.0 * std::numbers::pi / static_cast<double>(len);
    const std::complex<double> w0(std::cos(ang), std::sin(ang));
    for (std::size_t i = 0; i < n; i += len) {
      std::complex<double> w(1.0, 0.0);
      for (std::size_t j = 0; j < len / 2; ++j) {
        const std::complex<double> u = a[i + j];
        const std::complex<double> v = a[i + j + len / 2] * w;
        a[i + j] = u + v;
        a[i + j + len / 2] = u - v;
        w *= w0;
      }
    }
  }
}

void check_spec(const SurrogateSpec& spec) {
  if (!is_power_of_two(spec.length) || spec.length < 8)
    throw std::invalid_argument("surrogate: length must be a power of two >= 8, got " +
                                std::to_string(spec.length));
  if (!(spec.target_hurst > 0.0 && spec.target_hurst < 1.0))
    throw std::invalid_argument("surrogate: target_hurst must lie in (0, 1), got " +
                                std::to_string(spec.target_hurst));
  if (spec.log_sigma < 0.0)
    throw std::invalid_argument("surrogate: log_sigma must be >= 0");
}

}  // namespace

std::uint64_t member_seed(std::uint64_t base, std::uint64_t index) {
  // splitmix64 finalizer
  std::uint64_t z = base + index * 0x9e3779b97f4a7c15ULL + 0x9e3779b97f4a7c15ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

std::vector<double> correlated_noise(const SurrogateSpec& spec) {
  check_spec(spec);
  const std::size_t n = spec.length;
  const std::size_t half = n / 2;
  // S(f) ~ f^-(2H-1): spectral amplitudes scale as f^-(H-1/2)
  const double amp_exp = -(spec.target_hurst - 0.5);

  std::mt19937_64 rng(spec.seed);
  std::normal_distribution<double> gauss(0.0, 1.0);

  std::vector<std::complex<double>> spectrum(n, {0.0, 0.0});
  const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
  for (std::size_t k = 1; k < half; ++k) {
    const double f = static_cast<double>(k) / static_cast<double>(n);
    const double amp = std::pow(f, amp_exp);
    const double re = gauss(rng) * amp * inv_sqrt2;
    const double im = gauss(rng) * amp * inv_sqrt2;
    spectrum[k] = {re, im};
    spectrum[n - k] = {re, -im};
  }
  {
    const double f = 0.5;
    spectrum[half] = {gauss(rng) * std::pow(f, amp_exp), 0.0};
  }

  fft(spectrum, +1);

  std::vector<double> x(n);
  for (std::size_t i = 0; i < n; ++i) x[i] = spectrum[i].real();

  // standardize: spectrum[0] = 0 makes the mean zero already, up to rounding
  const double m = mean(x);
  const double sd = stddev_pop(x);
  if (sd == 0.0) throw std::runtime_error("surrogate: degenerate noise realization");
  for (double& v : x) v = (v - m) / sd;
  return x;
}

std::vector<double> lognormal_activity(const SurrogateSpec& spec) {
  std::vector<double> x = correlated_noise(spec);
  for (double& v : x) v = std::exp(spec.log_mu + spec.log_sigma * v);
  return x;
}

RelationExperiment relation_experiment(std::span<const double> h_targets,
                                       std::size_t ensemble, const SurrogateSpec& spec,
                                       const DfaConfig& dfa_config, int threads) {
  if (!h_targets.empty()) {
    if (ensemble < 16)
      throw std::invalid_argument("relation_experiment: ensemble must be >= 16");
    if (spec.length < (1u << 14))
      throw std::invalid_argument("relation_experiment: length must be >= 2^14");
  }

  RelationExperiment experiment;
  experiment.ensemble = ensemble;
  experiment.length = spec.length;

  for (std::size_t row_idx = 0; row_idx < h_targets.size(); ++row_idx) {
    RelationRow row;
    row.target_hurst = h_targets[row_idx];
    try {
      struct Member {
        double hurst = 0.0;
        GrowthObservations obs;
      };
      std::vector<Member> members(ensemble);
      parallel_for(ensemble, threads, [&](std::size_t j) {
        SurrogateSpec member_spec = spec;
        member_spec.target_hurst = row.target_hurst;
        member_spec.seed = member_seed(spec.seed, row_idx * ensemble + j);
        const std::vector<double> activity = lognormal_activity(member_spec);
        members[j].hurst = dfa(activity, dfa_config).fit.hurst;
        members[j].obs = growth_rates(activity);
      });

      std::vector<double> hs;
      GrowthObservations pooled;
      for (auto& m : members) {
        hs.push_back(m.hurst);
        pooled.merge(m.obs);
      }
      row.mean_hurst = mean(hs);
      row.stderr_hurst = stddev_pop(hs) / std::sqrt(static_cast<double>(hs.size()));
      row.one_minus_hurst = 1.0 - row.mean_hurst;
      const BinnedStat stat = conditional_stats(pooled);
      const PowerLawFit fit = fit_beta(stat);
      row.beta = fit.exponent;
      row.stderr_beta = fit.stderr_exponent;
      row.members_ok = hs.size();
    } catch (const std::exception& e) {
      row.error = e.what();
    }
    experiment.rows.push_back(std::move(row));
  }
  return experiment;
}

}  // namespace actkit
