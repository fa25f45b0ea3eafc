#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "actkit/dfa.hpp"
#include "actkit/growth.hpp"

namespace actkit {

struct SurrogateSpec {
  std::size_t length = 1 << 16;  // must be a power of two
  double target_hurst = 0.75;    // in (0, 1)
  double log_mu = 0.0;
  double log_sigma = 1.0;
  std::uint64_t seed = 0;
};

// Seed for ensemble member `index`: base + index mixed through the splitmix64
// finalizer, so members are decorrelated and reproducible.
std::uint64_t member_seed(std::uint64_t base, std::uint64_t index);

// Zero-mean unit-variance Gaussian series with power spectrum ~ f^-(2H-1),
// built by Fourier filtering of white Gaussian amplitudes. Bit-deterministic
// given the seed.
std::vector<double> correlated_noise(const SurrogateSpec& spec);

// exp(log_mu + log_sigma * correlated_noise): log-normal marginal with the
// requested moments, long-range correlations set by target_hurst.
std::vector<double> lognormal_activity(const SurrogateSpec& spec);

struct RelationRow {
  double target_hurst = 0.0;
  double mean_hurst = 0.0;
  double stderr_hurst = 0.0;
  double beta = 0.0;
  double stderr_beta = 0.0;
  double one_minus_hurst = 0.0;
  std::size_t members_ok = 0;
  std::string error;  // nonempty when the row failed
};

struct RelationExperiment {
  std::vector<RelationRow> rows;
  std::size_t ensemble = 0;
  std::size_t length = 0;
};

// For each target H: generate an ensemble of log-normal activity surrogates,
// measure H per member with DFA and beta from the pooled growth statistics,
// and tabulate beta next to 1 - H. Member failures fail the row, not the
// experiment. Requires ensemble >= 16 and length >= 2^14.
RelationExperiment relation_experiment(std::span<const double> h_targets,
                                       std::size_t ensemble, const SurrogateSpec& spec,
                                       const DfaConfig& dfa_config = {},
                                       int threads = 0);

}  // namespace actkit
