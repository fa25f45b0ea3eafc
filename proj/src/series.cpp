#include "actkit/series.hpp"

#include <charconv>
#include <stdexcept>

namespace actkit {

SamplingInterval SamplingInterval::intraday(int minutes) {
  if (minutes < 1 || kSessionMinutes % minutes != 0)
    throw std::invalid_argument("intraday interval must divide " +
                                std::to_string(kSessionMinutes) + " minutes, got " +
                                std::to_string(minutes));
  return {Kind::intraday, minutes};
}

SamplingInterval SamplingInterval::multiday(int days) {
  if (days < 1)
    throw std::invalid_argument("multi-day interval must be >= 1 day");
  return {Kind::multiday, days};
}

SamplingInterval SamplingInterval::parse(std::string_view spec) {
  if (spec.size() < 2)
    throw std::invalid_argument("invalid interval spec: '" + std::string(spec) + "'");
  const char unit = spec.back();
  int n = 0;
  auto digits = spec.substr(0, spec.size() - 1);
  auto [p, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), n);
  if (ec != std::errc() || p != digits.data() + digits.size() || n < 1)
    throw std::invalid_argument("invalid interval spec: '" + std::string(spec) + "'");
  if (unit == 'm') return intraday(n);
  if (unit == 'd') return multiday(n);
  throw std::invalid_argument("invalid interval unit in '" + std::string(spec) +
                              "' (expected m or d)");
}

std::string SamplingInterval::label() const {
  return std::to_string(length) + (is_intraday() ? "m" : "d");
}

std::vector<double> ActivitySeries::values() const {
  std::vector<double> v;
  v.reserve(bins.size());
  for (const auto& b : bins) v.push_back(b.value);
  return v;
}

}  // namespace actkit
