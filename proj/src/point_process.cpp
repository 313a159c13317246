#include "nfipp/point_process.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "nfipp/errors.hpp"

namespace nfipp {

void DailyCountSeries::validate() const {
  for (std::int64_t c : counts)
    if (c < 0)
      throw ArgumentError("DailyCountSeries: negative count for " + country);
}

void IntensitySeries::validate() const {
  for (double v : values)
    if (!(v >= 0.0) || !std::isfinite(v))
      throw ArgumentError("IntensitySeries: values must be finite and >= 0");
}

namespace point_process {

double poisson_log_pmf(std::int64_t k, double lambda, double tau) {
  if (k < 0) throw ArgumentError("poisson_log_pmf: k must be >= 0");
  if (!(lambda >= 0.0) || !std::isfinite(lambda))
    throw ArgumentError("poisson_log_pmf: lambda must be finite and >= 0");
  if (!(tau > 0.0) || !std::isfinite(tau))
    throw ArgumentError("poisson_log_pmf: tau must be finite and > 0");

  const double mean = lambda * tau;
  if (mean == 0.0)
    return k == 0 ? 0.0 : -std::numeric_limits<double>::infinity();
  const double kd = static_cast<double>(k);
  return kd * std::log(mean) - mean - std::lgamma(kd + 1.0);
}

double sequence_log_likelihood(const DailyCountSeries& counts,
                               const IntensitySeries& intensities,
                               double tau) {
  if (counts.size() != intensities.size() ||
      (!counts.empty() && counts.start != intensities.start))
    throw AlignmentError(
        "sequence_log_likelihood: series must share start date and length");

  double ll = 0.0;
  for (std::size_t i = 0; i < counts.size(); ++i)
    ll += poisson_log_pmf(counts.counts[i], intensities.values[i], tau);
  return ll;
}

std::int64_t sample_count(double lambda, double tau, Rng& rng) {
  if (!(lambda >= 0.0) || !std::isfinite(lambda))
    throw ArgumentError("sample_count: lambda must be finite and >= 0");
  if (!(tau > 0.0) || !std::isfinite(tau))
    throw ArgumentError("sample_count: tau must be finite and > 0");
  return rng.poisson(lambda * tau);
}

double expected_count(const IntensitySeries& intensities,
                      const DateRange& window) {
  if (intensities.empty() || !intensities.range().contains(window))
    throw RangeError("expected_count: window " + window.to_string() +
                     " outside series range");
  const std::size_t first = window.first - intensities.start;
  const std::size_t n = static_cast<std::size_t>(window.length());
  double acc = 0.0;
  for (std::size_t i = 0; i < n; ++i) acc += intensities.values[first + i];
  return acc;  // tau is one day, so the plain sum is the expected count
}

}  // namespace point_process
}  // namespace nfipp
