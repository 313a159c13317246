#pragma once

#include <cstdint>

#include "nfipp/rng.hpp"
#include "nfipp/series.hpp"

namespace nfipp::point_process {

// log P[N = k] for a Poisson(lambda*tau) count, computed via log-gamma so
// large k stays overflow-free. lambda == 0 is the exact degenerate limit:
// 0 for k == 0, -infinity for k > 0. The -infinity sentinel propagates
// through sums naturally.
// Throws ArgumentError on k < 0, lambda < 0, tau <= 0 or non-finite inputs.
double poisson_log_pmf(std::int64_t k, double lambda, double tau);

// Sum of per-day log pmfs over two aligned series (same start, same length).
// Empty pair gives 0. Throws AlignmentError on misalignment.
double sequence_log_likelihood(const DailyCountSeries& counts,
                               const IntensitySeries& intensities, double tau);

// Poisson(lambda*tau) draw; deterministic per Rng stream.
// Throws ArgumentError on lambda < 0 or tau <= 0.
std::int64_t sample_count(double lambda, double tau, Rng& rng);

// Sum of intensities over an inclusive day window, times the 1-day step.
// Throws RangeError when the window is not covered by the series.
double expected_count(const IntensitySeries& intensities,
                      const DateRange& window);

}  // namespace nfipp::point_process
