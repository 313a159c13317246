#pragma once

#include <cstdint>
#include <initializer_list>
#include <random>

namespace nfipp {

// Deterministic random source. All draws are defined in terms of raw
// mt19937_64 output with hand-rolled transforms, so streams are reproducible
// across platforms and standard-library versions. Not thread-safe; each work
// unit owns its own instance.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}

  // Child stream keyed by (master, path...). Same inputs, same stream.
  static Rng derive(std::uint64_t master,
                    std::initializer_list<std::uint64_t> path);

  std::uint64_t next_u64() { return gen_(); }

  // Uniform on [0, 1) with 53-bit resolution.
  double uniform01() { return (next_u64() >> 11) * 0x1.0p-53; }

  double uniform(double lo, double hi) {
    return lo + (hi - lo) * uniform01();
  }

  // Uniform integer in [0, n). n must be > 0.
  std::uint64_t below(std::uint64_t n);

  // Poisson(mean) count. mean must be >= 0 and finite.
  std::int64_t poisson(double mean);

  static std::uint64_t mix64(std::uint64_t x);  // splitmix64 finalizer

 private:
  std::mt19937_64 gen_;
};

}  // namespace nfipp
