#pragma once

#include <cstdint>
#include <random>

namespace jamsec {

// Reproducible random stream. mt19937_64 output is fixed by the standard;
// the variates below are computed here rather than through <random>
// distributions, whose algorithms differ between standard libraries.
class RngStream {
 public:
  explicit RngStream(std::uint64_t seed) : engine_(seed) {}

  // Independent stream for (seed, purpose, index) via splitmix64 mixing.
  static RngStream derive(std::uint64_t seed, std::uint64_t purpose,
                          std::uint64_t index = 0);

  // Uniform on [0, 1) with 53 random bits.
  double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

  bool bernoulli(double p) { return uniform() < p; }

  // Inverse transform; 1 - u lies in (0, 1].
  double exponential(double mean);

  // Standard normal via Box-Muller. Consumes two uniforms per call.
  double normal();

  // Marsaglia-Tsang, shape >= 1, unit scale.
  double gamma(double shape);

 private:
  std::mt19937_64 engine_;
};

std::uint64_t splitmix64(std::uint64_t x);

}  // namespace jamsec
