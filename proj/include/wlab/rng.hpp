#pragma once

#include <cstdint>
#include <random>

namespace wlab {

// Deterministic uniform generator; the raw engine output is mapped to doubles
// directly so streams are reproducible independent of library distributions.
struct Rng {
  std::mt19937_64 eng;

  explicit Rng(std::uint64_t seed) : eng(seed) {}

  double uniform(double a, double b) {
    const double u = static_cast<double>(eng() >> 11) * 0x1.0p-53;
    return a + (b - a) * u;
  }
  int uniform_int(int lo, int hi) {  // inclusive
    return lo + static_cast<int>(eng() % static_cast<std::uint64_t>(hi - lo + 1));
  }
};

}  // namespace wlab
