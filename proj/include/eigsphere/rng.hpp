#pragma once

#include <cmath>
#include <cstdint>
#include <random>
#include <vector>

namespace eigsphere {

/// Seed for the substream of `index` under a master seed (splitmix64 mix).
/// Workers derive their generators from this so results do not depend on
/// thread count or scheduling.
inline std::uint64_t substream_seed(std::uint64_t master, std::uint64_t index) {
  std::uint64_t z = master + 0x9E3779B97F4A7C15ULL * (index + 1);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

using Rng = std::mt19937_64;

inline Rng make_rng(std::uint64_t master, std::uint64_t index) {
  return Rng(substream_seed(master, index));
}

inline std::vector<double> gaussian_vector(Rng& rng, std::size_t n) {
  std::normal_distribution<double> normal(0.0, 1.0);
  std::vector<double> v(n);
  for (auto& x : v) x = normal(rng);
  return v;
}

/// Uniform point on the unit sphere S^{n-1} in R^n.
inline std::vector<double> random_sphere_point(Rng& rng, std::size_t n) {
  for (;;) {
    auto v = gaussian_vector(rng, n);
    double s = 0.0;
    for (double x : v) s += x * x;
    if (s < 1e-24) continue;
    const double inv = 1.0 / std::sqrt(s);
    for (auto& x : v) x *= inv;
    return v;
  }
}

}  // namespace eigsphere
