#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <random>
#include <vector>

#include "auh/distribution.hpp"
#include "auh/error.hpp"

namespace auh {

/// A random anti-uniform distribution, deterministic per seed.
///
/// Walks the spine top-down. At each node the split ratio s = p_k / q_{k-1}
/// is drawn uniformly from the interval that keeps the leaves sorted and
/// p_{k-1} >= q_k:
///   s in [max(lo, (1 - 2r) / (1 - r)), min(1, r / (1 - r)))
/// where r is the previous node's ratio and lo is 1/2 for the last split and
/// 1/3 otherwise.
inline Distribution<double> random_auh(std::size_t n, std::uint64_t seed) {
  if (n < 2) throw BadParam("random_auh needs n >= 2");
  std::mt19937_64 rng(seed);
  auto floor_for = [](std::size_t remaining) { return remaining == 2 ? 0.5 : 1.0 / 3.0; };

  std::vector<double> p;
  p.reserve(n);
  double rest = 1.0;
  double r = std::uniform_real_distribution<double>(floor_for(n), 1.0)(rng);
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (k > 0) {
      const double lo = std::max(floor_for(n - k), (1.0 - 2.0 * r) / (1.0 - r));
      const double hi = std::min(1.0, r / (1.0 - r));
      r = std::uniform_real_distribution<double>(lo, hi)(rng);
    }
    p.push_back(rest * r);
    rest *= 1.0 - r;
  }
  p.push_back(rest);
  return Distribution<double>::from_values(std::move(p));
}

}  // namespace auh
