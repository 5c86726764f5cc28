#pragma once

#include <cmath>
#include <cstddef>
#include <span>
#include <string>

#include "auh/code_tree.hpp"
#include "auh/distribution.hpp"
#include "auh/error.hpp"
#include "auh/rational.hpp"

namespace auh {

/// Average length, entropy and redundancy in bits per symbol. The average
/// length keeps the distribution's scalar type so it stays exact for
/// rationals; entropy and redundancy are always floating point.
template <class T>
struct Metrics {
  T average_length{};
  double entropy = 0.0;
  double redundancy = 0.0;
};

/// h(x) = -x log x - (1-x) log(1-x), with h(0) = h(1) = 0.
inline double binary_entropy(double x) {
  if (x <= 0.0 || x >= 1.0) return 0.0;
  return -x * std::log2(x) - (1.0 - x) * std::log2(1.0 - x);
}

template <class T>
double entropy(std::span<const T> probs) {
  double h = 0.0;
  for (const auto& p : probs) {
    const double x = to_double(p);
    if (x > 0.0) h -= x * std::log2(x);
  }
  return h;
}

template <class T>
double entropy(const Distribution<T>& dist) {
  return entropy(dist.probs());
}

template <class T>
T average_length(std::span<const T> probs, const LengthProfile& profile) {
  if (probs.size() != profile.size()) {
    throw DimensionMismatch("distribution has " + std::to_string(probs.size()) + " symbols, profile has " +
                            std::to_string(profile.size()));
  }
  T total = 0;
  for (std::size_t i = 0; i < probs.size(); ++i) total += probs[i] * T(profile[i]);
  return total;
}

template <class T>
Metrics<T> metrics(const Distribution<T>& dist, const LengthProfile& profile) {
  if (dist.size() != profile.size()) {
    throw DimensionMismatch("distribution has " + std::to_string(dist.size()) + " symbols, profile has " +
                            std::to_string(profile.size()));
  }
  if (kraft_sum(profile) > 1) throw DomainError("length profile violates the Kraft inequality");
  Metrics<T> m;
  m.average_length = average_length(dist.probs(), profile);
  m.entropy = entropy(dist);
  m.redundancy = to_double(m.average_length) - m.entropy;
  return m;
}

/// Metrics under the Huffman-optimal profile.
template <class T>
Metrics<T> huffman_metrics(const Distribution<T>& dist) {
  return metrics(dist, length_profile(build_huffman(dist)));
}

}  // namespace auh
