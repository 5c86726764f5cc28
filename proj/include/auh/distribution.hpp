#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <numeric>
#include <span>
#include <string>
#include <vector>

#include "auh/error.hpp"
#include "auh/rational.hpp"

namespace auh {

/// An ordered probability vector p_1 >= p_2 >= ... >= p_n > 0 summing to one.
///
/// Values are accepted in any order; they are sorted descending with a stable
/// permutation kept so callers can map sorted positions back to their input
/// symbols. Inputs within 1e-9 of unit mass are renormalized (exactly, for
/// rationals); anything further off is rejected.
template <class T>
class Distribution {
 public:
  using value_type = T;

  static constexpr double kNormalizationSlack = 1e-9;

  Distribution() = default;

  static Distribution from_values(std::vector<T> values) {
    if (values.size() < 2) {
      throw InvalidDistribution("a distribution needs at least 2 symbols, got " +
                                std::to_string(values.size()));
    }
    T total = 0;
    for (std::size_t i = 0; i < values.size(); ++i) {
      if (!(values[i] > 0)) {
        throw InvalidDistribution("probability " + std::to_string(i + 1) + " is not positive");
      }
      total += values[i];
    }
    const double deviation = std::abs(to_double(total) - 1.0);
    if (!(deviation <= kNormalizationSlack)) {
      throw InvalidDistribution("probabilities sum to " + std::to_string(to_double(total)) +
                                ", not 1");
    }
    if constexpr (is_exact_v<T>) {
      if (total != 1) {
        for (auto& v : values) v /= total;
      }
    } else {
      if (deviation > 1e-14) {
        for (auto& v : values) v /= total;
      }
    }

    Distribution d;
    d.order_.resize(values.size());
    std::iota(d.order_.begin(), d.order_.end(), std::size_t{0});
    std::stable_sort(d.order_.begin(), d.order_.end(),
                     [&](std::size_t a, std::size_t b) { return values[a] > values[b]; });
    d.probs_.reserve(values.size());
    for (auto idx : d.order_) d.probs_.push_back(values[idx]);
    return d;
  }

  [[nodiscard]] std::size_t size() const { return probs_.size(); }
  [[nodiscard]] std::span<const T> probs() const { return probs_; }
  [[nodiscard]] const T& operator[](std::size_t i) const { return probs_[i]; }

  /// permutation()[k] is the input position of the k-th largest probability.
  [[nodiscard]] std::span<const std::size_t> permutation() const { return order_; }

  [[nodiscard]] std::vector<double> as_doubles() const {
    std::vector<double> out;
    out.reserve(probs_.size());
    for (const auto& p : probs_) out.push_back(to_double(p));
    return out;
  }

  friend bool operator==(const Distribution& a, const Distribution& b) { return a.probs_ == b.probs_; }

 private:
  std::vector<T> probs_;
  std::vector<std::size_t> order_;
};

/// Exact rational image of a floating-point distribution (renormalized exactly).
inline Distribution<Rational> to_exact(const Distribution<double>& d) {
  std::vector<Rational> values;
  values.reserve(d.size());
  for (double p : d.probs()) values.emplace_back(p);
  return Distribution<Rational>::from_values(std::move(values));
}

inline Distribution<double> to_float(const Distribution<Rational>& d) {
  return Distribution<double>::from_values(d.as_doubles());
}

/// q[k] = p_{k+1} + ... + p_n in 1-based terms, i.e. the mass strictly below
/// the k-th spine node; q[0] is the total mass.
template <class T>
std::vector<T> suffix_masses(std::span<const T> p) {
  std::vector<T> q(p.size());
  T acc = 0;
  for (std::size_t k = p.size(); k-- > 0;) {
    acc += p[k];
    q[k] = acc;
  }
  return q;
}

}  // namespace auh
