#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "auh/distribution.hpp"
#include "auh/error.hpp"
#include "auh/rational.hpp"

namespace auh {

/// Probabilities restricted to multiples of 1/resolution.
struct GridSpec {
  std::size_t n = 2;
  std::uint32_t resolution = 60;
};

/// Desk-scale default resolution for each alphabet size.
inline std::uint32_t default_resolution(std::size_t n) {
  switch (n) {
    case 2:
    case 3:
    case 4: return 60;
    case 5: return 40;
    case 6: return 24;
    default: return static_cast<std::uint32_t>(3 * n);
  }
}

inline void validate(const GridSpec& spec) {
  if (spec.n < 2) throw BadParam("grid needs n >= 2");
  if (spec.resolution < spec.n) {
    throw BadParam("grid resolution " + std::to_string(spec.resolution) + " is below n = " + std::to_string(spec.n));
  }
}

/// Smallest and largest admissible first part, c_1 in [ceil(m/n), m-(n-1)].
inline std::pair<std::int64_t, std::int64_t> first_part_range(const GridSpec& spec) {
  const auto n = static_cast<std::int64_t>(spec.n);
  const auto m = static_cast<std::int64_t>(spec.resolution);
  return {(m + n - 1) / n, m - (n - 1)};
}

namespace detail {

template <class Fn>
void compose(std::vector<std::int64_t>& parts, std::size_t pos, std::int64_t remaining, std::int64_t cap, Fn& fn) {
  const auto slots = static_cast<std::int64_t>(parts.size() - pos);
  if (slots == 1) {
    parts[pos] = remaining;
    fn(std::span<const std::int64_t>(parts));
    return;
  }
  const std::int64_t hi = std::min(cap, remaining - (slots - 1));
  const std::int64_t lo = (remaining + slots - 1) / slots;
  for (std::int64_t c = hi; c >= lo; --c) {
    parts[pos] = c;
    compose(parts, pos + 1, remaining - c, c, fn);
  }
}

}  // namespace detail

/// Calls fn(parts) for every c_1 >= ... >= c_n >= 1 with sum m and c_1 in
/// [first_lo, first_hi], in lexicographically decreasing order.
template <class Fn>
void for_each_sorted_composition(const GridSpec& spec, std::int64_t first_lo, std::int64_t first_hi, Fn&& fn) {
  validate(spec);
  const auto [lo, hi] = first_part_range(spec);
  first_lo = std::max(first_lo, lo);
  first_hi = std::min(first_hi, hi);
  std::vector<std::int64_t> parts(spec.n);
  const auto m = static_cast<std::int64_t>(spec.resolution);
  for (std::int64_t c = first_hi; c >= first_lo; --c) {
    parts[0] = c;
    detail::compose(parts, 1, m - c, c, fn);
  }
}

template <class Fn>
void for_each_sorted_composition(const GridSpec& spec, Fn&& fn) {
  const auto [lo, hi] = first_part_range(spec);
  for_each_sorted_composition(spec, lo, hi, std::forward<Fn>(fn));
}

inline Distribution<Rational> composition_to_distribution(std::span<const std::int64_t> parts, std::uint32_t m) {
  std::vector<Rational> values;
  values.reserve(parts.size());
  for (auto c : parts) values.emplace_back(c, m);
  return Distribution<Rational>::from_values(std::move(values));
}

/// Every grid point of the sorted simplex as an exact distribution.
inline std::vector<Distribution<Rational>> enumerate_sorted_simplex(const GridSpec& spec) {
  std::vector<Distribution<Rational>> out;
  for_each_sorted_composition(spec, [&](std::span<const std::int64_t> parts) {
    out.push_back(composition_to_distribution(parts, spec.resolution));
  });
  return out;
}

inline std::uint64_t count_sorted_compositions(const GridSpec& spec) {
  std::uint64_t count = 0;
  for_each_sorted_composition(spec, [&](std::span<const std::int64_t>) { ++count; });
  return count;
}

}  // namespace auh
