#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <thread>
#include <vector>

#include "auh/bounds.hpp"
#include "auh/classify.hpp"
#include "auh/code_tree.hpp"
#include "auh/distribution.hpp"
#include "auh/error.hpp"
#include "auh/grid.hpp"
#include "auh/rational.hpp"

namespace auh {

enum class Objective { avg_length, entropy };

inline std::string_view to_string(Objective objective) {
  return objective == Objective::avg_length ? "avg_length" : "entropy";
}

/// Accepts "length"/"avg_length" and "entropy".
inline Objective parse_objective(std::string_view name) {
  if (name == "length" || name == "avg_length") return Objective::avg_length;
  if (name == "entropy") return Objective::entropy;
  throw BadParam("unknown objective '" + std::string(name) + "'");
}

/// Outcome of a grid or ascent search. Exact fields are set when the search
/// ran in rational arithmetic (grid search on the length objective).
struct SearchReport {
  Objective objective = Objective::avg_length;
  std::string method;  // "grid" or "ascent"
  std::size_t n = 0;
  std::uint32_t resolution = 0;  // grid only
  std::uint64_t seed = 0;        // ascent only

  std::vector<Rational> best_exact;  // grid only
  std::vector<double> best;
  double best_value = 0.0;
  std::optional<Rational> best_value_exact;
  double bound = 0.0;
  std::optional<Rational> bound_exact;
  double gap = 0.0;
  std::optional<Rational> gap_exact;

  std::uint64_t evaluated = 0;
  std::uint64_t maximizers = 0;  // grid only: points attaining best_value
  std::uint64_t iterations = 0;  // ascent only
  std::string termination;       // ascent only: "converged" or "stationary"

  /// No point may exceed the bound beyond float noise.
  [[nodiscard]] bool within_bound() const {
    if (gap_exact) return *gap_exact >= 0;
    return gap >= -1e-12;
  }
};

namespace detail {

struct GridBest {
  bool found = false;
  std::int64_t length_score = 0;  // sum c_i l_i
  double entropy = 0.0;
  std::vector<std::int64_t> parts;
  std::uint64_t ties = 0;
  std::uint64_t evaluated = 0;

  // Larger value wins; equal values keep the lexicographically smaller point.
  void offer(Objective objective, std::int64_t score, double h, std::span<const std::int64_t> point) {
    ++evaluated;
    int cmp = 0;
    if (!found) {
      cmp = 1;
    } else if (objective == Objective::avg_length) {
      cmp = score > length_score ? 1 : (score < length_score ? -1 : 0);
    } else {
      cmp = h > entropy ? 1 : (h < entropy ? -1 : 0);
    }
    if (cmp > 0) {
      found = true;
      length_score = score;
      entropy = h;
      parts.assign(point.begin(), point.end());
      ties = 1;
    } else if (cmp == 0) {
      ++ties;
      if (std::lexicographical_compare(point.begin(), point.end(), parts.begin(), parts.end())) {
        parts.assign(point.begin(), point.end());
      }
    }
  }

  void merge(Objective objective, const GridBest& other) {
    evaluated += other.evaluated;
    if (!other.found) return;
    if (!found) {
      const auto keep = evaluated;
      *this = other;
      evaluated = keep;
      return;
    }
    const bool better = objective == Objective::avg_length ? other.length_score > length_score : other.entropy > entropy;
    const bool equal = objective == Objective::avg_length ? other.length_score == length_score : other.entropy == entropy;
    if (better) {
      length_score = other.length_score;
      entropy = other.entropy;
      parts = other.parts;
      ties = other.ties;
    } else if (equal) {
      ties += other.ties;
      if (std::lexicographical_compare(other.parts.begin(), other.parts.end(), parts.begin(), parts.end())) {
        parts = other.parts;
      }
    }
  }
};

}  // namespace detail

/// Exhaustive maximization of the objective over anti-uniform grid points.
///
/// Each point is first gated by the classifier, then scored under the fixed
/// profile (1, ..., n-1, n-1). Work is split over first-part values; the
/// result does not depend on `workers`.
inline SearchReport brute_force_max(const GridSpec& spec, Objective objective, unsigned workers = 1) {
  validate(spec);
  const std::size_t n = spec.n;
  const std::uint32_t m = spec.resolution;
  const auto profile = auh_profile(n);

  // c log2 c for every part size, so entropy is log2 m - (1/m) sum c log2 c.
  std::vector<double> clogc(m + 1, 0.0);
  for (std::uint32_t c = 1; c <= m; ++c) clogc[c] = c * std::log2(static_cast<double>(c));
  const double log_m = std::log2(static_cast<double>(m));

  const auto [first_lo, first_hi] = first_part_range(spec);
  workers = std::max(1U, std::min<unsigned>(workers, static_cast<unsigned>(first_hi - first_lo + 1)));
  std::vector<detail::GridBest> partial(workers);

  auto run = [&](unsigned worker) {
    auto& best = partial[worker];
    for (std::int64_t first = first_hi - worker; first >= first_lo; first -= workers) {
      for_each_sorted_composition(spec, first, first, [&](std::span<const std::int64_t> parts) {
        if (!is_auh_weights(parts)) return;
        std::int64_t score = 0;
        double sum_clogc = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
          score += parts[i] * static_cast<std::int64_t>(profile[i]);
          sum_clogc += clogc[static_cast<std::size_t>(parts[i])];
        }
        const double h = objective == Objective::entropy ? log_m - sum_clogc / m : 0.0;
        best.offer(objective, score, h, parts);
      });
    }
  };

  if (workers == 1) {
    run(0);
  } else {
    std::vector<std::jthread> threads;
    threads.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) threads.emplace_back(run, w);
  }

  detail::GridBest total;
  for (const auto& part : partial) total.merge(objective, part);
  if (!total.found) {
    throw EmptyFeasibleSet("no anti-uniform point on the n=" + std::to_string(n) + ", m=" + std::to_string(m) +
                           " grid");
  }

  SearchReport report;
  report.objective = objective;
  report.method = "grid";
  report.n = n;
  report.resolution = m;
  for (auto c : total.parts) {
    report.best_exact.emplace_back(c, m);
    report.best.push_back(static_cast<double>(c) / m);
  }
  report.evaluated = total.evaluated;
  report.maximizers = total.ties;
  if (objective == Objective::avg_length) {
    const Rational value(total.length_score, m);
    const Rational bound = l_max(n);
    report.best_value_exact = value;
    report.bound_exact = bound;
    report.gap_exact = bound - value;
    report.best_value = to_double(value);
    report.bound = to_double(bound);
    report.gap = to_double(*report.gap_exact);
  } else {
    report.best_value = total.entropy;
    report.bound = h_max(n);
    report.gap = report.bound - report.best_value;
  }
  return report;
}

}  // namespace auh
