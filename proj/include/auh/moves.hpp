#pragma once

#include <algorithm>
#include <cstddef>
#include <string>
#include <vector>

#include "auh/classify.hpp"
#include "auh/distribution.hpp"
#include "auh/error.hpp"
#include "auh/rational.hpp"

// Mass-shifting moves on anti-uniform sources. Every move takes
// mass eps away from one leaf p_i and spreads it over the leaves below it in
// proportion to their size, which in split-ratio terms lowers a single ratio
// r_i = p_i / q_{i-1} and leaves the shape of the subtree under q_i intact.
//
// Indices are 1-based throughout, matching p_1 >= ... >= p_n and
// q_i = p_{i+1} + ... + p_n.

namespace auh {

namespace detail {

inline void check_fraction(double fraction) {
  if (!(fraction > 0.0 && fraction <= 1.0)) throw BadParam("move fraction must lie in (0, 1]");
}

template <class T>
T fraction_of(double fraction) {
  return T(fraction);
}

// p_i -= eps; p_k *= 1 + eps / q_i for k > i.
template <class T>
Distribution<T> shift_mass(std::span<const T> p, std::size_t i, const T& eps) {
  const auto q = suffix_masses(p);
  const T& below = q[i];
  std::vector<T> out(p.begin(), p.end());
  out[i - 1] -= eps;
  const T scale = 1 + eps / below;
  for (std::size_t k = i; k < out.size(); ++k) out[k] *= scale;
  return Distribution<T>::from_values(std::move(out));
}

// Split ratios r_1..r_{n-1}, r_k = p_k / q_{k-1} (0-based storage).
template <class T>
std::vector<T> split_ratios(std::span<const T> p) {
  const auto q = suffix_masses(p);
  std::vector<T> r;
  r.reserve(p.size() - 1);
  for (std::size_t k = 0; k + 1 < p.size(); ++k) r.push_back(p[k] / q[k]);
  return r;
}

template <class T>
std::vector<T> from_split_ratios(const std::vector<T>& r) {
  std::vector<T> p;
  p.reserve(r.size() + 1);
  T mass = 1;
  for (const auto& x : r) {
    p.push_back(mass * x);
    mass *= 1 - x;
  }
  p.push_back(mass);
  return p;
}

template <class T>
bool is_sorted_desc(const std::vector<T>& v) {
  for (std::size_t k = 1; k < v.size(); ++k) {
    if (!less_or_nearly_equal(v[k], v[k - 1])) return false;
  }
  return true;
}

}  // namespace detail

/// lemma2_move: when p_i > q_i, moves eps = fraction (p_i - q_i) / 2 from p_i
/// onto the leaves below it. Increases both the average length under the
/// anti-uniform profile and the entropy, and keeps the source anti-uniform.
/// At i = n-1 (q_{n-1} = p_n) the move evens out the two deepest leaves, which
/// share a depth: entropy rises and the average length is unchanged.
template <class T>
Distribution<T> lemma2_move(const Distribution<T>& dist, std::size_t i, double fraction) {
  detail::check_fraction(fraction);
  const std::size_t n = dist.size();
  if (i < 1 || i + 1 > n) throw BadParam("lemma2 index must lie in 1..n-1");
  const auto p = dist.probs();
  const auto q = suffix_masses(p);
  if (!(p[i - 1] > q[i])) throw MoveNotApplicable("p_i <= q_i at i = " + std::to_string(i));
  const T eps = detail::fraction_of<T>(fraction) * (p[i - 1] - q[i]) / 2;
  return detail::shift_mass(p, i, eps);
}

/// lemma3_move: when p_1 > q_2 >= p_2, moves eps = fraction (p_1 - q_2) / 2
/// from p_1 onto p_2..p_n pro rata. The p_2 <= q_2 requirement is what lemma2_move
/// leaves behind at i = 2; without it the re-sorted result can lose
/// length.
template <class T>
Distribution<T> lemma3_move(const Distribution<T>& dist, double fraction) {
  detail::check_fraction(fraction);
  const std::size_t n = dist.size();
  if (n < 3) throw MoveNotApplicable("lemma3 needs n >= 3");
  const auto p = dist.probs();
  const auto q = suffix_masses(p);
  if (!(p[0] > q[2])) throw MoveNotApplicable("p_1 <= q_2");
  if (!less_or_nearly_equal(p[1], q[2])) throw MoveNotApplicable("p_2 > q_2; apply lemma2 at i = 2 first");
  const T eps = detail::fraction_of<T>(fraction) * (p[0] - q[2]) / 2;
  return detail::shift_mass(p, 1, eps);
}

/// The entropy versions use the same mass shifts; entropy rises under
/// exactly the same conditions.
template <class T>
Distribution<T> entropy_lemma2_move(const Distribution<T>& dist, std::size_t i, double fraction) {
  return lemma2_move(dist, i, fraction);
}

template <class T>
Distribution<T> entropy_lemma3_move(const Distribution<T>& dist, double fraction) {
  return lemma3_move(dist, fraction);
}

/// lemma3_move applied inside the subtree rooted at spine node q_{level-1}:
/// when p_level > q_{level+1} >= p_{level+1}, lowers r_level by
/// fraction (p_level - q_{level+1}) / (2 q_{level-1}). Ancestors j < level
/// whose equality p_j = q_{j+1} held before the move, or whose constraint
/// p_j >= q_{j+1} the move would break, are re-solved to equality, walking
/// up until an ancestor is unaffected. At level 1 this is lemma3_move.
///
/// Throws MoveNotApplicable when the result would leave the anti-uniform
/// region. Unlike the top-level moves, no monotonicity is guaranteed; the
/// ascent checks each step.
template <class T>
Distribution<T> subtree_lemma3_move(const Distribution<T>& dist, std::size_t level, double fraction) {
  detail::check_fraction(fraction);
  const std::size_t n = dist.size();
  if (level < 1 || level + 2 > n) throw BadParam("subtree level must lie in 1..n-2");
  const auto p = dist.probs();
  const auto q = suffix_masses(p);
  if (!(p[level - 1] > q[level + 1])) throw MoveNotApplicable("p_level <= q_{level+1}");
  if (!less_or_nearly_equal(p[level], q[level + 1])) throw MoveNotApplicable("p_{level+1} > q_{level+1}");

  auto r = detail::split_ratios(p);
  std::vector<bool> tight(level, false);
  for (std::size_t j = 1; j < level; ++j) tight[j] = nearly_equal(p[j - 1], q[j + 1]);

  const T eps = detail::fraction_of<T>(fraction) * (p[level - 1] - q[level + 1]) / 2;
  r[level - 1] -= eps / q[level - 1];
  for (std::size_t j = level - 1; j >= 1; --j) {
    // p_j = q_{j+1}  <=>  r_j = (1 - r_{j+1}) / (2 - r_{j+1})
    const T need = (1 - r[j]) / (2 - r[j]);
    if (tight[j] || r[j - 1] < need) {
      r[j - 1] = need;
    } else {
      break;
    }
  }

  auto values = detail::from_split_ratios(r);
  if (!detail::is_sorted_desc(values) || !satisfies_auh_structure(std::span<const T>(values))) {
    throw MoveNotApplicable("subtree move leaves the anti-uniform region");
  }
  return Distribution<T>::from_values(std::move(values));
}

/// Splits the mass of the two deepest leaves evenly. Leaves the average length
/// unchanged and raises entropy.
template <class T>
Distribution<T> balance_move(const Distribution<T>& dist) {
  const std::size_t n = dist.size();
  const auto p = dist.probs();
  if (!(p[n - 2] > p[n - 1])) throw MoveNotApplicable("deepest pair already balanced");
  std::vector<T> out(p.begin(), p.end());
  const T mean = (p[n - 2] + p[n - 1]) / 2;
  out[n - 2] = mean;
  out[n - 1] = mean;
  return Distribution<T>::from_values(std::move(out));
}

enum class MoveKind { lemma2, subtree_lemma3, balance };

template <class T>
struct Violation {
  MoveKind kind = MoveKind::lemma2;
  std::size_t index = 0;  // i for lemma2, level for subtree lemma3, unused for balance
  T amount{};
};

/// Every move whose trigger exceeds `tol`, largest first (stable in the
/// order lemma2, subtree lemma3, balance and by index within each kind).
template <class T>
std::vector<Violation<T>> move_violations(const Distribution<T>& dist, const T& tol) {
  const std::size_t n = dist.size();
  const auto p = dist.probs();
  const auto q = suffix_masses(p);
  std::vector<Violation<T>> out;
  for (std::size_t i = 1; i + 2 <= n; ++i) {
    const T excess = p[i - 1] - q[i];
    if (excess > tol) out.push_back({MoveKind::lemma2, i, excess});
  }
  for (std::size_t level = 1; level + 2 <= n; ++level) {
    const T excess = p[level - 1] - q[level + 1];
    if (excess > tol && p[level] <= q[level + 1] + tol) out.push_back({MoveKind::subtree_lemma3, level, excess});
  }
  if (n >= 2) {
    const T excess = p[n - 2] - p[n - 1];
    if (excess > tol) out.push_back({MoveKind::balance, 0, excess});
  }
  std::stable_sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.amount > b.amount; });
  return out;
}

template <class T>
Distribution<T> apply_move(const Distribution<T>& dist, const Violation<T>& move, double fraction) {
  switch (move.kind) {
    case MoveKind::lemma2: return lemma2_move(dist, move.index, fraction);
    case MoveKind::subtree_lemma3: return subtree_lemma3_move(dist, move.index, fraction);
    case MoveKind::balance: return balance_move(dist);
  }
  throw BadParam("unknown move");
}

}  // namespace auh
