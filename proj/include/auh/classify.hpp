#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "auh/code_tree.hpp"
#include "auh/distribution.hpp"
#include "auh/error.hpp"
#include "auh/metrics.hpp"
#include "auh/rational.hpp"

namespace auh {

enum class Classification { auh, not_auh };

/// q_1..q_{n-2}: the spine node masses, q_i = sum_{j>i} p_j.
template <class T>
std::vector<T> intermediate_probs(const Distribution<T>& dist) {
  const auto q = suffix_masses(dist.probs());
  // q[i] is the 1-based q_i; drop q_0 (total) and q_{n-1} (= p_n, a leaf).
  return std::vector<T>(q.begin() + 1, q.end() - 1);
}

/// True when the anti-uniform profile is optimal for the given weights
/// (sorted non-increasing, not necessarily normalized). Ties count as AUH.
template <class W>
bool is_auh_weights(std::span<const W> sorted_desc) {
  const std::size_t n = sorted_desc.size();
  if (n < 2) throw InvalidDistribution("classification needs at least 2 symbols");
  if (n == 2) return true;
  W auh_cost = 0;
  for (std::size_t i = 0; i + 1 < n; ++i) auh_cost += sorted_desc[i] * W(i + 1);
  auh_cost += sorted_desc[n - 1] * W(n - 1);
  return nearly_equal(auh_cost, huffman_cost(sorted_desc));
}

/// The structural condition p_i >= q_{i+1} for i = 1..n-2, checked in one pass.
template <class W>
bool satisfies_auh_structure(std::span<const W> sorted_desc) {
  const std::size_t n = sorted_desc.size();
  if (n < 2) throw InvalidDistribution("classification needs at least 2 symbols");
  W below = 0;
  for (std::size_t a = n; a-- > 2;) {
    below += sorted_desc[a];  // q_{a} in 1-based terms
    if (!less_or_nearly_equal(below, sorted_desc[a - 2])) return false;
  }
  return true;
}

template <class T>
Classification classify_auh(const Distribution<T>& dist) {
  return is_auh_weights(dist.probs()) ? Classification::auh : Classification::not_auh;
}

template <class T>
bool is_auh(const Distribution<T>& dist) {
  return classify_auh(dist) == Classification::auh;
}

template <class T>
struct Decomposition {
  Distribution<T> merged;   // leaves outside the subtree plus one super-leaf u
  Distribution<T> subtree;  // leaves under the node, each divided by u
  T u{};
};

/// Splits the anti-uniform tree at spine node `node_index` (1..n-2), whose
/// mass is u = q_{node_index}.
template <class T>
Decomposition<T> decompose(const Distribution<T>& dist, std::size_t node_index) {
  const std::size_t n = dist.size();
  if (n < 3 || node_index < 1 || node_index > n - 2) {
    throw InvalidNode("intermediate node index " + std::to_string(node_index) + " outside 1.." +
                      std::to_string(n >= 2 ? n - 2 : 0));
  }
  const auto p = dist.probs();
  T u = 0;
  for (std::size_t j = node_index; j < n; ++j) u += p[j];

  std::vector<T> outside(p.begin(), p.begin() + static_cast<std::ptrdiff_t>(node_index));
  outside.push_back(u);
  std::vector<T> inside;
  inside.reserve(n - node_index);
  for (std::size_t j = node_index; j < n; ++j) inside.push_back(p[j] / u);

  return Decomposition<T>{Distribution<T>::from_values(std::move(outside)),
                          Distribution<T>::from_values(std::move(inside)), std::move(u)};
}

}  // namespace auh
