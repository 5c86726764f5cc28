#pragma once

#include <cstddef>
#include <deque>
#include <queue>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "auh/distribution.hpp"
#include "auh/error.hpp"
#include "auh/rational.hpp"

namespace auh {

/// Codeword lengths l_1..l_n aligned with symbol order.
struct LengthProfile {
  std::vector<unsigned> lengths;

  [[nodiscard]] std::size_t size() const { return lengths.size(); }
  [[nodiscard]] unsigned operator[](std::size_t i) const { return lengths[i]; }
  friend bool operator==(const LengthProfile&, const LengthProfile&) = default;
};

/// The anti-uniform profile (1, 2, ..., n-2, n-1, n-1).
inline LengthProfile auh_profile(std::size_t n) {
  if (n < 2) throw InvalidDistribution("AUH profile needs n >= 2");
  LengthProfile out;
  out.lengths.resize(n);
  for (std::size_t i = 0; i + 1 < n; ++i) out.lengths[i] = static_cast<unsigned>(i + 1);
  out.lengths[n - 1] = static_cast<unsigned>(n - 1);
  return out;
}

/// Sum of 2^-l_i, exact.
inline Rational kraft_sum(const LengthProfile& profile) {
  unsigned longest = 0;
  for (auto l : profile.lengths) longest = std::max(longest, l);
  BigInt numerator = 0;
  for (auto l : profile.lengths) numerator += BigInt(1) << (longest - l);
  return Rational(numerator, BigInt(1) << longest);
}

/// Binary code tree. Leaves carry a symbol index (0-based, aligned with the
/// distribution's sorted order); internal nodes carry the sum of their
/// children's weights. Edge 0 goes to `left`, edge 1 to `right`.
template <class T>
class CodeTree {
 public:
  struct Node {
    T weight{};
    int left = -1;
    int right = -1;
    int symbol = -1;

    [[nodiscard]] bool is_leaf() const { return symbol >= 0; }
  };

  CodeTree() = default;
  CodeTree(std::vector<Node> nodes, std::size_t leaves) : nodes_(std::move(nodes)), leaves_(leaves) {}

  [[nodiscard]] std::span<const Node> nodes() const { return nodes_; }
  [[nodiscard]] const Node& root() const { return nodes_.back(); }
  [[nodiscard]] int root_index() const { return static_cast<int>(nodes_.size()) - 1; }
  [[nodiscard]] std::size_t leaf_count() const { return leaves_; }

  /// Codeword of every symbol, as strings of '0'/'1'.
  [[nodiscard]] std::vector<std::string> codewords() const {
    std::vector<std::string> out(leaves_);
    std::vector<std::pair<int, std::string>> stack{{root_index(), std::string{}}};
    while (!stack.empty()) {
      auto [idx, prefix] = std::move(stack.back());
      stack.pop_back();
      const Node& node = nodes_[static_cast<std::size_t>(idx)];
      if (node.is_leaf()) {
        out[static_cast<std::size_t>(node.symbol)] = prefix;
        continue;
      }
      stack.emplace_back(node.left, prefix + '0');
      stack.emplace_back(node.right, prefix + '1');
    }
    return out;
  }

 private:
  std::vector<Node> nodes_;
  std::size_t leaves_ = 0;
};

/// Huffman's algorithm over arbitrary positive weights (any order).
///
/// Ties are broken toward the most recently created unit: merged nodes win
/// over original leaves of equal weight, and among leaves the higher index
/// wins. At boundary cases this yields the anti-uniform tree whenever it is
/// optimal (uniform n = 3, boundary ties such as (0.35, 0.3, 0.2, 0.15)).
template <class W>
CodeTree<W> build_huffman_tree(std::span<const W> weights) {
  using Node = typename CodeTree<W>::Node;
  const std::size_t n = weights.size();
  if (n < 2) throw InvalidDistribution("Huffman coding needs at least 2 symbols");

  std::vector<Node> nodes;
  nodes.reserve(2 * n - 1);
  for (std::size_t i = 0; i < n; ++i) nodes.push_back(Node{weights[i], -1, -1, static_cast<int>(i)});

  // Node index doubles as creation order.
  auto lower_priority = [&](int a, int b) {
    const auto& wa = nodes[static_cast<std::size_t>(a)].weight;
    const auto& wb = nodes[static_cast<std::size_t>(b)].weight;
    if (wa != wb) return wa > wb;
    return a < b;
  };
  std::priority_queue<int, std::vector<int>, decltype(lower_priority)> heap(lower_priority);
  for (std::size_t i = 0; i < n; ++i) heap.push(static_cast<int>(i));

  while (heap.size() > 1) {
    const int first = heap.top();
    heap.pop();
    const int second = heap.top();
    heap.pop();
    int left = second;
    int right = first;
    // A leaf merged with a subtree takes the 0 edge so spine codewords are unary.
    if (nodes[static_cast<std::size_t>(first)].is_leaf() && !nodes[static_cast<std::size_t>(second)].is_leaf()) {
      std::swap(left, right);
    }
    W sum = nodes[static_cast<std::size_t>(first)].weight + nodes[static_cast<std::size_t>(second)].weight;
    nodes.push_back(Node{std::move(sum), left, right, -1});
    heap.push(static_cast<int>(nodes.size()) - 1);
  }
  return CodeTree<W>(std::move(nodes), n);
}

template <class T>
CodeTree<T> build_huffman(const Distribution<T>& dist) {
  if (dist.size() < 2) throw InvalidDistribution("Huffman coding needs at least 2 symbols");
  return build_huffman_tree(dist.probs());
}

template <class T>
LengthProfile length_profile(const CodeTree<T>& tree) {
  LengthProfile out;
  out.lengths.assign(tree.leaf_count(), 0);
  const auto nodes = tree.nodes();
  std::vector<std::pair<int, unsigned>> stack{{tree.root_index(), 0U}};
  while (!stack.empty()) {
    const auto [idx, depth] = stack.back();
    stack.pop_back();
    const auto& node = nodes[static_cast<std::size_t>(idx)];
    if (node.is_leaf()) {
      out.lengths[static_cast<std::size_t>(node.symbol)] = depth;
    } else {
      stack.emplace_back(node.left, depth + 1);
      stack.emplace_back(node.right, depth + 1);
    }
  }
  return out;
}

/// Optimal expected length (unnormalized: sum of w_i l_i) of any prefix code
/// for weights sorted non-increasing. Uses the two-queue merge, which runs in
/// linear time; the value does not depend on tie-breaking.
template <class W>
W huffman_cost(std::span<const W> sorted_desc) {
  const std::size_t n = sorted_desc.size();
  if (n < 2) throw InvalidDistribution("Huffman coding needs at least 2 symbols");
  std::size_t next_leaf = n;  // leaves consumed from the back (smallest first)
  std::deque<W> merged;
  W cost = 0;
  auto take = [&]() -> W {
    if (next_leaf > 0 && (merged.empty() || sorted_desc[next_leaf - 1] < merged.front())) {
      return sorted_desc[--next_leaf];
    }
    W w = std::move(merged.front());
    merged.pop_front();
    return w;
  };
  for (std::size_t step = 0; step + 1 < n; ++step) {
    W a = take();
    W b = take();
    W sum = a + b;
    cost += sum;
    merged.push_back(std::move(sum));
  }
  return cost;
}

}  // namespace auh
