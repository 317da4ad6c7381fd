#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <vector>

#include "toughtree/graph.hpp"

namespace toughtree {

/// Largest order for the built-in labeled enumerator.
inline constexpr std::size_t kMaxEnumerationOrder = 7;

/// All 2^C(n,2) labeled graphs on n vertices in increasing edge-mask order,
/// where bit i of the mask is the i-th pair in graph6 column order.
class LabeledGraphEnumerator {
 public:
  explicit LabeledGraphEnumerator(std::size_t n, bool connected_only = true);

  std::optional<Graph> next();
  /// Number of masks visited so far, including skipped disconnected ones.
  std::uint64_t visited() const { return mask_; }

 private:
  std::size_t n_;
  bool connected_only_;
  std::uint64_t mask_ = 0;
  std::uint64_t limit_;
};

using Rng = std::mt19937_64;

/// G(n, p) resampled until connected.
Graph random_connected_graph(std::size_t n, double p, Rng& rng);

/// K_n with d edges removed, d uniform in [0, max_deleted]. Each deletion is
/// a uniformly chosen edge whose removal keeps the graph connected; fewer are
/// removed when no such edge remains.
Graph complete_minus_edges(std::size_t n, std::size_t max_deleted, Rng& rng);

/// Uniformly random labeled graph (each pair present with probability 1/2).
Graph random_graph(std::size_t n, Rng& rng);

/// Calls fn on every nonincreasing sequence of `parts` integers, each at
/// least `min_part`, summing to `total`. Sequences come in reverse
/// lexicographic order.
void for_each_partition(std::size_t total, std::size_t parts, std::size_t min_part,
                        const std::function<void(const std::vector<std::size_t>&)>& fn);

}  // namespace toughtree
