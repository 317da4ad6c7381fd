#include "toughtree/generate.hpp"

#include <algorithm>
#include <stdexcept>
#include <vector>

#include "toughtree/invariants.hpp"

namespace toughtree {

namespace {

// Connectivity of the graph encoded by `mask` in column order, on n <= 7.
bool mask_connected(std::size_t n, std::uint64_t mask) {
  std::uint8_t rows[kMaxEnumerationOrder] = {};
  std::size_t bit = 0;
  for (std::size_t v = 1; v < n; ++v) {
    for (std::size_t u = 0; u < v; ++u, ++bit) {
      if (mask >> bit & 1) {
        rows[u] |= static_cast<std::uint8_t>(1u << v);
        rows[v] |= static_cast<std::uint8_t>(1u << u);
      }
    }
  }
  const unsigned all = (1u << n) - 1;
  unsigned seen = 1;
  unsigned frontier = 1;
  while (frontier) {
    unsigned next = 0;
    for (std::size_t v = 0; v < n; ++v)
      if (frontier >> v & 1) next |= rows[v];
    frontier = next & ~seen;
    seen |= next;
  }
  return (seen & all) == all;
}

Graph graph_from_mask(std::size_t n, std::uint64_t mask) {
  std::vector<Edge> edges;
  std::size_t bit = 0;
  for (Vertex v = 1; v < n; ++v)
    for (Vertex u = 0; u < v; ++u, ++bit)
      if (mask >> bit & 1) edges.push_back({u, v});
  return Graph(n, edges);
}

}  // namespace

LabeledGraphEnumerator::LabeledGraphEnumerator(std::size_t n, bool connected_only)
    : n_(n), connected_only_(connected_only) {
  if (n < 1 || n > kMaxEnumerationOrder) {
    throw std::invalid_argument("labeled enumeration supports 1 <= n <= " + std::to_string(kMaxEnumerationOrder));
  }
  limit_ = std::uint64_t{1} << (n * (n - 1) / 2);
}

std::optional<Graph> LabeledGraphEnumerator::next() {
  while (mask_ < limit_) {
    const std::uint64_t m = mask_++;
    if (!connected_only_ || mask_connected(n_, m)) return graph_from_mask(n_, m);
  }
  return std::nullopt;
}

Graph random_graph(std::size_t n, Rng& rng) {
  std::vector<Edge> edges;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v)
      if (rng() & 1) edges.push_back({u, v});
  return Graph(n, edges);
}

Graph random_connected_graph(std::size_t n, double p, Rng& rng) {
  if (!(p > 0.0 && p <= 1.0)) throw std::invalid_argument("edge probability must be in (0, 1]");
  std::bernoulli_distribution coin(p);
  for (;;) {
    std::vector<Edge> edges;
    for (Vertex u = 0; u < n; ++u)
      for (Vertex v = u + 1; v < n; ++v)
        if (coin(rng)) edges.push_back({u, v});
    Graph g(n, edges);
    if (is_connected(g)) return g;
  }
}

Graph complete_minus_edges(std::size_t n, std::size_t max_deleted, Rng& rng) {
  std::vector<Edge> edges = complete(n).edges();
  const std::size_t target = std::uniform_int_distribution<std::size_t>(0, max_deleted)(rng);
  for (std::size_t removed = 0; removed < target; ++removed) {
    std::vector<std::size_t> order(edges.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::shuffle(order.begin(), order.end(), rng);
    bool done = false;
    for (std::size_t i : order) {
      std::vector<Edge> trial = edges;
      trial.erase(trial.begin() + static_cast<std::ptrdiff_t>(i));
      if (is_connected(Graph(n, trial))) {
        edges = std::move(trial);
        done = true;
        break;
      }
    }
    if (!done) break;
  }
  return Graph(n, edges);
}

namespace {

void extend_partition(std::vector<std::size_t>& prefix, std::size_t remaining, std::size_t slots, std::size_t cap,
                      std::size_t min_part, const std::function<void(const std::vector<std::size_t>&)>& fn) {
  if (slots == 0) {
    if (remaining == 0) fn(prefix);
    return;
  }
  if (remaining < slots * min_part) return;
  const std::size_t hi = std::min(cap, remaining - (slots - 1) * min_part);
  for (std::size_t x = hi + 1; x-- > min_part;) {
    if (x * slots < remaining) break;  // the rest cannot exceed x
    prefix.push_back(x);
    extend_partition(prefix, remaining - x, slots - 1, x, min_part, fn);
    prefix.pop_back();
  }
}

}  // namespace

void for_each_partition(std::size_t total, std::size_t parts, std::size_t min_part,
                        const std::function<void(const std::vector<std::size_t>&)>& fn) {
  if (parts == 0) {
    if (total == 0) fn({});
    return;
  }
  std::vector<std::size_t> prefix;
  extend_partition(prefix, total, parts, total, std::max<std::size_t>(min_part, 1), fn);
}

}  // namespace toughtree
