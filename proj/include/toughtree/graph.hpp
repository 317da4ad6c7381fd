#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace toughtree {

using Vertex = std::uint32_t;

/// Bitmask over vertices 0..63. Exact searches (toughness, k-trees) run on
/// graphs that fit in one word.
using VertexMask = std::uint64_t;

struct Edge {
  Vertex u = 0;
  Vertex v = 0;

  friend bool operator==(const Edge&, const Edge&) = default;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Finite simple undirected graph on vertices 0..n-1.
///
/// Adjacency is stored as one packed bitset row per vertex. Values are
/// immutable once constructed, so a Graph can be shared between workers
/// without synchronisation.
class Graph {
 public:
  static constexpr std::size_t kMaxOrder = 512;
  static constexpr std::size_t kWordBits = 64;

  /// Edgeless graph of the given order.
  explicit Graph(std::size_t order);

  /// Rejects self-loops, duplicate edges and out-of-range endpoints.
  Graph(std::size_t order, std::span<const Edge> edges);

  std::size_t order() const { return order_; }
  std::size_t edge_count() const { return edge_count_; }
  std::size_t degree(Vertex v) const;
  bool adjacent(Vertex u, Vertex v) const;

  /// Neighbourhood row as packed words (bit j of word j/64).
  std::span<const std::uint64_t> row(Vertex v) const;

  /// Single-word neighbourhood; requires order() <= 64.
  VertexMask row64(Vertex v) const;

  /// All vertices as a mask; requires order() <= 64.
  VertexMask all64() const;

  bool fits_word() const { return order_ <= kWordBits; }

  std::vector<Vertex> neighbors(Vertex v) const;

  /// Edges (u < v) in lexicographic order.
  std::vector<Edge> edges() const;

  std::vector<std::size_t> degrees() const;

  /// Same structure with vertex v renamed to perm[v].
  Graph relabeled(std::span<const Vertex> perm) const;

  /// Subgraph induced on the given vertices, relabeled 0..|keep|-1 in order.
  Graph induced(std::span<const Vertex> keep) const;

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.order_ == b.order_ && a.rows_ == b.rows_;
  }

 private:
  void set_edge(Vertex u, Vertex v);
  std::uint64_t* row_data(Vertex v) { return rows_.data() + v * words_; }

  std::size_t order_ = 0;
  std::size_t words_ = 0;
  std::size_t edge_count_ = 0;
  std::vector<std::uint64_t> rows_;

  friend Graph disjoint_union(const Graph&, const Graph&);
  friend Graph join(const Graph&, const Graph&);
  friend Graph complete(std::size_t n);
};

Graph complete(std::size_t n);
Graph empty_graph(std::size_t n);
Graph path(std::size_t n);
Graph cycle(std::size_t n);
/// K_{1,m}: vertex 0 is the centre.
Graph star(std::size_t m);
Graph complete_bipartite(std::size_t a, std::size_t b);

/// Vertices of g2 are shifted by g1.order().
Graph disjoint_union(const Graph& g1, const Graph& g2);
Graph join(const Graph& g1, const Graph& g2);

/// K_s ∨ (K_a ∪ pK_1). Vertex layout: hubs 0..s-1, clique part s..s+a-1,
/// independent part s+a..n-1.
struct SplitFamilyParams {
  std::size_t hubs = 1;
  std::size_t clique = 1;
  std::size_t independent = 0;

  std::size_t order() const { return hubs + clique + independent; }
  friend bool operator==(const SplitFamilyParams&, const SplitFamilyParams&) = default;
};

Graph build_split_family(const SplitFamilyParams& params);

/// Parameters of the exceptional graph K_{3t} ∨ (K_{n-3t(k-1)-2} ∪ (3t(k-2)+2)K_1).
/// Throws std::invalid_argument when n is too small for a nonempty clique part.
SplitFamilyParams extremal_params(std::size_t k, std::size_t t, std::size_t n);

/// Recognises K_s ∨ (K_a ∪ pK_1) with s >= 1, a >= 1, p >= 2 from the degree
/// partition alone; no general isomorphism test is involved.
std::optional<SplitFamilyParams> match_split_family(const Graph& g);

std::string describe(const SplitFamilyParams& params);

}  // namespace toughtree
