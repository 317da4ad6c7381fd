#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "toughtree/graph.hpp"
#include "toughtree/rational.hpp"

namespace toughtree {

/// Largest order accepted by the exponential subset searches.
inline constexpr std::size_t kMaxExactOrder = 63;

std::size_t edge_count(const Graph& g);
std::size_t component_count(const Graph& g);
bool is_connected(const Graph& g);

/// Connected components as sorted vertex lists, ordered by smallest vertex.
std::vector<std::vector<Vertex>> components(const Graph& g);

/// c(G - S) for a graph of order <= 64, S given as a mask.
std::size_t components_after_removal(const Graph& g, VertexMask removed);

std::vector<Vertex> mask_to_vertices(VertexMask mask);
VertexMask vertices_to_mask(const std::vector<Vertex>& vertices);

struct ToughnessResult {
  /// Empty means infinite (complete graph).
  std::optional<Rational> value;
  std::vector<Vertex> witness;
  std::size_t witness_components = 0;

  bool infinite() const { return !value.has_value(); }
};

/// Exact toughness min |S| / c(G - S) over sets with c(G - S) >= 2.
///
/// Subsets are visited by increasing size (lexicographic within a size). A
/// size level is abandoned as soon as |S| / (n - |S|), the best ratio any set
/// of that size could reach, is no better than the incumbent; larger sizes
/// are then hopeless too. The witness is the first minimiser found in that
/// order. Disconnected graphs have toughness 0 with the empty witness.
ToughnessResult toughness(const Graph& g);

/// |S| >= tau * c(G - S) for every S with c(G - S) >= 2. Stops at the first
/// violating set, and only visits sizes where a violation is possible.
bool is_tough(const Graph& g, const Rational& tau);

/// First set (by size, then lexicographic) with c(G - S) >= 2 and
/// |S| < tau * c(G - S); empty when g is tau-tough.
std::optional<std::vector<Vertex>> toughness_violation(const Graph& g, const Rational& tau);

/// Nonempty S with c(G - S) >= (k-2)|S| + 3 maximising c(G - S) - (k-2)|S|,
/// ties broken by smaller |S| then lexicographically smaller vertex list.
/// Requires k >= 3 and a connected graph.
std::optional<std::vector<Vertex>> win_violation(const Graph& g, std::size_t k);

}  // namespace toughtree
