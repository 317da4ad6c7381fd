#pragma once

#include <chrono>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "toughtree/graph.hpp"

namespace toughtree {

/// Spanning tree whose maximum degree is at most k.
struct KTreeCertificate {
  std::size_t k = 0;
  std::vector<Edge> edges;
};

enum class KTreeOutcome { found, none, timeout };

std::string to_string(KTreeOutcome outcome);

enum class KTreeMethod { trivial, heuristic, hamilton_dp, branch_and_bound };

std::string to_string(KTreeMethod method);

struct KTreeSearchOptions {
  /// Zero disables the limit.
  std::chrono::milliseconds timeout{0};
  bool use_heuristic = true;
  /// Largest order for which k = 2 uses the bitmask Hamilton-path DP.
  std::size_t hamilton_dp_max_order = 22;
};

struct KTreeResult {
  KTreeOutcome outcome = KTreeOutcome::none;
  std::optional<KTreeCertificate> certificate;
  KTreeMethod method = KTreeMethod::trivial;
  std::uint64_t nodes = 0;
  /// FNV-1a digest of the search decisions; identical inputs give identical digests.
  std::uint64_t transcript_hash = 0;

  bool found() const { return outcome == KTreeOutcome::found; }
};

/// Exact decision of spanning k-tree existence for a connected graph with
/// k >= 2 and order <= 64. A greedy tree with degree-reducing edge swaps is
/// tried first; failing that, k = 2 goes to a Hamilton-path DP and larger k
/// to branch-and-bound. `none` is always a proof of absence. On timeout the
/// outcome is `timeout`, never a guess.
KTreeResult find_spanning_ktree(const Graph& g, std::size_t k, const KTreeSearchOptions& options = {});

/// True iff cert.edges is a spanning tree of g with every degree <= k.
bool validate_ktree(const Graph& g, std::size_t k, const KTreeCertificate& cert);

/// The certificate as a graph on the host's vertex set.
Graph certificate_graph(std::size_t order, const KTreeCertificate& cert);

}  // namespace toughtree
