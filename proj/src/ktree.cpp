#include "toughtree/ktree.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <stdexcept>

#include "toughtree/invariants.hpp"

namespace toughtree {

namespace {

using Clock = std::chrono::steady_clock;
using Rows = std::array<VertexMask, 64>;

constexpr std::uint64_t kFnvOffset = 0xcbf29ce484222325ULL;
constexpr std::uint64_t kFnvPrime = 0x100000001b3ULL;

struct Transcript {
  std::uint64_t hash = kFnvOffset;

  void add(std::uint64_t value) {
    for (int i = 0; i < 8; ++i) {
      hash ^= (value >> (8 * i)) & 0xffU;
      hash *= kFnvPrime;
    }
  }
};

struct TimedOut {};

class Deadline {
 public:
  explicit Deadline(std::chrono::milliseconds budget)
      : enabled_(budget.count() > 0), end_(Clock::now() + budget) {}

  // Polls the clock every 1024 calls.
  void tick() {
    if (enabled_ && (++calls_ & 1023U) == 0 && Clock::now() >= end_) throw TimedOut{};
  }

 private:
  bool enabled_;
  Clock::time_point end_;
  std::uint64_t calls_ = 0;
};

VertexMask bit(Vertex v) { return VertexMask{1} << v; }

Vertex lowest(VertexMask m) { return static_cast<Vertex>(std::countr_zero(m)); }

Rows load_rows(const Graph& g) {
  Rows rows{};
  for (Vertex v = 0; v < g.order(); ++v) rows[v] = g.row64(v);
  return rows;
}

std::vector<Edge> normalised(std::vector<Edge> edges) {
  for (Edge& e : edges)
    if (e.u > e.v) std::swap(e.u, e.v);
  std::sort(edges.begin(), edges.end());
  return edges;
}

// ---------------------------------------------------------------------------
// Heuristic pre-pass

struct TreeMasks {
  Rows adj{};
  std::array<int, 64> deg{};

  void link(Vertex a, Vertex b) {
    adj[a] |= bit(b);
    adj[b] |= bit(a);
    ++deg[a];
    ++deg[b];
  }
  void unlink(Vertex a, Vertex b) {
    adj[a] &= ~bit(b);
    adj[b] &= ~bit(a);
    --deg[a];
    --deg[b];
  }
};

// DFS tree that always steps to the unvisited neighbour with the fewest
// unvisited neighbours; on dense graphs this is usually a Hamilton path.
TreeMasks greedy_dfs_tree(const Rows& rows, std::size_t n, Vertex root) {
  TreeMasks tree;
  VertexMask visited = bit(root);
  std::vector<Vertex> stack{root};
  while (!stack.empty()) {
    const Vertex v = stack.back();
    VertexMask options = rows[v] & ~visited;
    if (options == 0) {
      stack.pop_back();
      continue;
    }
    Vertex pick = lowest(options);
    int pick_free = 65;
    for (VertexMask o = options; o != 0; o &= o - 1) {
      const Vertex w = lowest(o);
      const int free = std::popcount(rows[w] & ~visited);
      if (free < pick_free) {
        pick = w;
        pick_free = free;
      }
    }
    tree.link(v, pick);
    visited |= bit(pick);
    stack.push_back(pick);
  }
  (void)n;
  return tree;
}

// Tree path from a to b as a parent walk; returns the vertex sequence a..b.
std::vector<Vertex> tree_path(const TreeMasks& tree, Vertex a, Vertex b) {
  std::array<int, 64> parent;
  parent.fill(-1);
  parent[a] = static_cast<int>(a);
  std::vector<Vertex> queue{a};
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const Vertex v = queue[head];
    if (v == b) break;
    for (VertexMask nb = tree.adj[v]; nb != 0; nb &= nb - 1) {
      const Vertex w = lowest(nb);
      if (parent[w] < 0) {
        parent[w] = static_cast<int>(v);
        queue.push_back(w);
      }
    }
  }
  std::vector<Vertex> out{b};
  while (out.back() != a) out.push_back(static_cast<Vertex>(parent[out.back()]));
  std::reverse(out.begin(), out.end());
  return out;
}

// Repeatedly adds a non-tree edge between two vertices with spare degree and
// deletes a tree edge at an overloaded vertex on the cycle it closes.
bool reduce_max_degree(const Rows& rows, std::size_t n, std::size_t k, TreeMasks& tree) {
  const int cap = static_cast<int>(k);
  auto overloaded = [&] {
    for (Vertex v = 0; v < n; ++v)
      if (tree.deg[v] > cap) return true;
    return false;
  };
  bool improved = true;
  while (overloaded() && improved) {
    improved = false;
    for (Vertex x = 0; x < n && !improved; ++x) {
      if (tree.deg[x] >= cap) continue;
      for (VertexMask cand = rows[x] & ~tree.adj[x]; cand != 0 && !improved; cand &= cand - 1) {
        const Vertex y = lowest(cand);
        if (y <= x || tree.deg[y] >= cap) continue;
        const auto p = tree_path(tree, x, y);
        for (std::size_t i = 1; i + 1 < p.size(); ++i) {
          if (tree.deg[p[i]] > cap) {
            tree.unlink(p[i], p[i + 1]);
            tree.link(x, y);
            improved = true;
            break;
          }
        }
      }
    }
  }
  return !overloaded();
}

std::optional<std::vector<Edge>> heuristic_tree(const Rows& rows, std::size_t n, std::size_t k) {
  const std::size_t roots = std::min<std::size_t>(n, 8);
  for (Vertex root = 0; root < roots; ++root) {
    TreeMasks tree = greedy_dfs_tree(rows, n, root);
    if (reduce_max_degree(rows, n, k, tree)) {
      std::vector<Edge> edges;
      for (Vertex v = 0; v < n; ++v)
        for (VertexMask nb = tree.adj[v] & ~((bit(v) << 1) - 1); nb != 0; nb &= nb - 1)
          edges.push_back({v, lowest(nb)});
      return edges;
    }
  }
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// Hamilton path by subset DP: reach[mask] holds the possible end vertices of a
// path visiting exactly `mask`.

std::optional<std::vector<Edge>> hamilton_path(const Rows& rows, std::size_t n, Deadline& deadline,
                                               Transcript& transcript, std::uint64_t& nodes) {
  const std::size_t full = (std::size_t{1} << n) - 1;
  std::vector<std::uint32_t> reach(full + 1, 0);
  for (Vertex v = 0; v < n; ++v) reach[std::size_t{1} << v] = 1U << v;
  for (std::size_t mask = 1; mask <= full; ++mask) {
    deadline.tick();
    const std::uint32_t ends = reach[mask];
    if (ends == 0) continue;
    ++nodes;
    for (std::size_t rest = full & ~mask; rest != 0; rest &= rest - 1) {
      const auto w = static_cast<Vertex>(std::countr_zero(rest));
      if (rows[w] & ends) reach[mask | (std::size_t{1} << w)] |= 1U << w;
    }
  }
  transcript.add(nodes);
  if (reach[full] == 0) return std::nullopt;

  std::vector<Edge> edges;
  std::size_t mask = full;
  Vertex end = lowest(reach[full]);
  while (mask != (std::size_t{1} << end)) {
    const std::size_t prev_mask = mask & ~(std::size_t{1} << end);
    const std::uint32_t options = reach[prev_mask] & static_cast<std::uint32_t>(rows[end]);
    const Vertex prev = lowest(options);
    edges.push_back({prev, end});
    transcript.add((std::uint64_t{prev} << 32) | end);
    mask = prev_mask;
    end = prev;
  }
  return edges;
}

// ---------------------------------------------------------------------------
// Branch-and-bound. The partial solution is a tree grown from vertex 0. Each
// node branches on the lowest vertex v outside the tree that still has an
// allowed edge into it: either v hangs off one specific tree vertex, or no
// edge between v and the current tree is used. These children partition the
// spanning trees extending the partial one, so exhausting them proves absence.

class BranchAndBound {
 public:
  BranchAndBound(const Rows& rows, std::size_t n, std::size_t k, Deadline& deadline, Transcript& transcript)
      : rows_(rows), n_(n), k_(static_cast<int>(k)), all_(n == 64 ? ~VertexMask{0} : (bit(n) - 1) & ~VertexMask{0}),
        deadline_(deadline), transcript_(transcript) {}

  std::optional<std::vector<Edge>> run() {
    State root;
    root.in_tree = bit(0);
    if (search(root)) return edges_;
    return std::nullopt;
  }

  std::uint64_t nodes() const { return nodes_; }

 private:
  struct State {
    VertexMask in_tree = 0;
    std::array<int, 64> deg{};
    Rows excluded{};
  };

  VertexMask allowed(const State& st, Vertex v) const { return rows_[v] & ~st.excluded[v]; }

  bool feasible(const State& st) const {
    VertexMask open = 0;
    for (VertexMask m = st.in_tree; m != 0; m &= m - 1) {
      const Vertex u = lowest(m);
      if (st.deg[u] < k_) open |= bit(u);
    }
    const VertexMask outside = all_ & ~st.in_tree;

    // (a) every outside vertex needs an edge it can still use; vertices whose
    // only options lie in the tree compete for the tree's spare degree.
    int forced = 0;
    VertexMask forced_targets = 0;
    long long endpoint_budget = 0;
    for (VertexMask m = outside; m != 0; m &= m - 1) {
      const Vertex w = lowest(m);
      const VertexMask cand = allowed(st, w) & (open | outside);
      if (cand == 0) return false;
      if ((cand & outside) == 0) {
        ++forced;
        forced_targets |= cand;
      }
      endpoint_budget += std::min(k_, std::popcount(cand));
    }
    int forced_spare = 0;
    for (VertexMask m = forced_targets; m != 0; m &= m - 1) forced_spare += k_ - st.deg[lowest(m)];
    if (forced_spare < forced) return false;

    // (b) tree plus still-usable edges must reach every vertex.
    VertexMask reached = st.in_tree;
    VertexMask frontier = 0;
    for (VertexMask m = open; m != 0; m &= m - 1) frontier |= allowed(st, lowest(m)) & outside;
    while (frontier != 0) {
      reached |= frontier;
      VertexMask next = 0;
      for (VertexMask m = frontier; m != 0; m &= m - 1) next |= allowed(st, lowest(m));
      frontier = next & outside & ~reached;
    }
    if (reached != all_) return false;

    // (c) the remaining n - |tree| edges need twice as many endpoint slots.
    for (VertexMask m = open; m != 0; m &= m - 1) {
      const Vertex u = lowest(m);
      endpoint_budget += std::min(k_ - st.deg[u], std::popcount(allowed(st, u) & outside));
    }
    const long long remaining_edges = static_cast<long long>(n_) - std::popcount(st.in_tree);
    return endpoint_budget >= 2 * remaining_edges;
  }

  bool search(const State& st) {
    ++nodes_;
    deadline_.tick();
    if (st.in_tree == all_) return true;
    if (!feasible(st)) return false;

    VertexMask open = 0;
    for (VertexMask m = st.in_tree; m != 0; m &= m - 1)
      if (st.deg[lowest(m)] < k_) open |= bit(lowest(m));

    for (VertexMask m = all_ & ~st.in_tree; m != 0; m &= m - 1) {
      const Vertex v = lowest(m);
      const VertexMask parents = allowed(st, v) & open;
      if (parents == 0) continue;

      for (VertexMask p = parents; p != 0; p &= p - 1) {
        const Vertex u = lowest(p);
        transcript_.add((std::uint64_t{v} << 8) | u);
        State child = st;
        child.in_tree |= bit(v);
        ++child.deg[u];
        ++child.deg[v];
        edges_.push_back({u, v});
        if (search(child)) return true;
        edges_.pop_back();
      }

      transcript_.add((std::uint64_t{v} << 8) | 0xffU);
      State child = st;
      child.excluded[v] |= st.in_tree;
      for (VertexMask t = st.in_tree; t != 0; t &= t - 1) child.excluded[lowest(t)] |= bit(v);
      return search(child);
    }
    return false;
  }

  const Rows& rows_;
  std::size_t n_;
  int k_;
  VertexMask all_;
  Deadline& deadline_;
  Transcript& transcript_;
  std::vector<Edge> edges_;
  std::uint64_t nodes_ = 0;
};

}  // namespace

std::string to_string(KTreeOutcome outcome) {
  switch (outcome) {
    case KTreeOutcome::found: return "found";
    case KTreeOutcome::none: return "none";
    case KTreeOutcome::timeout: return "timeout";
  }
  return "?";
}

std::string to_string(KTreeMethod method) {
  switch (method) {
    case KTreeMethod::trivial: return "trivial";
    case KTreeMethod::heuristic: return "heuristic";
    case KTreeMethod::hamilton_dp: return "hamilton_dp";
    case KTreeMethod::branch_and_bound: return "branch_and_bound";
  }
  return "?";
}

KTreeResult find_spanning_ktree(const Graph& g, std::size_t k, const KTreeSearchOptions& options) {
  if (k < 2) throw std::invalid_argument("spanning k-tree search requires k >= 2");
  if (!g.fits_word()) throw std::invalid_argument("spanning k-tree search supports order <= 64");
  if (!is_connected(g)) throw std::invalid_argument("spanning k-tree search requires a connected graph");

  const std::size_t n = g.order();
  KTreeResult result;
  Transcript transcript;
  transcript.add(n);
  transcript.add(k);
  auto finish = [&](KTreeOutcome outcome, KTreeMethod method, std::optional<std::vector<Edge>> edges) {
    result.outcome = outcome;
    result.method = method;
    transcript.add(static_cast<std::uint64_t>(outcome));
    transcript.add(static_cast<std::uint64_t>(method));
    if (edges) {
      result.certificate = KTreeCertificate{k, normalised(std::move(*edges))};
      for (const Edge& e : result.certificate->edges) transcript.add((std::uint64_t{e.u} << 32) | e.v);
    }
    result.transcript_hash = transcript.hash;
    return result;
  };

  if (n == 1) return finish(KTreeOutcome::found, KTreeMethod::trivial, std::vector<Edge>{});

  const Rows rows = load_rows(g);
  if (options.use_heuristic) {
    if (auto edges = heuristic_tree(rows, n, k)) return finish(KTreeOutcome::found, KTreeMethod::heuristic, edges);
  }

  Deadline deadline(options.timeout);
  const bool use_dp = k == 2 && n <= options.hamilton_dp_max_order;
  const KTreeMethod method = use_dp ? KTreeMethod::hamilton_dp : KTreeMethod::branch_and_bound;
  try {
    std::optional<std::vector<Edge>> edges;
    if (use_dp) {
      edges = hamilton_path(rows, n, deadline, transcript, result.nodes);
    } else {
      BranchAndBound bnb(rows, n, k, deadline, transcript);
      try {
        edges = bnb.run();
      } catch (const TimedOut&) {
        result.nodes = bnb.nodes();
        throw;
      }
      result.nodes = bnb.nodes();
    }
    return finish(edges ? KTreeOutcome::found : KTreeOutcome::none, method, std::move(edges));
  } catch (const TimedOut&) {
    return finish(KTreeOutcome::timeout, method, std::nullopt);
  }
}

bool validate_ktree(const Graph& g, std::size_t k, const KTreeCertificate& cert) {
  const std::size_t n = g.order();
  if (cert.edges.size() != n - 1) return false;
  std::vector<std::size_t> deg(n, 0);
  std::vector<std::size_t> parent(n);
  for (std::size_t i = 0; i < n; ++i) parent[i] = i;
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const Edge& e : cert.edges) {
    if (e.u >= n || e.v >= n || e.u == e.v || !g.adjacent(e.u, e.v)) return false;
    const std::size_t a = find(e.u);
    const std::size_t b = find(e.v);
    if (a == b) return false;  // cycle or repeated edge
    parent[a] = b;
    if (++deg[e.u] > k || ++deg[e.v] > k) return false;
  }
  // n - 1 acyclic edges on n vertices form a spanning tree.
  return true;
}

Graph certificate_graph(std::size_t order, const KTreeCertificate& cert) { return Graph(order, cert.edges); }

}  // namespace toughtree
