#include "toughtree/graph.hpp"

#include <algorithm>
#include <bit>
#include <sstream>
#include <stdexcept>

namespace toughtree {

namespace {

std::size_t words_for(std::size_t n) { return (n + Graph::kWordBits - 1) / Graph::kWordBits; }

void check_order(std::size_t n) {
  if (n == 0) throw std::invalid_argument("graph order must be at least 1");
  if (n > Graph::kMaxOrder) {
    throw std::invalid_argument("graph order " + std::to_string(n) + " exceeds supported maximum " +
                                std::to_string(Graph::kMaxOrder));
  }
}

}  // namespace

Graph::Graph(std::size_t order) : order_(order), words_(words_for(order)) {
  check_order(order);
  rows_.assign(order_ * words_, 0);
}

Graph::Graph(std::size_t order, std::span<const Edge> edges) : Graph(order) {
  for (const Edge& e : edges) {
    if (e.u >= order_ || e.v >= order_) {
      throw std::invalid_argument("edge (" + std::to_string(e.u) + "," + std::to_string(e.v) +
                                  ") has an endpoint outside 0.." + std::to_string(order_ - 1));
    }
    if (e.u == e.v) throw std::invalid_argument("self-loop at vertex " + std::to_string(e.u));
    if (adjacent(e.u, e.v)) {
      throw std::invalid_argument("duplicate edge (" + std::to_string(e.u) + "," + std::to_string(e.v) + ")");
    }
    set_edge(e.u, e.v);
  }
}

void Graph::set_edge(Vertex u, Vertex v) {
  row_data(u)[v / kWordBits] |= std::uint64_t{1} << (v % kWordBits);
  row_data(v)[u / kWordBits] |= std::uint64_t{1} << (u % kWordBits);
  ++edge_count_;
}

bool Graph::adjacent(Vertex u, Vertex v) const {
  if (u >= order_ || v >= order_) throw std::out_of_range("vertex out of range");
  return (rows_[u * words_ + v / kWordBits] >> (v % kWordBits)) & 1U;
}

std::size_t Graph::degree(Vertex v) const {
  std::size_t d = 0;
  for (std::uint64_t w : row(v)) d += static_cast<std::size_t>(std::popcount(w));
  return d;
}

std::span<const std::uint64_t> Graph::row(Vertex v) const {
  if (v >= order_) throw std::out_of_range("vertex out of range");
  return {rows_.data() + v * words_, words_};
}

VertexMask Graph::row64(Vertex v) const {
  if (!fits_word()) throw std::logic_error("row64 requires order <= 64");
  return rows_[v];
}

VertexMask Graph::all64() const {
  if (!fits_word()) throw std::logic_error("all64 requires order <= 64");
  return order_ == kWordBits ? ~VertexMask{0} : ((VertexMask{1} << order_) - 1);
}

std::vector<Vertex> Graph::neighbors(Vertex v) const {
  std::vector<Vertex> out;
  auto r = row(v);
  for (std::size_t w = 0; w < r.size(); ++w) {
    for (std::uint64_t bits = r[w]; bits != 0; bits &= bits - 1) {
      out.push_back(static_cast<Vertex>(w * kWordBits + std::countr_zero(bits)));
    }
  }
  return out;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count_);
  for (Vertex u = 0; u < order_; ++u) {
    for (Vertex v : neighbors(u)) {
      if (u < v) out.push_back({u, v});
    }
  }
  return out;
}

std::vector<std::size_t> Graph::degrees() const {
  std::vector<std::size_t> out(order_);
  for (Vertex v = 0; v < order_; ++v) out[v] = degree(v);
  return out;
}

Graph Graph::relabeled(std::span<const Vertex> perm) const {
  if (perm.size() != order_) throw std::invalid_argument("permutation size must equal graph order");
  std::vector<bool> seen(order_, false);
  for (Vertex p : perm) {
    if (p >= order_ || seen[p]) throw std::invalid_argument("relabeling is not a permutation");
    seen[p] = true;
  }
  std::vector<Edge> mapped;
  mapped.reserve(edge_count_);
  for (const Edge& e : edges()) mapped.push_back({perm[e.u], perm[e.v]});
  return Graph(order_, mapped);
}

Graph Graph::induced(std::span<const Vertex> keep) const {
  std::vector<Vertex> index(order_, static_cast<Vertex>(order_));
  for (std::size_t i = 0; i < keep.size(); ++i) {
    if (keep[i] >= order_ || index[keep[i]] != order_) {
      throw std::invalid_argument("induced: vertex list must be distinct and in range");
    }
    index[keep[i]] = static_cast<Vertex>(i);
  }
  std::vector<Edge> sub;
  for (const Edge& e : edges()) {
    if (index[e.u] != order_ && index[e.v] != order_) sub.push_back({index[e.u], index[e.v]});
  }
  return Graph(keep.size(), sub);
}

Graph complete(std::size_t n) {
  Graph g(n);
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v) g.set_edge(u, v);
  return g;
}

Graph empty_graph(std::size_t n) { return Graph(n); }

Graph path(std::size_t n) {
  std::vector<Edge> e;
  for (Vertex v = 1; v < n; ++v) e.push_back({v - 1, v});
  return Graph(n, e);
}

Graph cycle(std::size_t n) {
  if (n < 3) throw std::invalid_argument("cycle needs at least 3 vertices");
  std::vector<Edge> e;
  for (Vertex v = 1; v < n; ++v) e.push_back({v - 1, v});
  e.push_back({0, static_cast<Vertex>(n - 1)});
  return Graph(n, e);
}

Graph star(std::size_t m) { return join(complete(1), empty_graph(m)); }

Graph complete_bipartite(std::size_t a, std::size_t b) { return join(empty_graph(a), empty_graph(b)); }

Graph disjoint_union(const Graph& g1, const Graph& g2) {
  Graph g(g1.order() + g2.order());
  const auto shift = static_cast<Vertex>(g1.order());
  for (const Edge& e : g1.edges()) g.set_edge(e.u, e.v);
  for (const Edge& e : g2.edges()) g.set_edge(e.u + shift, e.v + shift);
  return g;
}

Graph join(const Graph& g1, const Graph& g2) {
  Graph g = disjoint_union(g1, g2);
  const auto shift = static_cast<Vertex>(g1.order());
  for (Vertex u = 0; u < g1.order(); ++u)
    for (Vertex v = 0; v < g2.order(); ++v) g.set_edge(u, v + shift);
  return g;
}

Graph build_split_family(const SplitFamilyParams& params) {
  if (params.hubs < 1 || params.clique < 1) {
    throw std::invalid_argument("split family needs at least one hub and a nonempty clique part, got " +
                                describe(params));
  }
  if (params.order() > Graph::kMaxOrder) throw std::invalid_argument("split family order too large");
  const Graph rest = params.independent == 0
                         ? complete(params.clique)
                         : disjoint_union(complete(params.clique), empty_graph(params.independent));
  return join(complete(params.hubs), rest);
}

SplitFamilyParams extremal_params(std::size_t k, std::size_t t, std::size_t n) {
  if (k < 3 || t < 1) throw std::invalid_argument("extremal family requires k >= 3 and t >= 1");
  const std::size_t hubs = 3 * t;
  const std::size_t independent = 3 * t * (k - 2) + 2;
  const std::size_t reserved = 3 * t * (k - 1) + 2;
  if (n < reserved + 1) {
    throw std::invalid_argument("extremal family for k=" + std::to_string(k) + ", t=" + std::to_string(t) +
                                " needs n >= " + std::to_string(reserved + 1));
  }
  return {hubs, n - reserved, independent};
}

std::optional<SplitFamilyParams> match_split_family(const Graph& g) {
  const std::size_t n = g.order();
  if (n < 4) return std::nullopt;
  const auto deg = g.degrees();

  std::vector<Vertex> hubs, independent, clique;
  for (Vertex v = 0; v < n; ++v)
    if (deg[v] == n - 1) hubs.push_back(v);
  const std::size_t s = hubs.size();
  if (s == 0) return std::nullopt;

  for (Vertex v = 0; v < n; ++v) {
    if (deg[v] == n - 1) continue;
    // A non-hub of degree s is adjacent to every hub, so its neighbourhood is exactly the hub set.
    (deg[v] == s ? independent : clique).push_back(v);
  }
  for (Vertex v : clique) {
    if (deg[v] != s + clique.size() - 1) return std::nullopt;
    for (Vertex w : clique)
      if (v != w && !g.adjacent(v, w)) return std::nullopt;
  }

  SplitFamilyParams p;
  p.hubs = s;
  if (clique.empty()) {
    // K_s ∨ (m)K_1: one independent vertex plays the role of K_1 = K_a.
    if (independent.empty()) return std::nullopt;
    p.clique = 1;
    p.independent = independent.size() - 1;
  } else {
    p.clique = clique.size();
    p.independent = independent.size();
  }
  if (p.independent < 2) return std::nullopt;
  return p;
}

std::string describe(const SplitFamilyParams& params) {
  std::ostringstream os;
  os << "K_" << params.hubs << " v (K_" << params.clique << " u " << params.independent << "K_1)";
  return os.str();
}

}  // namespace toughtree
