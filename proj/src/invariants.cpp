#include "toughtree/invariants.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <stdexcept>
#include <string>

namespace toughtree {

namespace {

using Rows = std::array<VertexMask, 64>;

Rows load_rows(const Graph& g) {
  Rows rows{};
  for (Vertex v = 0; v < g.order(); ++v) rows[v] = g.row64(v);
  return rows;
}

std::size_t count_components(const Rows& rows, VertexMask remaining) {
  std::size_t count = 0;
  while (remaining != 0) {
    VertexMask comp = remaining & (~remaining + 1);
    VertexMask frontier = comp;
    while (frontier != 0) {
      VertexMask next = 0;
      for (VertexMask f = frontier; f != 0; f &= f - 1) next |= rows[std::countr_zero(f)];
      next &= remaining & ~comp;
      comp |= next;
      frontier = next;
    }
    remaining &= ~comp;
    ++count;
  }
  return count;
}

// Next subset of the same popcount in increasing integer order (Gosper).
VertexMask next_subset(VertexMask x) {
  const VertexMask c = x & (~x + 1);
  const VertexMask r = x + c;
  return (((r ^ x) >> 2) / c) | r;
}

// Same-size sets: true when `a` comes first as a sorted vertex list.
bool lex_less(VertexMask a, VertexMask b) {
  const VertexMask diff = a ^ b;
  return diff != 0 && (a & diff & (~diff + 1)) != 0;
}

void require_exact_order(const Graph& g, const char* what) {
  if (g.order() > kMaxExactOrder) {
    throw std::invalid_argument(std::string(what) + ": exact search supports order <= " +
                                std::to_string(kMaxExactOrder) + ", got " + std::to_string(g.order()));
  }
}

bool is_complete(const Graph& g) { return 2 * g.edge_count() == g.order() * (g.order() - 1); }

// Calls visit(mask) for each size-s subset of 0..n-1; stops early when visit returns false.
template <typename Visit>
bool for_each_subset(std::size_t n, std::size_t s, Visit&& visit) {
  if (s == 0) return visit(VertexMask{0});
  const VertexMask limit = VertexMask{1} << n;
  for (VertexMask x = (VertexMask{1} << s) - 1; x < limit; x = next_subset(x)) {
    if (!visit(x)) return false;
  }
  return true;
}

}  // namespace

std::size_t edge_count(const Graph& g) { return g.edge_count(); }

std::vector<std::vector<Vertex>> components(const Graph& g) {
  const std::size_t n = g.order();
  std::vector<int> label(n, -1);
  std::vector<std::vector<Vertex>> out;
  for (Vertex start = 0; start < n; ++start) {
    if (label[start] >= 0) continue;
    const int id = static_cast<int>(out.size());
    out.emplace_back();
    std::vector<Vertex> stack{start};
    label[start] = id;
    while (!stack.empty()) {
      const Vertex v = stack.back();
      stack.pop_back();
      out.back().push_back(v);
      for (Vertex w : g.neighbors(v)) {
        if (label[w] < 0) {
          label[w] = id;
          stack.push_back(w);
        }
      }
    }
    std::sort(out.back().begin(), out.back().end());
  }
  return out;
}

std::size_t component_count(const Graph& g) {
  if (g.fits_word()) return count_components(load_rows(g), g.all64());
  return components(g).size();
}

bool is_connected(const Graph& g) { return component_count(g) == 1; }

std::size_t components_after_removal(const Graph& g, VertexMask removed) {
  return count_components(load_rows(g), g.all64() & ~removed);
}

std::vector<Vertex> mask_to_vertices(VertexMask mask) {
  std::vector<Vertex> out;
  for (; mask != 0; mask &= mask - 1) out.push_back(static_cast<Vertex>(std::countr_zero(mask)));
  return out;
}

VertexMask vertices_to_mask(const std::vector<Vertex>& vertices) {
  VertexMask m = 0;
  for (Vertex v : vertices) {
    if (v >= 64) throw std::invalid_argument("vertex does not fit in a 64-bit mask");
    m |= VertexMask{1} << v;
  }
  return m;
}

ToughnessResult toughness(const Graph& g) {
  const std::size_t n = g.order();
  if (n < 2) throw std::invalid_argument("toughness is undefined for a single vertex");
  require_exact_order(g, "toughness");
  if (is_complete(g)) return {};

  const Rows rows = load_rows(g);
  const VertexMask all = g.all64();
  if (const std::size_t c = count_components(rows, all); c >= 2) return {Rational(0), {}, c};

  std::size_t best_size = 0;
  std::size_t best_comps = 0;
  VertexMask best_set = 0;
  for (std::size_t s = 1; s + 2 <= n; ++s) {
    // No set of size s leaves more than n - s components.
    if (best_comps != 0 && s * best_comps >= best_size * (n - s)) break;
    for_each_subset(n, s, [&](VertexMask set) {
      const std::size_t c = count_components(rows, all & ~set);
      if (c < 2) return true;
      const bool better = best_comps == 0 || s * best_comps < best_size * c ||
                          (s * best_comps == best_size * c && s == best_size && lex_less(set, best_set));
      if (better) {
        best_size = s;
        best_comps = c;
        best_set = set;
      }
      return true;
    });
  }
  return {Rational(static_cast<std::int64_t>(best_size), static_cast<std::int64_t>(best_comps)),
          mask_to_vertices(best_set), best_comps};
}

std::optional<std::vector<Vertex>> toughness_violation(const Graph& g, const Rational& tau) {
  const std::size_t n = g.order();
  if (n < 2) throw std::invalid_argument("toughness is undefined for a single vertex");
  require_exact_order(g, "is_tough");
  if (tau <= 0 || is_complete(g)) return std::nullopt;

  const Rows rows = load_rows(g);
  const VertexMask all = g.all64();
  for (std::size_t s = 0; s + 2 <= n; ++s) {
    // Largest component count a size-s set may leave: floor(s / tau).
    const Rational cap_exact = floor_of(Rational(static_cast<std::int64_t>(s)) / tau);
    if (cap_exact >= Rational(static_cast<std::int64_t>(n - s))) break;
    const auto cap = boost::multiprecision::numerator(cap_exact).convert_to<std::size_t>();
    // Lexicographic order within a size, so the reported set is canonical.
    std::optional<VertexMask> first;
    for_each_subset(n, s, [&](VertexMask set) {
      const std::size_t c = count_components(rows, all & ~set);
      if (c >= 2 && c > cap && (!first || lex_less(set, *first))) first = set;
      return true;
    });
    if (first) return mask_to_vertices(*first);
  }
  return std::nullopt;
}

bool is_tough(const Graph& g, const Rational& tau) {
  const std::size_t n = g.order();
  if (n < 2) throw std::invalid_argument("toughness is undefined for a single vertex");
  require_exact_order(g, "is_tough");
  if (tau <= 0 || is_complete(g)) return true;

  const Rows rows = load_rows(g);
  const VertexMask all = g.all64();
  for (std::size_t s = 0; s + 2 <= n; ++s) {
    const Rational cap_exact = floor_of(Rational(static_cast<std::int64_t>(s)) / tau);
    if (cap_exact >= Rational(static_cast<std::int64_t>(n - s))) break;
    const auto cap = boost::multiprecision::numerator(cap_exact).convert_to<std::size_t>();
    const bool ok = for_each_subset(n, s, [&](VertexMask set) {
      const std::size_t c = count_components(rows, all & ~set);
      return c < 2 || c <= cap;
    });
    if (!ok) return false;
  }
  return true;
}

std::optional<std::vector<Vertex>> win_violation(const Graph& g, std::size_t k) {
  if (k < 3) throw std::invalid_argument("win_violation requires k >= 3");
  require_exact_order(g, "win_violation");
  if (!is_connected(g)) throw std::invalid_argument("win_violation requires a connected graph");

  const std::size_t n = g.order();
  const Rows rows = load_rows(g);
  const VertexMask all = g.all64();
  const auto slope = static_cast<long long>(k - 2);

  bool found = false;
  long long best_excess = 0;
  VertexMask best_set = 0;
  for (std::size_t s = 1; s < n; ++s) {
    const long long bound = static_cast<long long>(n - s) - slope * static_cast<long long>(s);
    if (bound < 3 || (found && bound <= best_excess)) break;
    for_each_subset(n, s, [&](VertexMask set) {
      const long long excess =
          static_cast<long long>(count_components(rows, all & ~set)) - slope * static_cast<long long>(s);
      if (excess < 3) return true;
      if (!found || excess > best_excess || (excess == best_excess && std::popcount(set) == std::popcount(best_set) &&
                                             lex_less(set, best_set))) {
        found = true;
        best_excess = excess;
        best_set = set;
      }
      return true;
    });
  }
  if (!found) return std::nullopt;
  return mask_to_vertices(best_set);
}

}  // namespace toughtree
