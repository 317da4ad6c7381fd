#include "toughtree/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <vector>

#include "toughtree/invariants.hpp"

namespace toughtree {

namespace {

struct Csr {
  std::vector<std::size_t> offsets;
  std::vector<Vertex> targets;
  std::size_t max_degree = 0;
};

Csr to_csr(const Graph& g) {
  Csr csr;
  csr.offsets.reserve(g.order() + 1);
  csr.offsets.push_back(0);
  for (Vertex v = 0; v < g.order(); ++v) {
    for (Vertex w : g.neighbors(v)) csr.targets.push_back(w);
    csr.offsets.push_back(csr.targets.size());
    csr.max_degree = std::max(csr.max_degree, g.degree(v));
  }
  return csr;
}

double widen_down(double x, double gamma) {
  return std::nextafter(x * (1.0 - gamma), -std::numeric_limits<double>::infinity());
}

double widen_up(double x, double gamma) {
  return std::nextafter(x * (1.0 + gamma), std::numeric_limits<double>::infinity());
}

}  // namespace

std::string to_string(MatrixKind kind) {
  return kind == MatrixKind::adjacency ? "adjacency" : "signless_laplacian";
}

std::string to_string(SpectralOrder order) {
  switch (order) {
    case SpectralOrder::less: return "less";
    case SpectralOrder::greater: return "greater";
    case SpectralOrder::indistinguishable_at_tol: return "indistinguishable_at_tol";
  }
  return "?";
}

SpectralEnclosure spectral_radius(const Graph& g, MatrixKind kind, const PowerIterationOptions& options) {
  if (!(options.tol > 0.0)) throw std::invalid_argument("spectral tolerance must be positive");
  if (!is_connected(g)) {
    throw std::invalid_argument("spectral radius certification requires a connected graph");
  }
  const std::size_t n = g.order();
  if (n == 1) return {0.0, 0.0, kind, 0};

  const Csr csr = to_csr(g);
  const bool signless = kind == MatrixKind::signless_laplacian;
  // Each ratio is a row sum of at most max_degree terms, one division and,
  // for Q, one more addition; every operation costs at most one rounding.
  const double gamma = static_cast<double>(csr.max_degree + 2) * std::numeric_limits<double>::epsilon();

  std::vector<double> x(n, 1.0);
  std::vector<double> sums(n);
  double lo = 0.0;
  double hi = std::numeric_limits<double>::infinity();
  double best_width = hi;
  std::size_t last_progress = 0;

  for (std::size_t sweep = 1; sweep <= options.max_sweeps; ++sweep) {
    double ratio_min = std::numeric_limits<double>::infinity();
    double ratio_max = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      double s = 0.0;
      for (std::size_t p = csr.offsets[i]; p < csr.offsets[i + 1]; ++p) s += x[csr.targets[p]];
      sums[i] = s;
      double ratio = s / x[i];
      if (signless) ratio += static_cast<double>(csr.offsets[i + 1] - csr.offsets[i]);
      ratio_min = std::min(ratio_min, ratio);
      ratio_max = std::max(ratio_max, ratio);
    }
    // Every positive vector gives valid bounds, so keep the tightest seen.
    lo = std::max(lo, widen_down(ratio_min, gamma));
    hi = std::min(hi, widen_up(ratio_max, gamma));
    if (hi - lo <= options.tol) return {lo, hi, kind, sweep};

    if (hi - lo < best_width) {
      best_width = hi - lo;
      last_progress = sweep;
    } else if (sweep - last_progress >= options.stall_sweeps) {
      throw ConvergenceError("enclosure width stalled at " + std::to_string(best_width) + " above tolerance", sweep);
    }

    double norm = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      const double degree = static_cast<double>(csr.offsets[i + 1] - csr.offsets[i]);
      sums[i] = signless ? sums[i] + degree * x[i] : sums[i] + x[i];
      norm = std::max(norm, sums[i]);
    }
    for (std::size_t i = 0; i < n; ++i) x[i] = sums[i] / norm;
  }
  throw ConvergenceError("power iteration did not reach tolerance within " + std::to_string(options.max_sweeps) +
                             " sweeps",
                         options.max_sweeps);
}

SpectralEnclosure adjacency_spectral_radius(const Graph& g, double tol) {
  return spectral_radius(g, MatrixKind::adjacency, {.tol = tol});
}

SpectralEnclosure signless_laplacian_spectral_radius(const Graph& g, double tol) {
  return spectral_radius(g, MatrixKind::signless_laplacian, {.tol = tol});
}

SpectralEnclosure spectral_radius_by_components(const Graph& g, MatrixKind kind,
                                                const PowerIterationOptions& options) {
  SpectralEnclosure best{0.0, 0.0, kind, 0};
  for (const auto& comp : components(g)) {
    const SpectralEnclosure e = spectral_radius(g.induced(comp), kind, options);
    best.lo = std::max(best.lo, e.lo);
    best.hi = std::max(best.hi, e.hi);
    best.sweeps += e.sweeps;
  }
  return best;
}

double hong_bound(const Graph& g) {
  for (Vertex v = 0; v < g.order(); ++v) {
    if (g.degree(v) == 0) throw std::invalid_argument("hong_bound requires a graph without isolated vertices");
  }
  const auto radicand = static_cast<long long>(2 * g.edge_count()) - static_cast<long long>(g.order()) + 1;
  if (radicand < 0) throw std::invalid_argument("hong_bound: 2e - n + 1 is negative");
  return std::sqrt(static_cast<double>(radicand));
}

double das_bound(const Graph& g) {
  const std::size_t n = g.order();
  if (n < 2) throw std::invalid_argument("das_bound requires at least two vertices");
  return 2.0 * static_cast<double>(g.edge_count()) / static_cast<double>(n - 1) + static_cast<double>(n) - 2.0;
}

SpectralComparison compare_enclosures(const EnclosureSource& first, const EnclosureSource& second, double tol,
                                      std::size_t refinements) {
  SpectralComparison out;
  for (std::size_t round = 0; round <= refinements; ++round, tol /= 2) {
    try {
      SpectralEnclosure a = first(tol);
      SpectralEnclosure b = second(tol);
      out.first = a;
      out.second = b;
    } catch (const ConvergenceError&) {
      break;
    }
    if (out.first->hi < out.second->lo) {
      out.order = SpectralOrder::less;
      return out;
    }
    if (out.first->lo > out.second->hi) {
      out.order = SpectralOrder::greater;
      return out;
    }
  }
  out.order = SpectralOrder::indistinguishable_at_tol;
  return out;
}

SpectralOrder compare_spectral(const Graph& g, const Graph& h, MatrixKind kind, double tol,
                               std::size_t refinements) {
  return compare_enclosures([&](double t) { return spectral_radius(g, kind, {.tol = t}); },
                            [&](double t) { return spectral_radius(h, kind, {.tol = t}); }, tol, refinements)
      .order;
}

}  // namespace toughtree
