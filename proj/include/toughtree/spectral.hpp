#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>

#include "toughtree/graph.hpp"

namespace toughtree {

enum class MatrixKind { adjacency, signless_laplacian };

std::string to_string(MatrixKind kind);

/// Certified interval [lo, hi] around the Perron root of A(G) or Q(G) = D(G) + A(G).
struct SpectralEnclosure {
  double lo = 0.0;
  double hi = 0.0;
  MatrixKind kind = MatrixKind::adjacency;
  std::size_t sweeps = 0;

  double width() const { return hi - lo; }
  double midpoint() const { return lo + (hi - lo) / 2; }
  bool contains(double x) const { return lo <= x && x <= hi; }
};

class ConvergenceError : public std::runtime_error {
 public:
  ConvergenceError(const std::string& what, std::size_t sweeps) : std::runtime_error(what), sweeps_(sweeps) {}
  std::size_t sweeps() const { return sweeps_; }

 private:
  std::size_t sweeps_;
};

inline constexpr double kDefaultTolerance = 1e-9;
inline constexpr std::size_t kDefaultMaxSweeps = 1'000'000;

struct PowerIterationOptions {
  double tol = kDefaultTolerance;
  std::size_t max_sweeps = kDefaultMaxSweeps;
  /// Give up when the enclosure width has not shrunk for this many sweeps
  /// (the requested tolerance is below what rounding allows).
  std::size_t stall_sweeps = 2'000;
};

/// Collatz–Wielandt enclosure of the spectral radius of a connected graph.
///
/// Iterates x <- (A + I)x, or x <- Qx, from the all-ones vector, renormalised
/// in the max norm. The shift makes the adjacency iteration converge on
/// bipartite graphs, where A has -rho in its spectrum; Q is positive
/// semidefinite and needs none. After every sweep the bounds
/// min_i (Mx)_i/x_i and max_i (Mx)_i/x_i are widened outward by the rounding
/// error of the row sums and divisions that produced them.
SpectralEnclosure spectral_radius(const Graph& g, MatrixKind kind, const PowerIterationOptions& options = {});

SpectralEnclosure adjacency_spectral_radius(const Graph& g, double tol = kDefaultTolerance);
SpectralEnclosure signless_laplacian_spectral_radius(const Graph& g, double tol = kDefaultTolerance);

/// Enclosure for a possibly disconnected graph: the componentwise maximum.
SpectralEnclosure spectral_radius_by_components(const Graph& g, MatrixKind kind,
                                                const PowerIterationOptions& options = {});

/// sqrt(2e - n + 1), an upper bound on rho for graphs without isolated vertices.
double hong_bound(const Graph& g);

/// 2e/(n-1) + n - 2, an upper bound on q.
double das_bound(const Graph& g);

enum class SpectralOrder { less, greater, indistinguishable_at_tol };

std::string to_string(SpectralOrder order);

/// Supplies an enclosure for a requested tolerance.
using EnclosureSource = std::function<SpectralEnclosure(double tol)>;

inline constexpr std::size_t kDefaultRefinements = 16;

struct SpectralComparison {
  SpectralOrder order = SpectralOrder::indistinguishable_at_tol;
  /// Enclosures from the last round that completed.
  std::optional<SpectralEnclosure> first;
  std::optional<SpectralEnclosure> second;
};

/// Compares two spectral radii. Disjoint enclosures decide; otherwise the
/// tolerance is halved and both are recomputed, up to `refinements` times.
/// Running out of refinements, or hitting the rounding floor, yields
/// indistinguishable_at_tol.
SpectralComparison compare_enclosures(const EnclosureSource& first, const EnclosureSource& second, double tol,
                                      std::size_t refinements = kDefaultRefinements);

SpectralOrder compare_spectral(const Graph& g, const Graph& h, MatrixKind kind, double tol = kDefaultTolerance,
                               std::size_t refinements = kDefaultRefinements);

}  // namespace toughtree
