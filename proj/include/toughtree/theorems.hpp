#pragma once

#include <chrono>
#include <cstddef>
#include <map>
#include <mutex>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "toughtree/graph.hpp"
#include "toughtree/ktree.hpp"
#include "toughtree/rational.hpp"
#include "toughtree/spectral.hpp"

namespace toughtree {

/// Degree cap k >= 3 and toughness scale t >= 1.
struct TheoremParams {
  std::size_t k = 3;
  std::size_t t = 1;

  /// t / (t(k-2) + 1).
  Rational required_toughness() const;
  void validate() const;

  friend auto operator<=>(const TheoremParams&, const TheoremParams&) = default;
};

struct ThresholdSet {
  Rational tau_required;
  /// Order gates; n_edge is the ceiling of the rational bound.
  std::size_t n_edge = 0;
  Rational n_edge_exact;
  std::size_t n_rho = 0;
  std::size_t n_q = 0;
  /// C(n-3t(k-2)-2, 2) + 3t(3t(k-2)+2) for the requested n.
  BigInt edge_bound;
  /// Exceptional graph parameters for n, when n >= 3t(k-1)+3.
  std::optional<SplitFamilyParams> extremal;
};

ThresholdSet thresholds(const TheoremParams& params, std::size_t n);

enum class CheckId {
  theorem_1,
  theorem_2,
  theorem_3,
  lemma_win,
  lemma_edge_max,
  lemma_spectral_max,
  bound_hong,
  bound_das,
};

std::string to_string(CheckId id);
std::optional<CheckId> parse_check_id(const std::string& text);

enum class Status {
  hypothesis_failed,
  holds,
  holds_with_ktree,
  holds_extremal_match,
  counterexample,
  unknown_timeout,
  indistinguishable,
};

std::string to_string(Status status);

/// Everything needed to re-run a failed check from scratch.
struct CounterexampleBundle {
  std::string graph6;
  std::vector<Vertex> toughness_witness;
  std::string toughness_value;
  std::uint64_t ktree_transcript_hash = 0;
};

struct Witness {
  std::optional<std::vector<Vertex>> cut_set;
  std::optional<std::size_t> cut_components;
  std::optional<KTreeCertificate> certificate;
  std::optional<SpectralEnclosure> enclosure;
  std::optional<SpectralEnclosure> reference_enclosure;
  std::optional<SplitFamilyParams> extremal_match;
  std::optional<std::string> equality_class;
  std::optional<bool> ktree_exists;
  std::optional<std::uint64_t> ktree_transcript_hash;
  std::optional<double> bound;
  /// Hong/Das only: whether the reversed (lower-bound) reading also holds.
  std::optional<bool> reversed_direction_holds;
};

struct Verdict {
  std::size_t index = 0;
  CheckId check = CheckId::theorem_1;
  Status status = Status::hypothesis_failed;
  Witness witness;
  std::optional<CounterexampleBundle> counterexample;
  /// Human-readable trail of the gates and numbers that led to the status.
  std::vector<std::string> audit;
};

struct CheckOptions {
  double tol = kDefaultTolerance;
  std::chrono::milliseconds ktree_timeout{0};
  std::size_t refinements = kDefaultRefinements;
};

/// Spectral enclosures of the exceptional graphs, keyed by (kind, params, n, tol).
/// Thread-safe; entries never change once inserted.
class ExtremalCache {
 public:
  SpectralEnclosure enclosure(const TheoremParams& params, std::size_t n, MatrixKind kind, double tol);

 private:
  using Key = std::tuple<int, std::size_t, std::size_t, std::size_t, double>;
  std::mutex mutex_;
  std::map<Key, SpectralEnclosure> entries_;
};

/// Hypothesis: connected, tau_req-tough, n >= n_edge, e(G) > edge_bound(n).
Verdict check_theorem_1(const Graph& g, const TheoremParams& params, const CheckOptions& options = {});

/// Hypothesis: connected, tau_req-tough, n >= n_rho, rho(G) >= rho(extremal).
/// Conclusion: a spanning k-tree exists, or G is the exceptional graph.
Verdict check_theorem_2(const Graph& g, const TheoremParams& params, const CheckOptions& options = {},
                        ExtremalCache* cache = nullptr);

/// As check_theorem_2 with q(G) and the gate n_q.
Verdict check_theorem_3(const Graph& g, const TheoremParams& params, const CheckOptions& options = {},
                        ExtremalCache* cache = nullptr);

/// Win's condition: no violating set implies a spanning k-tree. When a
/// violating set exists the exact k-tree answer is still recorded.
Verdict check_lemma_win(const Graph& g, std::size_t k, const CheckOptions& options = {});

/// e(K_s ∨ (K_{n_1} ∪ ... ∪ K_{n_t})) <= e(K_s ∨ (K_{n-s-t+1} ∪ (t-1)K_1)).
Verdict check_lemma_edge_max(std::size_t n, std::size_t s, const std::vector<std::size_t>& parts);

/// Certified rho (or q) of K_s ∨ (∪ K_{n_i}) strictly below that of
/// K_s ∨ (K_{n-s-p(t-1)} ∪ (t-1)K_p). Throws std::invalid_argument when the
/// part sizes violate the preconditions.
Verdict check_lemma_spectral_max(std::size_t n, std::size_t s, const std::vector<std::size_t>& parts,
                                 std::size_t part_floor, MatrixKind kind, const CheckOptions& options = {});

/// rho(G) <= sqrt(2e-n+1) for graphs without isolated vertices, flagging
/// near-equality with its star/complete classification.
Verdict check_bound_hong(const Graph& g, const CheckOptions& options = {});

/// q(G) <= 2e/(n-1) + n - 2.
Verdict check_bound_das(const Graph& g, const CheckOptions& options = {});

/// Near-equality threshold for the Hong and Das bounds.
inline constexpr double kEqualityGap = 1e-6;

/// "star", "complete", or "other" (K_2 is reported as complete).
std::string classify_star_or_complete(const Graph& g);

/// Re-runs the check recorded in `verdict` on `g` from scratch and reports
/// whether the same status and witness come out.
bool reverify(const Verdict& verdict, const Graph& g, const TheoremParams& params, const CheckOptions& options = {});

// ---------------------------------------------------------------------------
// Proof-polynomial audit

/// Result of one audited inequality.
struct AuditCondition {
  std::string id;
  std::string description;
  /// False when n is below the condition's order gate.
  bool applicable = false;
  /// True when the s-range is empty.
  bool vacuous = false;
  bool holds = true;
  /// Informational readings are reported but do not count towards all_hold().
  bool asserted = true;
  std::size_t gate = 0;
  /// (s, value) pairs where the condition failed, exact.
  std::vector<std::pair<std::string, std::string>> violations;
  /// Extra exact numbers (e.g. endpoint difference).
  std::vector<std::pair<std::string, std::string>> values;
};

struct AuditReport {
  TheoremParams params;
  std::size_t n = 0;
  std::size_t s_min = 0;
  std::size_t s_max = 0;  // floor((n-3)/(k-1))
  std::vector<AuditCondition> conditions;

  bool all_hold() const;
  const AuditCondition* find(const std::string& id) const;
};

/// f(s) = 2(k-2)s^2 - (2kn - k^2 - k - 4n + 2)s + n^2 - 6n + 7.
Rational proof_poly_f(const TheoremParams& params, std::size_t n, const Rational& s);

/// g(s) with the given constant term variant: `doubled` selects 2n^2 - 8n + 8,
/// otherwise n^2 - 8n + 8.
Rational proof_poly_g(const TheoremParams& params, std::size_t n, const Rational& s, bool doubled);

/// C(n-3t(k-2)-2, 2) + 3t(3t(k-2)+2) - C(n-(k-2)s-2, 2) - s(s(k-2)+2).
Rational edge_difference(const TheoremParams& params, std::size_t n, const Rational& s);

/// Conditions:
///   a      edge difference >= 0 for integer s in [3t+1, floor((n-3)/(k-1))]  (gate n_edge)
///   b      f(s) <= f(3t+1) on the same range                                (gate n_rho)
///   c      g(s) <= g(3t+1) on the same range                                (gate n_q)
///   d      f(3t+1) - f((n-3)/(k-1)) >= 0 at the rational endpoint           (gate n_rho)
/// plus non-asserted readings of the signless chain (g constant term, value of q(K_m)).
AuditReport audit_proof_polynomials(const TheoremParams& params, std::size_t n);

}  // namespace toughtree
