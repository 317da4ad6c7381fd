#include "toughtree/theorems.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "toughtree/graph_io.hpp"
#include "toughtree/invariants.hpp"

namespace toughtree {

namespace {

Rational rat(std::size_t v) { return Rational(static_cast<std::int64_t>(v)); }

// Binomial C(m, 2) extended by zero to m < 2.
BigInt choose2(const BigInt& m) { return m < 2 ? BigInt(0) : m * (m - 1) / 2; }

// x(x-1)/2 as a polynomial, for the audit where s may be rational.
Rational choose2_poly(const Rational& x) { return x * (x - 1) / 2; }

std::string join_vertices(const std::vector<Vertex>& vs) {
  std::ostringstream os;
  os << '{';
  for (std::size_t i = 0; i < vs.size(); ++i) os << (i ? "," : "") << vs[i];
  os << '}';
  return os.str();
}

std::string fmt(double x) {
  std::ostringstream os;
  os.precision(15);
  os << x;
  return os.str();
}

std::string encode_graph(const Graph& g) {
  return g.order() <= kGraph6MaxOrder ? write_graph6(g) : write_edgelist(g);
}

CounterexampleBundle make_bundle(const Graph& g, const KTreeResult& search) {
  CounterexampleBundle bundle;
  bundle.graph6 = encode_graph(g);
  if (g.order() >= 2) {
    const ToughnessResult tr = toughness(g);
    bundle.toughness_witness = tr.witness;
    bundle.toughness_value = tr.infinite() ? "inf" : to_string(*tr.value);
  }
  bundle.ktree_transcript_hash = search.transcript_hash;
  return bundle;
}

KTreeSearchOptions search_options(const CheckOptions& options) {
  KTreeSearchOptions o;
  o.timeout = options.ktree_timeout;
  return o;
}

// Order gate, connectivity and toughness, cheapest first. Returns false and
// marks the verdict when any of them fails.
bool common_hypotheses(const Graph& g, const TheoremParams& params, std::size_t gate, const char* gate_name,
                       Verdict& v) {
  const std::size_t n = g.order();
  if (n < gate) {
    v.status = Status::hypothesis_failed;
    v.audit.push_back("order " + std::to_string(n) + " < " + gate_name + " = " + std::to_string(gate));
    return false;
  }
  v.audit.push_back("order " + std::to_string(n) + " >= " + gate_name + " = " + std::to_string(gate));
  if (!is_connected(g)) {
    v.status = Status::hypothesis_failed;
    v.audit.push_back("graph is disconnected");
    return false;
  }
  const Rational tau = params.required_toughness();
  if (auto bad = toughness_violation(g, tau)) {
    v.status = Status::hypothesis_failed;
    v.witness.cut_set = *bad;
    v.witness.cut_components = components_after_removal(g, vertices_to_mask(*bad));
    v.audit.push_back("not " + to_string(tau) + "-tough: S = " + join_vertices(*bad) + " leaves " +
                      std::to_string(*v.witness.cut_components) + " components");
    return false;
  }
  v.audit.push_back("graph is " + to_string(tau) + "-tough");
  return true;
}

// Runs the exact k-tree search for a graph that satisfies a hypothesis.
void conclude_with_ktree(const Graph& g, const TheoremParams& params, const CheckOptions& options, Verdict& v,
                         bool extremal_allowed) {
  const KTreeResult search = find_spanning_ktree(g, params.k, search_options(options));
  v.witness.ktree_transcript_hash = search.transcript_hash;
  v.audit.push_back("spanning " + std::to_string(params.k) + "-tree search: " + to_string(search.outcome) + " via " +
                    to_string(search.method));
  if (search.found()) {
    v.status = Status::holds_with_ktree;
    v.witness.certificate = search.certificate;
    v.witness.ktree_exists = true;
    return;
  }
  if (search.outcome == KTreeOutcome::none) v.witness.ktree_exists = false;
  if (extremal_allowed) {
    const auto match = match_split_family(g);
    const auto expected = thresholds(params, g.order()).extremal;
    if (match && expected && *match == *expected) {
      v.status = Status::holds_extremal_match;
      v.witness.extremal_match = match;
      v.audit.push_back("graph is the exceptional graph " + describe(*match));
      return;
    }
  }
  if (search.outcome == KTreeOutcome::timeout) {
    v.status = Status::unknown_timeout;
    return;
  }
  v.status = Status::counterexample;
  v.counterexample = make_bundle(g, search);
}

Verdict check_spectral_theorem(const Graph& g, const TheoremParams& params, const CheckOptions& options,
                               ExtremalCache* cache, MatrixKind kind) {
  params.validate();
  Verdict v;
  v.check = kind == MatrixKind::adjacency ? CheckId::theorem_2 : CheckId::theorem_3;
  const ThresholdSet th = thresholds(params, g.order());
  const std::size_t gate = kind == MatrixKind::adjacency ? th.n_rho : th.n_q;
  if (!common_hypotheses(g, params, gate, kind == MatrixKind::adjacency ? "n_rho" : "n_q", v)) return v;

  const std::size_t n = g.order();
  const EnclosureSource reference = [&](double tol) {
    if (cache) return cache->enclosure(params, n, kind, tol);
    return spectral_radius(build_split_family(extremal_params(params.k, params.t, n)), kind, {.tol = tol});
  };
  const SpectralComparison cmp = compare_enclosures(
      [&](double tol) { return spectral_radius(g, kind, {.tol = tol}); }, reference, options.tol, options.refinements);
  v.witness.enclosure = cmp.first;
  v.witness.reference_enclosure = cmp.second;
  const std::string symbol = kind == MatrixKind::adjacency ? "rho" : "q";
  if (cmp.order == SpectralOrder::less) {
    v.status = Status::hypothesis_failed;
    v.audit.push_back(symbol + "(G) < " + symbol + "(extremal), certified");
    return v;
  }
  if (cmp.order == SpectralOrder::indistinguishable_at_tol) {
    v.audit.push_back(symbol + "(G) and " + symbol +
                      "(extremal) indistinguishable at the refinement cap; hypothesis taken as satisfied");
  } else {
    v.audit.push_back(symbol + "(G) > " + symbol + "(extremal), certified");
  }
  conclude_with_ktree(g, params, options, v, true);
  return v;
}

std::string equality_label(const Graph& g, double gap) {
  return gap < kEqualityGap ? classify_star_or_complete(g) : "";
}

Graph join_of_cliques(std::size_t s, const std::vector<std::size_t>& parts) {
  Graph rest = complete(parts.front());
  for (std::size_t i = 1; i < parts.size(); ++i) rest = disjoint_union(rest, complete(parts[i]));
  return join(complete(s), rest);
}

bool same_certificate(const std::optional<KTreeCertificate>& a, const std::optional<KTreeCertificate>& b) {
  if (a.has_value() != b.has_value()) return false;
  return !a || (a->k == b->k && a->edges == b->edges);
}

}  // namespace

Rational TheoremParams::required_toughness() const {
  validate();
  return Rational(static_cast<std::int64_t>(t), static_cast<std::int64_t>(t * (k - 2) + 1));
}

void TheoremParams::validate() const {
  if (k < 3) throw std::invalid_argument("theorem parameters require k >= 3");
  if (t < 1) throw std::invalid_argument("theorem parameters require t >= 1");
}

ThresholdSet thresholds(const TheoremParams& params, std::size_t n) {
  params.validate();
  const BigInt k = params.k;
  const BigInt t = params.t;
  ThresholdSet th;
  th.tau_required = params.required_toughness();
  const BigInt num = 3 * t * k * k * k - (9 * t - 2) * k * k + (6 * t - 5) * k + 6;
  th.n_edge_exact = Rational(num, (k - 2) * (k - 2));
  th.n_edge = numerator(ceil_of(th.n_edge_exact)).convert_to<std::size_t>();
  th.n_rho = (3 * k * t + k - 3 * t + 6).convert_to<std::size_t>();
  th.n_q = (3 * k * t * t + k + 18 * t + 4).convert_to<std::size_t>();
  const BigInt m = BigInt(n) - 3 * t * (k - 2) - 2;
  th.edge_bound = choose2(m) + 3 * t * (3 * t * (k - 2) + 2);
  if (n >= 3 * params.t * (params.k - 1) + 3) th.extremal = extremal_params(params.k, params.t, n);
  return th;
}

std::string to_string(CheckId id) {
  switch (id) {
    case CheckId::theorem_1: return "theorem_1";
    case CheckId::theorem_2: return "theorem_2";
    case CheckId::theorem_3: return "theorem_3";
    case CheckId::lemma_win: return "lemma_win";
    case CheckId::lemma_edge_max: return "lemma_edge_max";
    case CheckId::lemma_spectral_max: return "lemma_spectral_max";
    case CheckId::bound_hong: return "bound_hong";
    case CheckId::bound_das: return "bound_das";
  }
  return "?";
}

std::optional<CheckId> parse_check_id(const std::string& text) {
  for (CheckId id : {CheckId::theorem_1, CheckId::theorem_2, CheckId::theorem_3, CheckId::lemma_win,
                     CheckId::lemma_edge_max, CheckId::lemma_spectral_max, CheckId::bound_hong, CheckId::bound_das}) {
    if (text == to_string(id)) return id;
  }
  if (text == "1") return CheckId::theorem_1;
  if (text == "2") return CheckId::theorem_2;
  if (text == "3") return CheckId::theorem_3;
  if (text == "win") return CheckId::lemma_win;
  if (text == "hong") return CheckId::bound_hong;
  if (text == "das") return CheckId::bound_das;
  return std::nullopt;
}

std::string to_string(Status status) {
  switch (status) {
    case Status::hypothesis_failed: return "hypothesis_failed";
    case Status::holds: return "holds";
    case Status::holds_with_ktree: return "holds_with_ktree";
    case Status::holds_extremal_match: return "holds_extremal_match";
    case Status::counterexample: return "counterexample";
    case Status::unknown_timeout: return "unknown_timeout";
    case Status::indistinguishable: return "indistinguishable";
  }
  return "?";
}

SpectralEnclosure ExtremalCache::enclosure(const TheoremParams& params, std::size_t n, MatrixKind kind, double tol) {
  const Key key{static_cast<int>(kind), params.k, params.t, n, tol};
  {
    std::lock_guard lock(mutex_);
    if (auto it = entries_.find(key); it != entries_.end()) return it->second;
  }
  const SpectralEnclosure e =
      spectral_radius(build_split_family(extremal_params(params.k, params.t, n)), kind, {.tol = tol});
  std::lock_guard lock(mutex_);
  return entries_.emplace(key, e).first->second;
}

Verdict check_theorem_1(const Graph& g, const TheoremParams& params, const CheckOptions& options) {
  params.validate();
  Verdict v;
  v.check = CheckId::theorem_1;
  const ThresholdSet th = thresholds(params, g.order());
  if (!common_hypotheses(g, params, th.n_edge, "n_edge", v)) return v;
  const BigInt e = g.edge_count();
  if (e <= th.edge_bound) {
    v.status = Status::hypothesis_failed;
    v.audit.push_back("e(G) = " + e.str() + " <= bound " + th.edge_bound.str());
    return v;
  }
  v.audit.push_back("e(G) = " + e.str() + " > bound " + th.edge_bound.str());
  conclude_with_ktree(g, params, options, v, false);
  return v;
}

Verdict check_theorem_2(const Graph& g, const TheoremParams& params, const CheckOptions& options,
                        ExtremalCache* cache) {
  return check_spectral_theorem(g, params, options, cache, MatrixKind::adjacency);
}

Verdict check_theorem_3(const Graph& g, const TheoremParams& params, const CheckOptions& options,
                        ExtremalCache* cache) {
  return check_spectral_theorem(g, params, options, cache, MatrixKind::signless_laplacian);
}

Verdict check_lemma_win(const Graph& g, std::size_t k, const CheckOptions& options) {
  Verdict v;
  v.check = CheckId::lemma_win;
  const auto violation = win_violation(g, k);
  const KTreeResult search = find_spanning_ktree(g, k, search_options(options));
  v.witness.ktree_transcript_hash = search.transcript_hash;
  if (search.outcome != KTreeOutcome::timeout) v.witness.ktree_exists = search.found();
  if (search.found()) v.witness.certificate = search.certificate;

  if (violation) {
    const std::size_t c = components_after_removal(g, vertices_to_mask(*violation));
    v.status = Status::hypothesis_failed;
    v.witness.cut_set = *violation;
    v.witness.cut_components = c;
    v.audit.push_back("S = " + join_vertices(*violation) + " leaves " + std::to_string(c) + " >= (k-2)|S|+3 = " +
                      std::to_string((k - 2) * violation->size() + 3) + " components");
    v.audit.push_back("spanning " + std::to_string(k) + "-tree: " + to_string(search.outcome));
    return v;
  }
  v.audit.push_back("c(G-S) <= (k-2)|S|+2 for every S");
  switch (search.outcome) {
    case KTreeOutcome::found: v.status = Status::holds_with_ktree; break;
    case KTreeOutcome::timeout: v.status = Status::unknown_timeout; break;
    case KTreeOutcome::none:
      v.status = Status::counterexample;
      v.counterexample = make_bundle(g, search);
      break;
  }
  return v;
}

Verdict check_lemma_edge_max(std::size_t n, std::size_t s, const std::vector<std::size_t>& parts) {
  if (parts.empty()) throw std::invalid_argument("lemma_edge_max: at least one part required");
  std::size_t total = s;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (parts[i] < 1) throw std::invalid_argument("lemma_edge_max: parts must be positive");
    if (i > 0 && parts[i] > parts[i - 1]) throw std::invalid_argument("lemma_edge_max: parts must be nonincreasing");
    total += parts[i];
  }
  if (total != n) throw std::invalid_argument("lemma_edge_max: s + sum(parts) must equal n");

  const std::size_t t = parts.size();
  BigInt lhs = choose2(s) + BigInt(s) * (n - s);
  for (std::size_t p : parts) lhs += choose2(p);
  const BigInt rhs = choose2(s) + choose2(n - s - t + 1) + BigInt(s) * (n - s);

  Verdict v;
  v.check = CheckId::lemma_edge_max;
  v.status = lhs <= rhs ? Status::holds : Status::counterexample;
  v.witness.equality_class = lhs == rhs ? "equality" : (lhs < rhs ? "strict" : "reversed");
  v.audit.push_back("e(lhs) = " + lhs.str() + ", e(rhs) = " + rhs.str());
  return v;
}

Verdict check_lemma_spectral_max(std::size_t n, std::size_t s, const std::vector<std::size_t>& parts,
                                 std::size_t part_floor, MatrixKind kind, const CheckOptions& options) {
  if (s < 1) throw std::invalid_argument("lemma_spectral_max: s >= 1 required");
  if (part_floor < 1) throw std::invalid_argument("lemma_spectral_max: part floor p >= 1 required");
  if (parts.empty()) throw std::invalid_argument("lemma_spectral_max: at least one part required");
  std::size_t total = s;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (parts[i] < part_floor) throw std::invalid_argument("lemma_spectral_max: every part must be >= p");
    if (i > 0 && parts[i] > parts[i - 1]) {
      throw std::invalid_argument("lemma_spectral_max: parts must be nonincreasing");
    }
    total += parts[i];
  }
  if (total != n) throw std::invalid_argument("lemma_spectral_max: s + sum(parts) must equal n");
  const std::size_t t = parts.size();
  const std::size_t big = n - s - part_floor * (t - 1);
  if (parts.front() >= big) {
    throw std::invalid_argument("lemma_spectral_max: largest part must be < n - s - p(t-1) = " + std::to_string(big));
  }

  const Graph lhs = join_of_cliques(s, parts);
  std::vector<std::size_t> rhs_parts{big};
  rhs_parts.insert(rhs_parts.end(), t - 1, part_floor);
  const Graph rhs = join_of_cliques(s, rhs_parts);

  const SpectralComparison cmp =
      compare_enclosures([&](double tol) { return spectral_radius(lhs, kind, {.tol = tol}); },
                         [&](double tol) { return spectral_radius(rhs, kind, {.tol = tol}); }, options.tol,
                         options.refinements);
  Verdict v;
  v.check = CheckId::lemma_spectral_max;
  v.witness.enclosure = cmp.first;
  v.witness.reference_enclosure = cmp.second;
  switch (cmp.order) {
    case SpectralOrder::less: v.status = Status::holds; break;
    case SpectralOrder::greater: v.status = Status::counterexample; break;
    case SpectralOrder::indistinguishable_at_tol: v.status = Status::indistinguishable; break;
  }
  v.audit.push_back(to_string(kind) + ": lhs vs rhs " + to_string(cmp.order));
  return v;
}

std::string classify_star_or_complete(const Graph& g) {
  const std::size_t n = g.order();
  if (2 * g.edge_count() == n * (n - 1)) return "complete";
  if (n >= 3 && g.edge_count() == n - 1) {
    for (Vertex v = 0; v < n; ++v)
      if (g.degree(v) == n - 1) return "star";
  }
  return "other";
}

Verdict check_bound_hong(const Graph& g, const CheckOptions& options) {
  Verdict v;
  v.check = CheckId::bound_hong;
  const double bound = hong_bound(g);
  const SpectralEnclosure enc = spectral_radius_by_components(g, MatrixKind::adjacency, {.tol = options.tol});
  v.witness.enclosure = enc;
  v.witness.bound = bound;
  if (enc.hi <= bound + options.tol) {
    v.status = Status::holds;
  } else if (enc.lo > bound + options.tol) {
    v.status = Status::counterexample;
    v.counterexample = CounterexampleBundle{encode_graph(g), {}, "", 0};
  } else {
    v.status = Status::indistinguishable;
  }
  v.witness.reversed_direction_holds = enc.hi + options.tol >= bound;
  if (const std::string label = equality_label(g, bound - enc.lo); !label.empty()) {
    v.witness.equality_class = label;
    v.audit.push_back("near-equality (" + label + ")");
  }
  v.audit.push_back("rho in [" + fmt(enc.lo) + ", " + fmt(enc.hi) + "], sqrt(2e-n+1) = " + fmt(bound));
  return v;
}

Verdict check_bound_das(const Graph& g, const CheckOptions& options) {
  Verdict v;
  v.check = CheckId::bound_das;
  const double bound = das_bound(g);
  const SpectralEnclosure enc =
      spectral_radius_by_components(g, MatrixKind::signless_laplacian, {.tol = options.tol});
  v.witness.enclosure = enc;
  v.witness.bound = bound;
  if (enc.hi <= bound + options.tol) {
    v.status = Status::holds;
  } else if (enc.lo > bound + options.tol) {
    v.status = Status::counterexample;
    v.counterexample = CounterexampleBundle{encode_graph(g), {}, "", 0};
  } else {
    v.status = Status::indistinguishable;
  }
  v.witness.reversed_direction_holds = enc.hi + options.tol >= bound;
  if (const std::string label = equality_label(g, bound - enc.lo); !label.empty()) {
    v.witness.equality_class = label;
    v.audit.push_back("near-equality (" + label + ")");
  }
  v.audit.push_back("q in [" + fmt(enc.lo) + ", " + fmt(enc.hi) + "], 2e/(n-1)+n-2 = " + fmt(bound));
  return v;
}

bool reverify(const Verdict& verdict, const Graph& g, const TheoremParams& params, const CheckOptions& options) {
  Verdict fresh;
  switch (verdict.check) {
    case CheckId::theorem_1: fresh = check_theorem_1(g, params, options); break;
    case CheckId::theorem_2: fresh = check_theorem_2(g, params, options); break;
    case CheckId::theorem_3: fresh = check_theorem_3(g, params, options); break;
    case CheckId::lemma_win: fresh = check_lemma_win(g, params.k, options); break;
    case CheckId::bound_hong: fresh = check_bound_hong(g, options); break;
    case CheckId::bound_das: fresh = check_bound_das(g, options); break;
    case CheckId::lemma_edge_max:
    case CheckId::lemma_spectral_max:
      throw std::invalid_argument("partition lemmas are not graph checks and cannot be re-verified from a graph");
  }
  if (fresh.status != verdict.status) return false;
  if (!same_certificate(fresh.witness.certificate, verdict.witness.certificate)) return false;
  if (fresh.witness.cut_set != verdict.witness.cut_set) return false;
  if (fresh.witness.ktree_transcript_hash != verdict.witness.ktree_transcript_hash) return false;
  if (verdict.counterexample) {
    const CounterexampleBundle& b = *verdict.counterexample;
    if (!fresh.counterexample) return false;
    if (b.graph6 != fresh.counterexample->graph6 || b.toughness_witness != fresh.counterexample->toughness_witness ||
        b.toughness_value != fresh.counterexample->toughness_value ||
        b.ktree_transcript_hash != fresh.counterexample->ktree_transcript_hash) {
      return false;
    }
    const Graph decoded = g.order() <= kGraph6MaxOrder ? parse_graph6(b.graph6) : parse_edgelist(b.graph6);
    if (!(decoded == g)) return false;
  }
  if (verdict.witness.certificate && !validate_ktree(g, verdict.witness.certificate->k, *verdict.witness.certificate)) {
    return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// Audit

Rational proof_poly_f(const TheoremParams& params, std::size_t n_in, const Rational& s) {
  const Rational k = rat(params.k);
  const Rational n = rat(n_in);
  return 2 * (k - 2) * s * s - (2 * k * n - k * k - k - 4 * n + 2) * s + n * n - 6 * n + 7;
}

Rational proof_poly_g(const TheoremParams& params, std::size_t n_in, const Rational& s, bool doubled) {
  const Rational k = rat(params.k);
  const Rational n = rat(n_in);
  const Rational lead = doubled ? Rational(2 * n * n) : Rational(n * n);
  return 2 * (k - 2) * s * s - (2 * k * n - k * k - k - 4 * n + 2) * s + lead - 8 * n + 8;
}

Rational edge_difference(const TheoremParams& params, std::size_t n_in, const Rational& s) {
  const Rational k = rat(params.k);
  const Rational t = rat(params.t);
  const Rational n = rat(n_in);
  return choose2_poly(n - 3 * t * (k - 2) - 2) + 3 * t * (3 * t * (k - 2) + 2) - choose2_poly(n - (k - 2) * s - 2) -
         s * (s * (k - 2) + 2);
}

bool AuditReport::all_hold() const {
  return std::all_of(conditions.begin(), conditions.end(),
                     [](const AuditCondition& c) { return !c.asserted || !c.applicable || c.holds; });
}

const AuditCondition* AuditReport::find(const std::string& id) const {
  for (const auto& c : conditions)
    if (c.id == id) return &c;
  return nullptr;
}

AuditReport audit_proof_polynomials(const TheoremParams& params, std::size_t n) {
  params.validate();
  const ThresholdSet th = thresholds(params, n);
  const std::size_t k = params.k;
  const std::size_t t = params.t;
  const std::size_t family_gate = 3 * t * (k - 1) + 3;

  AuditReport report;
  report.params = params;
  report.n = n;
  report.s_min = 3 * t + 1;
  report.s_max = n >= 3 ? (n - 3) / (k - 1) : 0;
  const bool empty_range = report.s_max < report.s_min;
  const Rational s0 = rat(report.s_min);
  const Rational endpoint = n >= 3 ? Rational(static_cast<std::int64_t>(n - 3), static_cast<std::int64_t>(k - 1))
                                   : Rational(0);

  auto start = [&](std::string id, std::string description, std::size_t gate, bool asserted) {
    AuditCondition c;
    c.id = std::move(id);
    c.description = std::move(description);
    c.gate = std::max(gate, family_gate);
    c.applicable = n >= c.gate;
    c.vacuous = c.applicable && empty_range;
    c.asserted = asserted;
    return c;
  };
  auto over_range = [&](AuditCondition& c, auto&& value_at, auto&& ok) {
    if (!c.applicable || c.vacuous) return;
    for (std::size_t s = report.s_min; s <= report.s_max; ++s) {
      const Rational value = value_at(rat(s));
      if (!ok(value)) {
        c.holds = false;
        c.violations.emplace_back(std::to_string(s), to_string(value));
      }
    }
  };

  // (a) the size chain in the proof of the edge theorem.
  AuditCondition a = start("a", "edge bound minus e(G2(s)) >= 0", th.n_edge, true);
  over_range(a, [&](const Rational& s) { return edge_difference(params, n, s); },
             [](const Rational& d) { return d >= 0; });
  report.conditions.push_back(a);

  // (b) f attains its maximum over the range at s = 3t+1.
  const Rational f0 = proof_poly_f(params, n, s0);
  AuditCondition b = start("b", "f(s) <= f(3t+1)", th.n_rho, true);
  over_range(b, [&](const Rational& s) { return f0 - proof_poly_f(params, n, s); },
             [](const Rational& d) { return d >= 0; });
  report.conditions.push_back(b);

  // (c) same for g; the constant term cancels in the difference.
  const Rational g0 = proof_poly_g(params, n, s0, true);
  AuditCondition c = start("c", "g(s) <= g(3t+1)", th.n_q, true);
  over_range(c, [&](const Rational& s) { return g0 - proof_poly_g(params, n, s, true); },
             [](const Rational& d) { return d >= 0; });
  report.conditions.push_back(c);

  // (d) endpoint comparison at the rational right end (n-3)/(k-1).
  AuditCondition d = start("d", "f(3t+1) - f((n-3)/(k-1)) >= 0", th.n_rho, true);
  if (d.applicable && !d.vacuous) {
    const Rational diff = f0 - proof_poly_f(params, n, endpoint);
    d.holds = diff >= 0;
    d.values.emplace_back("f(3t+1)", to_string(f0));
    d.values.emplace_back("f(endpoint)", to_string(proof_poly_f(params, n, endpoint)));
    d.values.emplace_back("endpoint", to_string(endpoint));
    d.values.emplace_back("difference", to_string(diff));
    if (!d.holds) d.violations.emplace_back(to_string(endpoint), to_string(diff));
  }
  report.conditions.push_back(d);

  // Informational readings of the chains after the polynomial maximisation.
  const Rational m = rat(n) - 3 * rat(t) * (rat(k) - 2) - 2;  // order of the clique inside the extremal graph

  AuditCondition chain_f = start("f_chain", "f(3t+1) < (n-3t(k-2)-3)^2", th.n_rho, false);
  if (chain_f.applicable && !chain_f.vacuous) {
    const Rational rhs = (m - 1) * (m - 1);
    chain_f.holds = f0 < rhs;
    chain_f.values.emplace_back("f(3t+1)", to_string(f0));
    chain_f.values.emplace_back("(n-3t(k-2)-3)^2", to_string(rhs));
  }
  report.conditions.push_back(chain_f);

  // The bound the chain needs in the end: sqrt(f(3t+1)) below rho(extremal),
  // using the certified lower end of the extremal enclosure.
  AuditCondition direct_f = start("f_vs_extremal", "f(3t+1) < rho(extremal)^2 (certified lower bound)", th.n_rho, false);
  if (direct_f.applicable && !direct_f.vacuous) {
    const SpectralEnclosure e =
        spectral_radius(build_split_family(extremal_params(k, t, n)), MatrixKind::adjacency, {});
    const Rational lo(e.lo);
    direct_f.holds = f0 < lo * lo;
    direct_f.values.emplace_back("f(3t+1)", to_string(f0));
    direct_f.values.emplace_back("rho_lo^2", fmt(e.lo * e.lo));
  }
  report.conditions.push_back(direct_f);

  // 2e(G2(s)) counted from the binomial, and as the expanded polynomial the
  // chains use. They differ by (k-2)^2 s(s-1).
  auto two_e_exact = [&](const Rational& s) {
    return 2 * choose2_poly(rat(n) - (rat(k) - 2) * s - 2) + 2 * s * ((rat(k) - 2) * s + 2);
  };
  auto two_e_expanded = [&](const Rational& s) { return proof_poly_f(params, n, s) + rat(n) - 1; };

  AuditCondition expansion = start("e_G2_expansion", "expanded 2e(G2(s)) equals 2*C(n-(k-2)s-2,2)+2s((k-2)s+2)",
                                   th.n_rho, false);
  over_range(expansion, [&](const Rational& s) { return two_e_exact(s) - two_e_expanded(s); },
             [](const Rational& diff) { return diff == 0; });
  report.conditions.push_back(expansion);

  // Which constant term makes g(s) equal (n-1) times the Das bound applied to
  // the expanded 2e(G2(s)).
  for (bool doubled : {false, true}) {
    AuditCondition r = start(doubled ? "g_constant_2n2" : "g_constant_n2",
                             doubled ? "g with 2n^2-8n+8 equals expanded 2e(G2(s)) + (n-1)(n-2)"
                                     : "g with n^2-8n+8 equals expanded 2e(G2(s)) + (n-1)(n-2)",
                             th.n_q, false);
    over_range(
        r,
        [&](const Rational& s) {
          return proof_poly_g(params, n, s, doubled) - (two_e_expanded(s) + (rat(n) - 1) * (rat(n) - 2));
        },
        [](const Rational& diff) { return diff == 0; });
    report.conditions.push_back(r);
  }

  // (b) and (c) redone with the exact edge count of G2(s).
  const Rational f_exact0 = two_e_exact(s0) - rat(n) + 1;
  AuditCondition b_exact = start("b_exact", "2e(G2(s))-n+1 <= its value at 3t+1 (exact edge count)", th.n_rho, false);
  over_range(b_exact, [&](const Rational& s) { return f_exact0 - (two_e_exact(s) - rat(n) + 1); },
             [](const Rational& diff) { return diff >= 0; });
  report.conditions.push_back(b_exact);
  AuditCondition c_exact = start("c_exact", "2e(G2(s))+(n-1)(n-2) <= its value at 3t+1 (exact edge count)",
                                 th.n_q, false);
  over_range(c_exact, [&](const Rational& s) { return two_e_exact(s0) - two_e_exact(s); },
             [](const Rational& diff) { return diff >= 0; });
  report.conditions.push_back(c_exact);

  // The final comparison against the clique K_m, under both values of q(K_m).
  const Rational das_g2 = n >= 2 ? g0 / (rat(n) - 1) : Rational(0);
  AuditCondition literal = start("qK_literal", "g(3t+1)/(n-1) < n-3t(k-2)-2 (q(K_m) read as m)", th.n_q, false);
  AuditCondition corrected =
      start("qK_corrected", "g(3t+1)/(n-1) <= 2(n-3t(k-2)-2)-2 (q(K_m) = 2m-2)", th.n_q, false);
  if (literal.applicable && !literal.vacuous) {
    literal.holds = das_g2 < m;
    literal.values.emplace_back("g(3t+1)/(n-1)", to_string(das_g2));
    literal.values.emplace_back("m", to_string(m));
    corrected.holds = das_g2 <= 2 * m - 2;
    corrected.values.emplace_back("g(3t+1)/(n-1)", to_string(das_g2));
    corrected.values.emplace_back("2m-2", to_string(2 * m - 2));
  }
  report.conditions.push_back(literal);
  report.conditions.push_back(corrected);
  return report;
}

}  // namespace toughtree
