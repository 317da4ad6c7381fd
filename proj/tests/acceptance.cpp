// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any FAIL.
#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "oracles.hpp"
#include "toughtree/generate.hpp"
#include "toughtree/graph_io.hpp"
#include "toughtree/invariants.hpp"
#include "toughtree/ktree.hpp"
#include "toughtree/scan.hpp"
#include "toughtree/spectral.hpp"
#include "toughtree/theorems.hpp"

using namespace toughtree;

namespace {

using Clock = std::chrono::steady_clock;

struct Outcome {
  bool pass = true;
  std::string detail;
};

int failures = 0;

void report(const char* id, const char* name, const std::function<Outcome()>& body) {
  const auto start = Clock::now();
  Outcome o;
  try {
    o = body();
  } catch (const std::exception& e) {
    o = {false, std::string("exception: ") + e.what()};
  }
  const double secs = std::chrono::duration<double>(Clock::now() - start).count();
  if (!o.pass) ++failures;
  std::printf("[%s] %s %s: %s (%.1f s)\n", o.pass ? "PASS" : "FAIL", id, name, o.detail.c_str(), secs);
  std::fflush(stdout);
}

std::size_t workers() { return std::max<std::size_t>(1, std::thread::hardware_concurrency()); }

const TheoremParams kGrid[] = {{3, 1}, {4, 1}, {3, 2}};

std::vector<std::size_t> grid_orders(const TheoremParams& p) {
  const std::size_t n = thresholds(p, 1).n_rho;
  return {n, n + 1, n + 5};
}

// Runs fn(n, graph) over every connected labeled graph with 2 <= n <= max_n,
// split across threads by enumeration index.
template <typename Fn>
void for_all_connected(std::size_t max_n, std::size_t threads, Fn&& fn) {
  for (std::size_t n = 2; n <= max_n; ++n) {
    std::vector<std::thread> pool;
    for (std::size_t w = 0; w < threads; ++w) {
      pool.emplace_back([&, w] {
        LabeledGraphEnumerator e(n);
        std::size_t i = 0;
        while (auto g = e.next()) {
          if (i++ % threads == w) fn(w, *g);
        }
      });
    }
    for (auto& t : pool) t.join();
  }
}

Outcome win_sufficiency() {
  std::ostringstream detail;
  bool pass = true;
  for (std::size_t k : {3, 4}) {
    ScanOptions o;
    o.params = {k, 1};
    o.checks = {CheckId::lemma_win};
    o.workers = workers();
    std::size_t graphs = 0, counterexamples = 0, errors = 0, unknown = 0;
    for (std::size_t n = 1; n <= kMaxEnumerationOrder; ++n) {
      LabeledGraphEnumerator e(n);
      const ScanSummary s = scan_stream(source_from_enumerator(e), o);
      graphs += s.graphs;
      errors += s.errors;
      counterexamples += s.count(CheckId::lemma_win, Status::counterexample);
      unknown += s.count(CheckId::lemma_win, Status::unknown_timeout);
    }
    pass = pass && counterexamples == 0 && errors == 0 && unknown == 0;
    detail << "k=" << k << ": " << graphs << " graphs, " << counterexamples << " counterexamples, " << unknown
           << " timeouts; ";
  }
  return {pass, detail.str()};
}

Outcome toughness_oracle() {
  Rng rng(1001);
  std::size_t mismatches = 0;
  for (int i = 0; i < 500; ++i) {
    const std::size_t n = 4 + rng() % 7;
    const double p = 0.15 + 0.7 * static_cast<double>(rng() % 1000) / 1000.0;
    const Graph g = random_connected_graph(n, p, rng);
    const auto fast = toughness(g);
    const auto slow = oracle::toughness(g);
    if (fast.value != slow) ++mismatches;
  }
  return {mismatches == 0, "500 graphs, " + std::to_string(mismatches) + " mismatches"};
}

Outcome ktree_oracle() {
  Rng rng(1002);
  std::size_t disagreements = 0, invalid = 0, positives = 0, decisions = 0;
  for (int i = 0; i < 300; ++i) {
    const std::size_t n = 4 + rng() % 5;
    const double p = 0.15 + 0.6 * static_cast<double>(rng() % 1000) / 1000.0;
    const Graph g = random_connected_graph(n, p, rng);
    for (std::size_t k = 2; k <= 4; ++k) {
      const auto r = find_spanning_ktree(g, k);
      const bool expected = oracle::has_spanning_ktree(g, k);
      ++decisions;
      if (r.found() != expected) ++disagreements;
      if (r.found()) {
        ++positives;
        if (!validate_ktree(g, k, *r.certificate)) ++invalid;
      }
    }
  }
  std::ostringstream d;
  d << decisions << " decisions (" << positives << " positive), " << disagreements << " disagreements, " << invalid
    << " invalid certificates";
  return {disagreements == 0 && invalid == 0, d.str()};
}

Outcome spectral_certification() {
  constexpr double tol = 1e-9;
  std::size_t instances = 0, bad = 0;
  double slowest = 0;
  std::string first_bad;
  auto check = [&](const std::string& name, const Graph& g, double rho, double q) {
    for (auto [kind, value] : {std::pair{MatrixKind::adjacency, rho}, std::pair{MatrixKind::signless_laplacian, q}}) {
      const auto start = Clock::now();
      const SpectralEnclosure e = spectral_radius(g, kind, {.tol = tol});
      const double secs = std::chrono::duration<double>(Clock::now() - start).count();
      slowest = std::max(slowest, secs);
      ++instances;
      if (!(e.lo <= value && value <= e.hi && e.width() <= tol && secs < 0.1)) {
        if (bad++ == 0) first_bad = name + " " + to_string(kind);
      }
    }
  };
  for (std::size_t n = 2; n <= 50; ++n)
    check("K" + std::to_string(n), complete(n), static_cast<double>(n - 1), static_cast<double>(2 * n - 2));
  for (std::size_t n = 3; n <= 50; ++n) check("C" + std::to_string(n), cycle(n), 2.0, 4.0);
  for (std::size_t m = 2; m <= 30; ++m)
    check("K1," + std::to_string(m), star(m), std::sqrt(static_cast<double>(m)), static_cast<double>(m + 1));
  std::ostringstream d;
  d << instances << " enclosures, " << bad << " failures" << (bad ? " first " + first_bad : "") << ", slowest "
    << slowest * 1000 << " ms";
  return {bad == 0, d.str()};
}

Outcome hong_das() {
  constexpr double tol = 1e-9;
  const std::size_t threads = workers();
  std::vector<std::size_t> graphs(threads), hong_fail(threads), das_fail(threads), equality(threads),
      stray_equality(threads);
  for_all_connected(kMaxEnumerationOrder, threads, [&](std::size_t w, const Graph& g) {
    ++graphs[w];
    const SpectralEnclosure a = spectral_radius(g, MatrixKind::adjacency, {.tol = tol});
    const SpectralEnclosure q = spectral_radius(g, MatrixKind::signless_laplacian, {.tol = tol});
    const double hong = hong_bound(g);
    if (a.hi > hong + tol) ++hong_fail[w];
    if (q.hi > das_bound(g) + tol) ++das_fail[w];
    if (hong - a.lo < 1e-6) {
      ++equality[w];
      if (classify_star_or_complete(g).empty()) ++stray_equality[w];
    }
  });
  auto sum = [](const std::vector<std::size_t>& v) {
    std::size_t s = 0;
    for (auto x : v) s += x;
    return s;
  };
  std::ostringstream d;
  d << sum(graphs) << " graphs, Hong violations " << sum(hong_fail) << ", Das violations " << sum(das_fail)
    << ", Hong equality cases " << sum(equality) << " (" << sum(stray_equality) << " not star/complete)";
  return {sum(hong_fail) == 0 && sum(das_fail) == 0 && sum(stray_equality) == 0, d.str()};
}

Outcome extremal_identities() {
  std::ostringstream d;
  bool pass = true;
  for (const TheoremParams& p : kGrid) {
    for (std::size_t n : grid_orders(p)) {
      const ThresholdSet th = thresholds(p, n);
      const SplitFamilyParams ext = *th.extremal;
      const Graph g = build_split_family(ext);
      const auto tough = toughness(g);
      const VertexMask hubs = (VertexMask{1} << ext.hubs) - 1;
      const std::size_t comps = components_after_removal(g, hubs);
      const bool ok = tough.value && *tough.value == p.required_toughness() &&
                      comps == 3 * p.t * (p.k - 2) + 3 && BigInt(g.edge_count()) == th.edge_bound;
      if (!ok) {
        pass = false;
        d << "mismatch at (" << p.k << "," << p.t << "," << n << "); ";
      }
    }
  }
  d << "9 grid points checked";
  return {pass, d.str()};
}

std::size_t join_edges(std::size_t n, std::size_t s, const std::vector<std::size_t>& parts) {
  std::size_t e = s * (s - 1) / 2 + s * (n - s);
  for (std::size_t x : parts) e += x * (x - 1) / 2;
  return e;
}

Outcome edge_lemma() {
  std::size_t cases = 0, violations = 0, equality_mismatch = 0;
  for (std::size_t n = 1; n <= 12; ++n)
    for (std::size_t s = 1; s <= 4 && s < n; ++s)
      for (std::size_t t = 2; t <= 5; ++t)
        for_each_partition(n - s, t, 1, [&](const std::vector<std::size_t>& parts) {
          ++cases;
          const Verdict v = check_lemma_edge_max(n, s, parts);
          std::vector<std::size_t> top(t, 1);
          top[0] = n - s - t + 1;
          const std::size_t lhs = join_edges(n, s, parts);
          const std::size_t rhs = join_edges(n, s, top);
          if (v.status == Status::counterexample || lhs > rhs) ++violations;
          const bool equal_expected = parts == top;
          const bool equal_reported = v.witness.equality_class == "equality";
          if (equal_expected != equal_reported || (lhs == rhs) != equal_expected) ++equality_mismatch;
        });
  std::ostringstream d;
  d << cases << " partitions, " << violations << " violations, " << equality_mismatch << " misplaced equalities";
  return {violations == 0 && equality_mismatch == 0 && cases > 0, d.str()};
}

Outcome spectral_lemmas() {
  std::size_t cases = 0, strict = 0, indistinguishable = 0, other = 0;
  const CheckOptions opts{.tol = 1e-9};
  for (std::size_t n = 1; n <= 10; ++n)
    for (std::size_t s = 1; s <= 3 && s < n; ++s)
      for (std::size_t p = 1; p <= 2; ++p)
        for (std::size_t t = 1; t * p <= n - s; ++t)
          for_each_partition(n - s, t, p, [&](const std::vector<std::size_t>& parts) {
            if (parts.front() >= n - s - p * (t - 1)) return;
            for (MatrixKind kind : {MatrixKind::adjacency, MatrixKind::signless_laplacian}) {
              ++cases;
              const Verdict v = check_lemma_spectral_max(n, s, parts, p, kind, opts);
              if (v.status == Status::holds)
                ++strict;
              else if (v.status == Status::indistinguishable)
                ++indistinguishable;
              else
                ++other;
            }
          });
  std::ostringstream d;
  d << cases << " comparisons, " << strict << " certified strict, " << indistinguishable << " indistinguishable, "
    << other << " other";
  return {cases > 0 && strict == cases, d.str()};
}

Outcome theorem_2_sample() {
  const TheoremParams params{3, 1};
  CheckOptions opts;
  opts.ktree_timeout = std::chrono::seconds(10);
  ExtremalCache cache;
  Rng rng(2024);
  std::size_t survivors = 0, counterexamples = 0, timeouts = 0, other = 0;
  for (int i = 0; i < 1000; ++i) {
    const Graph g = complete_minus_edges(15, 10, rng);
    const Verdict v = check_theorem_2(g, params, opts, &cache);
    switch (v.status) {
      case Status::hypothesis_failed:
        break;
      case Status::holds_with_ktree:
      case Status::holds_extremal_match:
        ++survivors;
        break;
      case Status::counterexample:
        ++survivors, ++counterexamples;
        break;
      case Status::unknown_timeout:
        ++survivors, ++timeouts;
        break;
      default:
        ++survivors, ++other;
    }
  }
  std::ostringstream d;
  d << "1000 graphs (seed 2024), " << survivors << " satisfy the hypotheses, " << counterexamples
    << " counterexamples, " << timeouts << " timeouts";
  return {counterexamples == 0 && timeouts == 0 && other == 0, d.str()};
}

Outcome proof_audit() {
  std::size_t evaluations = 0, failed = 0;
  std::ostringstream d;
  for (const TheoremParams& p : kGrid) {
    const ThresholdSet th = thresholds(p, 1);
    const std::size_t lo = std::min({th.n_edge, th.n_rho, th.n_q});
    const std::size_t hi = std::max({th.n_edge, th.n_rho, th.n_q}) + 20;
    for (std::size_t n = lo; n <= hi; ++n) {
      const AuditReport r = audit_proof_polynomials(p, n);
      for (const char* id : {"a", "b", "c", "d"}) {
        const AuditCondition* c = r.find(id);
        if (!c || n < c->gate || n > c->gate + 20) continue;
        ++evaluations;
        if (!c->applicable || !c->holds) {
          if (failed++ == 0) d << "first failure " << id << " at (" << p.k << "," << p.t << "," << n << "); ";
        }
      }
    }
  }
  const TheoremParams k3t1{3, 1};
  const Rational tight = proof_poly_f(k3t1, 15, 4) - proof_poly_f(k3t1, 15, Rational(12, 2));
  d << evaluations << " condition evaluations, " << failed << " failures, f(4)-f(6) at (3,1,15) = " << to_string(tight);
  return {failed == 0 && evaluations > 0 && tight == 0, d.str()};
}

Graph random_graph_with_density(std::size_t n, Rng& rng) {
  std::bernoulli_distribution coin(static_cast<double>(rng() % 1001) / 1000.0);
  std::vector<Edge> edges;
  for (Vertex v = 1; v < n; ++v)
    for (Vertex u = 0; u < v; ++u)
      if (coin(rng)) edges.push_back({u, v});
  return Graph(n, edges);
}

Outcome graph6_round_trip() {
  Rng rng(1011);
  std::size_t round_trip_fail = 0;
  std::vector<std::string> records;
  for (int i = 0; i < 10000; ++i) {
    const std::size_t n = 1 + rng() % kGraph6MaxOrder;
    const Graph g = random_graph_with_density(n, rng);
    const std::string rec = write_graph6(g);
    if (!(parse_graph6(rec) == g) || write_graph6(parse_graph6(rec)) != rec || !(oracle::decode_graph6(rec) == g))
      ++round_trip_fail;
    if (i % 10 == 0) records.push_back(rec);
  }

  std::size_t rejected = 0, accepted = 0, silent_wrong = 0, unstructured = 0;
  for (const std::string& base : records) {
    std::string rec = base;
    switch (rng() % 4) {
      case 0:  // overwrite one byte with an arbitrary value
        rec[rng() % rec.size()] = static_cast<char>(rng() % 256);
        break;
      case 1:  // truncate
        rec.resize(rng() % rec.size());
        break;
      case 2:  // append a byte
        rec.push_back(static_cast<char>(rng() % 256));
        break;
      default:  // flip one bit
        rec[rng() % rec.size()] ^= static_cast<char>(1u << (rng() % 8));
    }
    std::optional<Graph> reference;
    try {
      reference = oracle::decode_graph6(rec);
    } catch (const std::exception&) {
    }
    try {
      const Graph g = parse_graph6(rec);
      ++accepted;
      if (!reference || !(*reference == g)) ++silent_wrong;
    } catch (const ParseError&) {
      ++rejected;
      if (reference && reference->order() > 0) ++silent_wrong;
    } catch (...) {
      ++unstructured;
    }
  }
  std::ostringstream d;
  d << "10000 round trips, " << round_trip_fail << " failures; 1000 mutations: " << rejected << " ParseError, "
    << accepted << " still valid, " << silent_wrong << " disagreeing with the reference decoder, " << unstructured
    << " unstructured errors";
  return {round_trip_fail == 0 && silent_wrong == 0 && unstructured == 0, d.str()};
}

Outcome extremal_ktree_report() {
  std::ostringstream d;
  for (const TheoremParams& p : kGrid) {
    std::vector<Graph> batch;
    for (std::size_t n : grid_orders(p)) batch.push_back(build_split_family(extremal_params(p.k, p.t, n)));
    ScanOptions o;
    o.params = p;
    o.checks = {CheckId::lemma_win};
    o.workers = workers();
    std::size_t i = 0;
    const auto orders = grid_orders(p);
    scan_stream(source_from_graphs(batch), o, [&](const ScanRecord& r) {
      d << "(" << p.k << "," << p.t << "," << orders[i++] << ")=";
      if (r.verdict && r.verdict->witness.ktree_exists)
        d << (*r.verdict->witness.ktree_exists ? "yes" : "no");
      else
        d << "undecided";
      d << " ";
    });
  }
  return {true, "spanning k-tree in extremal graph: " + d.str()};
}

}  // namespace

int main() {
  report("AC1", "Win sufficiency, all connected graphs n<=7, k in {3,4}", win_sufficiency);
  report("AC2", "toughness vs 2^n enumeration", toughness_oracle);
  report("AC3", "k-tree decision vs spanning-tree enumeration", ktree_oracle);
  report("AC4", "certified spectral radii of K_n, C_n, K_1,m", spectral_certification);
  report("AC5", "Hong/Das upper bounds, all connected graphs n<=7", hong_das);
  report("AC6", "extremal family identities", extremal_identities);
  report("AC7", "edge-maximisation lemma, exhaustive", edge_lemma);
  report("AC8", "spectral-maximisation lemmas, exhaustive", spectral_lemmas);
  report("AC9", "spectral theorem on K15 minus edges", theorem_2_sample);
  report("AC10", "proof-polynomial audit", proof_audit);
  report("AC11", "graph6 round trip and mutation fuzz", graph6_round_trip);
  report("AC12", "extremal spanning k-tree report", extremal_ktree_report);
  std::printf("%d criteria failed\n", failures);
  return failures == 0 ? 0 : 1;
}
