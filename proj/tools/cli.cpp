#include "toughtree/cli.hpp"

#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <thread>

#include "CLI11.hpp"
#include "toughtree/generate.hpp"
#include "toughtree/graph_io.hpp"
#include "toughtree/invariants.hpp"
#include "toughtree/report.hpp"
#include "toughtree/scan.hpp"
#include "toughtree/spectral.hpp"
#include "toughtree/theorems.hpp"

namespace toughtree::cli {

namespace {

using report::Json;

struct Shared {
  std::string input = "-";
  std::string format = "graph6";
  double tol = kDefaultTolerance;
  long long timeout_ms = 0;
  std::size_t workers = std::max(1u, std::thread::hardware_concurrency());
  std::string output = "json";
  bool strict = false;
  bool lenient = false;
};

void add_shared(CLI::App* sub, Shared& s) {
  sub->add_option("--input", s.input, "graph stream path, or - for standard input")->capture_default_str();
  sub->add_option("--format", s.format, "stream format")
      ->check(CLI::IsMember({"graph6", "edgelist"}))
      ->capture_default_str();
  sub->add_option("--tol", s.tol, "spectral enclosure width")->check(CLI::PositiveNumber)->capture_default_str();
  sub->add_option("--timeout-ms", s.timeout_ms, "per-graph k-tree search limit, 0 = none")
      ->check(CLI::NonNegativeNumber)
      ->capture_default_str();
  sub->add_option("--workers", s.workers, "worker threads")->check(CLI::PositiveNumber);
  sub->add_option("--output", s.output, "output format")
      ->check(CLI::IsMember({"json", "table"}))
      ->capture_default_str();
  auto* strict = sub->add_flag("--strict", s.strict, "abort on the first malformed record (default)");
  sub->add_flag("--lenient", s.lenient, "report malformed records and keep reading")->excludes(strict);
}

CheckOptions check_options(const Shared& s) {
  CheckOptions o;
  o.tol = s.tol;
  o.ktree_timeout = std::chrono::milliseconds(s.timeout_ms);
  return o;
}

// Owns the input stream when it is a file.
class Input {
 public:
  Input(const Shared& s, std::istream& fallback) {
    if (s.input == "-") {
      stream_ = &fallback;
    } else {
      file_ = std::make_unique<std::ifstream>(s.input);
      if (!*file_) throw std::runtime_error("cannot open input '" + s.input + "'");
      stream_ = file_.get();
    }
    reader_ = std::make_unique<GraphStreamReader>(
        *stream_, s.format == "edgelist" ? StreamFormat::edgelist : StreamFormat::graph6, !s.lenient);
  }
  GraphStreamReader& reader() { return *reader_; }

 private:
  std::unique_ptr<std::ifstream> file_;
  std::istream* stream_ = nullptr;
  std::unique_ptr<GraphStreamReader> reader_;
};

std::string encode(const Graph& g) { return g.order() <= kGraph6MaxOrder ? write_graph6(g) : write_edgelist(g); }

Json error_record(const StreamItem& item) {
  return Json{{"index", item.index}, {"status", "error"}, {"line", item.error().line}, {"error", item.error().message}};
}

int scan_exit(const ScanSummary& s) {
  if (s.has_counterexample()) return kCounterexample;
  if (s.has_unknown()) return kUnknown;
  if (s.errors > 0) return kUsageError;
  return kOk;
}

int emit_scan(const GraphSource& source, const ScanOptions& options, const Shared& shared, std::ostream& out) {
  const bool table = shared.output == "table";
  if (table) out << report::table_header() << '\n';
  const ScanSummary summary = scan_stream(source, options, [&](const ScanRecord& r) {
    if (table) {
      out << report::table_row(r) << '\n';
    } else {
      out << report::record_json(r).dump() << '\n';
    }
  });
  if (table) {
    out << report::summary_table(summary);
  } else {
    out << report::summary_json(summary).dump() << '\n';
  }
  return scan_exit(summary);
}

std::optional<SpectralEnclosure> try_enclosure(const Graph& g, MatrixKind kind, double tol) {
  try {
    return spectral_radius_by_components(g, kind, {.tol = tol});
  } catch (const ConvergenceError&) {
    return std::nullopt;
  }
}

int cmd_invariants(const Shared& s, std::istream& in, std::ostream& out) {
  Input input(s, in);
  bool errors = false;
  const bool table = s.output == "table";
  if (table) out << "index   n     e       comps  tau          rho\n";
  while (auto item = input.reader().next()) {
    if (!item->ok()) {
      errors = true;
      if (table) {
        out << item->index << "  error: " << item->error().message << '\n';
      } else {
        out << error_record(*item).dump() << '\n';
      }
      continue;
    }
    const Graph& g = item->graph();
    std::optional<ToughnessResult> tough;
    if (g.order() >= 2 && g.order() <= kMaxExactOrder) tough = toughness(g);
    const auto rho = try_enclosure(g, MatrixKind::adjacency, s.tol);
    const auto q = try_enclosure(g, MatrixKind::signless_laplacian, s.tol);
    if (table) {
      std::ostringstream row;
      row.precision(12);
      row << item->index << "  " << g.order() << "  " << g.edge_count() << "  " << component_count(g) << "  "
          << (tough ? (tough->infinite() ? std::string("inf") : to_string(*tough->value)) : std::string("-")) << "  ";
      if (rho) {
        row << "[" << rho->lo << ", " << rho->hi << "]";
      } else {
        row << "-";
      }
      out << row.str() << '\n';
      continue;
    }
    Json j{{"index", item->index},
           {"graph6", encode(g)},
           {"n", g.order()},
           {"e", g.edge_count()},
           {"components", component_count(g)},
           {"connected", is_connected(g)}};
    j["toughness"] = tough ? report::to_json(*tough) : Json();
    j["rho"] = rho ? report::to_json(*rho) : Json();
    j["q"] = q ? report::to_json(*q) : Json();
    out << j.dump() << '\n';
  }
  return errors ? kUsageError : kOk;
}

struct ConstructArgs {
  std::string family = "extremal";
  std::size_t k = 3, t = 1, n = 0, s = 0, a = 0, p = 0, m = 0;
  std::string emit = "graph6";
};

int cmd_construct(const ConstructArgs& c, std::ostream& out) {
  Graph g(1);
  if (c.family == "extremal") {
    TheoremParams{c.k, c.t}.validate();
    g = build_split_family(extremal_params(c.k, c.t, c.n));
  } else if (c.family == "split") {
    g = build_split_family({c.s, c.a, c.p});
  } else if (c.family == "complete") {
    g = complete(c.n);
  } else if (c.family == "empty") {
    g = empty_graph(c.n);
  } else if (c.family == "path") {
    g = path(c.n);
  } else if (c.family == "cycle") {
    g = cycle(c.n);
  } else if (c.family == "star") {
    g = star(c.m);
  } else if (c.family == "bipartite") {
    g = complete_bipartite(c.n, c.m);
  }
  if (c.emit == "edgelist") {
    out << write_edgelist(g);
  } else {
    out << write_graph6(g) << '\n';
  }
  return kOk;
}

int cmd_ktree(const Shared& s, std::size_t k, std::istream& in, std::ostream& out) {
  Input input(s, in);
  bool errors = false;
  bool timeouts = false;
  KTreeSearchOptions options;
  options.timeout = std::chrono::milliseconds(s.timeout_ms);
  while (auto item = input.reader().next()) {
    if (!item->ok()) {
      errors = true;
      out << error_record(*item).dump() << '\n';
      continue;
    }
    const Graph& g = item->graph();
    Json j{{"index", item->index}, {"graph6", encode(g)}, {"k", k}};
    try {
      const KTreeResult r = find_spanning_ktree(g, k, options);
      if (r.outcome == KTreeOutcome::timeout) timeouts = true;
      j["outcome"] = to_string(r.outcome);
      j["method"] = to_string(r.method);
      j["nodes"] = r.nodes;
      Witness w;
      w.ktree_transcript_hash = r.transcript_hash;
      j["transcript_hash"] = report::to_json(w)["ktree_transcript_hash"];
      j["certificate"] = r.certificate ? report::to_json(*r.certificate) : Json();
    } catch (const std::exception& e) {
      errors = true;
      j["status"] = "error";
      j["error"] = e.what();
    }
    if (s.output == "table") {
      out << item->index << "  " << j.value("outcome", std::string("error")) << '\n';
    } else {
      out << j.dump() << '\n';
    }
  }
  if (timeouts) return kUnknown;
  return errors ? kUsageError : kOk;
}

std::vector<CheckId> parse_checks(const std::vector<std::string>& names) {
  std::vector<CheckId> checks;
  for (const auto& name : names) {
    const auto id = parse_check_id(name);
    if (!id) throw CLI::ValidationError("--check", "unknown check '" + name + "'");
    checks.push_back(*id);
  }
  return checks;
}

struct LemmaArgs {
  std::string lemma = "edge_max";
  std::size_t n = 0, s = 0, p = 1;
  std::vector<std::size_t> parts;
  std::string kind = "both";
  bool exhaustive = false;
  std::size_t max_n = 12, s_min = 1, s_max = 4, t_min = 2, t_max = 5, p_min = 1, p_max = 2;
};

int cmd_lemmas(const LemmaArgs& a, const Shared& sh, std::ostream& out) {
  const CheckOptions opts = check_options(sh);
  std::map<std::string, std::size_t> counts;
  std::size_t counterexamples = 0;
  std::size_t unknown = 0;
  auto emit = [&](std::size_t n, std::size_t s, const std::vector<std::size_t>& parts, std::optional<std::size_t> p,
                  const Verdict& v) {
    ++counts[to_string(v.check) + "/" + to_string(v.status)];
    if (v.status == Status::counterexample) ++counterexamples;
    if (v.status == Status::indistinguishable) ++unknown;
    if (sh.output == "table") {
      std::ostringstream row;
      row << to_string(v.check) << " n=" << n << " s=" << s << " parts=";
      for (std::size_t i = 0; i < parts.size(); ++i) row << (i ? "," : "") << parts[i];
      if (p) row << " p=" << *p;
      row << "  " << to_string(v.status);
      if (v.witness.equality_class) row << " (" << *v.witness.equality_class << ")";
      out << row.str() << '\n';
      return;
    }
    Json j{{"check", to_string(v.check)}, {"n", n}, {"s", s}, {"parts", parts}};
    if (p) j["p"] = *p;
    j["status"] = to_string(v.status);
    j["witness"] = report::to_json(v.witness);
    out << j.dump() << '\n';
  };
  std::vector<MatrixKind> kinds;
  if (a.kind != "signless_laplacian") kinds.push_back(MatrixKind::adjacency);
  if (a.kind != "adjacency") kinds.push_back(MatrixKind::signless_laplacian);

  if (!a.exhaustive) {
    if (a.lemma == "edge_max") {
      emit(a.n, a.s, a.parts, std::nullopt, check_lemma_edge_max(a.n, a.s, a.parts));
    } else {
      for (MatrixKind kind : kinds) emit(a.n, a.s, a.parts, a.p, check_lemma_spectral_max(a.n, a.s, a.parts, a.p, kind, opts));
    }
  } else if (a.lemma == "edge_max") {
    for (std::size_t n = 1; n <= a.max_n; ++n)
      for (std::size_t s = a.s_min; s <= a.s_max && s < n; ++s)
        for (std::size_t t = a.t_min; t <= a.t_max; ++t)
          for_each_partition(n - s, t, 1, [&](const std::vector<std::size_t>& parts) {
            emit(n, s, parts, std::nullopt, check_lemma_edge_max(n, s, parts));
          });
  } else {
    for (std::size_t n = 1; n <= a.max_n; ++n)
      for (std::size_t s = a.s_min; s <= a.s_max && s < n; ++s)
        for (std::size_t p = a.p_min; p <= a.p_max; ++p)
          for (std::size_t t = 1; t * p <= n - s; ++t)
            for_each_partition(n - s, t, p, [&](const std::vector<std::size_t>& parts) {
              if (parts.front() >= n - s - p * (t - 1)) return;
              for (MatrixKind kind : kinds) emit(n, s, parts, p, check_lemma_spectral_max(n, s, parts, p, kind, opts));
            });
  }
  Json summary = Json::object();
  for (const auto& [key, count] : counts) summary[key] = count;
  if (sh.output == "table") {
    for (const auto& [key, count] : counts) out << key << ": " << count << '\n';
  } else {
    out << Json{{"summary", summary}}.dump() << '\n';
  }
  if (counterexamples) return kCounterexample;
  return unknown ? kUnknown : kOk;
}

int cmd_audit(const TheoremParams& params, std::size_t n_from, std::size_t n_to, const Shared& sh,
              std::ostream& out) {
  bool ok = true;
  for (std::size_t n = n_from; n <= n_to; ++n) {
    const AuditReport r = audit_proof_polynomials(params, n);
    ok = ok && r.all_hold();
    if (sh.output == "table") {
      out << "k=" << params.k << " t=" << params.t << " n=" << n << " s=[" << r.s_min << "," << r.s_max << "]\n";
      for (const auto& c : r.conditions) {
        out << "  " << c.id << (c.asserted ? "" : " (info)") << ": "
            << (!c.applicable ? "below gate " + std::to_string(c.gate)
                              : c.vacuous ? std::string("vacuous") : c.holds ? std::string("holds")
                                                                             : std::string("FAILS"))
            << '\n';
      }
    } else {
      out << report::to_json(r).dump() << '\n';
    }
  }
  return ok ? kOk : kCounterexample;
}

int cmd_thresholds(const TheoremParams& params, std::optional<std::size_t> n_opt, const Shared& sh,
                   std::ostream& out) {
  const std::size_t n = n_opt ? *n_opt : thresholds(params, 1).n_rho;
  const ThresholdSet th = thresholds(params, n);
  const Json j = report::to_json(th, params, n);
  if (sh.output == "table") {
    for (const auto& [key, value] : j.items()) out << key << ": " << (value.is_string() ? value.get<std::string>() : value.dump()) << '\n';
  } else {
    out << j.dump() << '\n';
  }
  return kOk;
}

}  // namespace

int run(int argc, const char* const* argv, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Toughness, spectral radius and spanning k-tree verification", "toughtree"};
  app.require_subcommand(1);
  Shared shared;
  TheoremParams params;
  std::optional<std::size_t> n_opt;

  auto* invariants = app.add_subcommand("invariants", "n, e, components, toughness and spectral enclosures per graph");
  add_shared(invariants, shared);

  ConstructArgs construct_args;
  auto* construct = app.add_subcommand("construct", "emit a named graph");
  construct->add_option("--family", construct_args.family)
      ->check(CLI::IsMember({"extremal", "split", "complete", "empty", "path", "cycle", "star", "bipartite"}))
      ->capture_default_str();
  construct->add_option("--k", construct_args.k)->capture_default_str();
  construct->add_option("--t", construct_args.t)->capture_default_str();
  construct->add_option("--n", construct_args.n, "order (bipartite: first side)");
  construct->add_option("--s", construct_args.s, "split family hubs");
  construct->add_option("--a", construct_args.a, "split family clique part");
  construct->add_option("--p", construct_args.p, "split family independent part");
  construct->add_option("--m", construct_args.m, "star leaves / bipartite second side");
  construct->add_option("--emit", construct_args.emit)->check(CLI::IsMember({"graph6", "edgelist"}))->capture_default_str();

  std::size_t ktree_k = 3;
  auto* ktree = app.add_subcommand("ktree", "exact spanning k-tree decision per graph");
  add_shared(ktree, shared);
  ktree->add_option("--k", ktree_k, "degree cap")->check(CLI::Range(2, 64))->capture_default_str();

  std::optional<int> theorem;
  std::vector<std::string> check_names;
  auto* check = app.add_subcommand("check", "apply theorem/lemma checks to a graph stream");
  add_shared(check, shared);
  check->add_option("--theorem", theorem)->check(CLI::Range(1, 3));
  check->add_option("--check", check_names, "theorem_1..3, lemma_win, bound_hong, bound_das");
  check->add_option("--k", params.k)->capture_default_str();
  check->add_option("--t", params.t)->capture_default_str();

  LemmaArgs lemma_args;
  auto* lemmas = app.add_subcommand("lemmas", "partition lemmas, single case or exhaustive");
  add_shared(lemmas, shared);
  lemmas->add_option("--lemma", lemma_args.lemma)
      ->check(CLI::IsMember({"edge_max", "spectral_max"}))
      ->capture_default_str();
  lemmas->add_option("--n", lemma_args.n);
  lemmas->add_option("--s", lemma_args.s);
  lemmas->add_option("--parts", lemma_args.parts)->delimiter(',');
  lemmas->add_option("--p", lemma_args.p, "part floor")->capture_default_str();
  lemmas->add_option("--kind", lemma_args.kind)
      ->check(CLI::IsMember({"adjacency", "signless_laplacian", "both"}))
      ->capture_default_str();
  lemmas->add_flag("--exhaustive", lemma_args.exhaustive);
  lemmas->add_option("--max-n", lemma_args.max_n)->capture_default_str();
  lemmas->add_option("--s-min", lemma_args.s_min)->capture_default_str();
  lemmas->add_option("--s-max", lemma_args.s_max)->capture_default_str();
  lemmas->add_option("--t-min", lemma_args.t_min, "edge_max part count range")->capture_default_str();
  lemmas->add_option("--t-max", lemma_args.t_max)->capture_default_str();
  lemmas->add_option("--p-min", lemma_args.p_min, "spectral_max part floor range")->capture_default_str();
  lemmas->add_option("--p-max", lemma_args.p_max)->capture_default_str();

  std::optional<std::size_t> enumerate;
  std::optional<std::size_t> random_count;
  std::size_t random_n = 8;
  double random_p = 0.5;
  std::optional<std::size_t> delete_max;
  std::uint64_t seed = 1;
  std::vector<std::string> scan_checks{"lemma_win"};
  auto* scan = app.add_subcommand("scan", "scan enumerated, random or streamed graphs");
  add_shared(scan, shared);
  auto* enumerate_opt =
      scan->add_option("--enumerate", enumerate, "all connected labeled graphs of this order (<= 7)")
          ->check(CLI::Range(1, static_cast<int>(kMaxEnumerationOrder)));
  auto* random_opt = scan->add_option("--random", random_count, "number of seeded random graphs");
  random_opt->excludes(enumerate_opt);
  scan->add_option("--n", random_n, "order of random graphs")->capture_default_str();
  scan->add_option("--p", random_p, "edge probability of random graphs")->capture_default_str();
  scan->add_option("--delete-max", delete_max, "random graphs are K_n minus up to this many edges");
  scan->add_option("--seed", seed)->capture_default_str();
  scan->add_option("--check", scan_checks)->capture_default_str();
  scan->add_option("--k", params.k)->capture_default_str();
  scan->add_option("--t", params.t)->capture_default_str();

  std::optional<std::size_t> n_from, n_to;
  auto* audit = app.add_subcommand("audit", "exact audit of the proof polynomials");
  add_shared(audit, shared);
  audit->add_option("--k", params.k)->capture_default_str();
  audit->add_option("--t", params.t)->capture_default_str();
  audit->add_option("--n", n_opt);
  audit->add_option("--n-from", n_from);
  audit->add_option("--n-to", n_to);

  auto* thresholds_cmd = app.add_subcommand("thresholds", "order gates and size bound for (k, t)");
  add_shared(thresholds_cmd, shared);
  thresholds_cmd->add_option("--k", params.k)->capture_default_str();
  thresholds_cmd->add_option("--t", params.t)->capture_default_str();
  thresholds_cmd->add_option("--n", n_opt);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsageError;
  }

  try {
    if (invariants->parsed()) return cmd_invariants(shared, in, out);
    if (construct->parsed()) {
      if (construct_args.family == "extremal" && construct_args.n == 0) {
        throw std::invalid_argument("construct --family extremal needs --n");
      }
      return cmd_construct(construct_args, out);
    }
    if (ktree->parsed()) return cmd_ktree(shared, ktree_k, in, out);
    if (check->parsed()) {
      params.validate();
      ScanOptions options;
      options.params = params;
      if (theorem) options.checks.push_back(*parse_check_id(std::to_string(*theorem)));
      for (CheckId id : parse_checks(check_names)) options.checks.push_back(id);
      if (options.checks.empty()) throw std::invalid_argument("check needs --theorem or --check");
      options.check = check_options(shared);
      options.workers = shared.workers;
      Input input(shared, in);
      return emit_scan(source_from_reader(input.reader()), options, shared, out);
    }
    if (lemmas->parsed()) {
      if (!lemma_args.exhaustive && lemma_args.parts.empty()) {
        throw std::invalid_argument("lemmas needs --parts (with --n and --s) or --exhaustive");
      }
      return cmd_lemmas(lemma_args, shared, out);
    }
    if (scan->parsed()) {
      params.validate();
      ScanOptions options;
      options.params = params;
      options.checks = parse_checks(scan_checks);
      options.check = check_options(shared);
      options.workers = shared.workers;
      if (enumerate) {
        if (shared.input != "-") throw std::invalid_argument("--enumerate and --input are mutually exclusive");
        LabeledGraphEnumerator gen(*enumerate);
        return emit_scan(source_from_enumerator(gen), options, shared, out);
      }
      if (random_count) {
        if (shared.input != "-") throw std::invalid_argument("--random and --input are mutually exclusive");
        options.seed = seed;
        auto rng = std::make_shared<Rng>(seed);
        auto index = std::make_shared<std::size_t>(0);
        const std::size_t count = *random_count;
        GraphSource source = [=]() -> std::optional<StreamItem> {
          if (*index >= count) return std::nullopt;
          Graph g = delete_max ? complete_minus_edges(random_n, *delete_max, *rng)
                               : random_connected_graph(random_n, random_p, *rng);
          StreamItem item{*index, 0, std::move(g)};
          ++*index;
          return item;
        };
        return emit_scan(source, options, shared, out);
      }
      Input input(shared, in);
      return emit_scan(source_from_reader(input.reader()), options, shared, out);
    }
    if (audit->parsed()) {
      params.validate();
      const ThresholdSet th = thresholds(params, 1);
      std::size_t lo = n_opt ? *n_opt : n_from.value_or(th.n_rho);
      std::size_t hi = n_opt ? *n_opt : n_to.value_or(lo);
      if (hi < lo) throw std::invalid_argument("--n-to must not be below --n-from");
      return cmd_audit(params, lo, hi, shared, out);
    }
    if (thresholds_cmd->parsed()) {
      params.validate();
      return cmd_thresholds(params, n_opt, shared, out);
    }
  } catch (const ParseError& e) {
    err << "input error: " << e.what() << " (offset " << e.offset() << ")\n";
    return kUsageError;
  } catch (const CLI::ValidationError& e) {
    err << e.what() << '\n';
    return kUsageError;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  } catch (const std::runtime_error& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  }
  return kUsageError;
}

}  // namespace toughtree::cli
