#include "toughtree/report.hpp"

#include <cstdio>
#include <sstream>

namespace toughtree::report {

namespace {

constexpr Status kStatuses[] = {Status::hypothesis_failed, Status::holds,           Status::holds_with_ktree,
                                Status::holds_extremal_match, Status::counterexample, Status::unknown_timeout,
                                Status::indistinguishable};

Json vertices(const std::vector<Vertex>& vs) {
  Json a = Json::array();
  for (Vertex v : vs) a.push_back(v);
  return a;
}

std::string hex64(std::uint64_t x) {
  char buf[19];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(x));
  return buf;
}

Json split_params(const SplitFamilyParams& p) { return Json{{"s", p.hubs}, {"a", p.clique}, {"p", p.independent}}; }

std::string pad(std::string s, std::size_t width) {
  if (s.size() < width) s.append(width - s.size(), ' ');
  return s;
}

std::string detail(const Verdict& v) {
  const Witness& w = v.witness;
  std::ostringstream os;
  if (w.cut_set) {
    os << "S={";
    for (std::size_t i = 0; i < w.cut_set->size(); ++i) os << (i ? "," : "") << (*w.cut_set)[i];
    os << "} c=" << w.cut_components.value_or(0);
  } else if (w.extremal_match) {
    os << describe(*w.extremal_match);
  } else if (w.certificate) {
    os << w.certificate->edges.size() << " tree edges";
  } else if (w.enclosure) {
    os.precision(12);
    os << "[" << w.enclosure->lo << ", " << w.enclosure->hi << "]";
  } else if (w.equality_class) {
    os << *w.equality_class;
  }
  return os.str();
}

}  // namespace

Json to_json(const SpectralEnclosure& e) {
  return Json{{"kind", to_string(e.kind)}, {"lo", e.lo}, {"hi", e.hi}, {"sweeps", e.sweeps}};
}

Json to_json(const KTreeCertificate& cert) {
  Json edges = Json::array();
  for (const Edge& e : cert.edges) edges.push_back(Json::array({e.u, e.v}));
  return Json{{"k", cert.k}, {"edges", edges}};
}

Json to_json(const Witness& w) {
  Json j = Json::object();
  if (w.cut_set) j["cut_set"] = vertices(*w.cut_set);
  if (w.cut_components) j["cut_components"] = *w.cut_components;
  if (w.certificate) j["certificate"] = to_json(*w.certificate);
  if (w.enclosure) j["enclosure"] = to_json(*w.enclosure);
  if (w.reference_enclosure) j["reference_enclosure"] = to_json(*w.reference_enclosure);
  if (w.extremal_match) j["extremal_match"] = split_params(*w.extremal_match);
  if (w.equality_class) j["equality_class"] = *w.equality_class;
  if (w.ktree_exists) j["ktree_exists"] = *w.ktree_exists;
  if (w.ktree_transcript_hash) j["ktree_transcript_hash"] = hex64(*w.ktree_transcript_hash);
  if (w.bound) j["bound"] = *w.bound;
  if (w.reversed_direction_holds) j["reversed_direction_holds"] = *w.reversed_direction_holds;
  return j;
}

Json to_json(const CounterexampleBundle& b) {
  return Json{{"graph6", b.graph6},
              {"toughness", b.toughness_value},
              {"toughness_witness", vertices(b.toughness_witness)},
              {"ktree_transcript_hash", hex64(b.ktree_transcript_hash)}};
}

Json to_json(const Verdict& v) {
  Json j{{"index", v.index}, {"check", to_string(v.check)}, {"status", to_string(v.status)}};
  j["witness"] = to_json(v.witness);
  if (v.counterexample) j["counterexample"] = to_json(*v.counterexample);
  j["audit"] = v.audit;
  return j;
}

Json to_json(const ToughnessResult& r) {
  Json j{{"value", r.infinite() ? std::string("inf") : to_string(*r.value)}};
  if (!r.infinite()) {
    j["witness"] = vertices(r.witness);
    j["witness_components"] = r.witness_components;
  }
  return j;
}

Json to_json(const ThresholdSet& th, const TheoremParams& params, std::size_t n) {
  Json j{{"k", params.k},
         {"t", params.t},
         {"n", n},
         {"tau_required", to_string(th.tau_required)},
         {"n_edge", th.n_edge},
         {"n_edge_exact", to_string(th.n_edge_exact)},
         {"n_rho", th.n_rho},
         {"n_q", th.n_q},
         {"edge_bound", th.edge_bound.str()}};
  j["extremal"] = th.extremal ? split_params(*th.extremal) : Json();
  return j;
}

Json to_json(const AuditReport& report) {
  Json conditions = Json::array();
  for (const AuditCondition& c : report.conditions) {
    Json cj{{"id", c.id},
            {"description", c.description},
            {"asserted", c.asserted},
            {"gate", c.gate},
            {"applicable", c.applicable},
            {"vacuous", c.vacuous},
            {"holds", c.holds}};
    Json violations = Json::array();
    for (const auto& [s, value] : c.violations) violations.push_back(Json{{"s", s}, {"value", value}});
    cj["violations"] = violations;
    Json values = Json::object();
    for (const auto& [name, value] : c.values) values[name] = value;
    cj["values"] = values;
    conditions.push_back(cj);
  }
  return Json{{"k", report.params.k}, {"t", report.params.t}, {"n", report.n},     {"s_min", report.s_min},
              {"s_max", report.s_max}, {"all_hold", report.all_hold()}, {"conditions", conditions}};
}

Json record_json(const ScanRecord& r) {
  Json j{{"index", r.index}, {"graph6", r.graph}};
  if (r.check) j["check"] = to_string(*r.check);
  if (r.error) {
    j["status"] = "error";
    j["error"] = *r.error;
    return j;
  }
  const Verdict& v = *r.verdict;
  j["status"] = to_string(v.status);
  j["witness"] = to_json(v.witness);
  if (v.counterexample) j["counterexample"] = to_json(*v.counterexample);
  j["audit"] = v.audit;
  return j;
}

Json summary_json(const ScanSummary& s) {
  Json counts = Json::object();
  for (const auto& [check, by_status] : s.counts) {
    Json c = Json::object();
    for (Status st : kStatuses) {
      if (const auto it = by_status.find(st); it != by_status.end()) c[to_string(st)] = it->second;
    }
    counts[to_string(check)] = c;
  }
  Json body{{"graphs", s.graphs}, {"records", s.records}, {"errors", s.errors}, {"counts", counts}};
  body["counterexamples"] = s.counterexamples.size();
  if (s.converse.with_ktree + s.converse.without_ktree + s.converse.undecided > 0) {
    body["win_violations"] = Json{{"with_ktree", s.converse.with_ktree},
                                  {"without_ktree", s.converse.without_ktree},
                                  {"undecided", s.converse.undecided}};
  }
  body["seed"] = s.seed ? Json(*s.seed) : Json();
  return Json{{"summary", body}};
}

std::string table_header() {
  return pad("index", 8) + pad("graph6", 22) + pad("check", 20) + pad("status", 22) + "detail";
}

std::string table_row(const ScanRecord& r) {
  std::string graph = r.graph.size() > 20 ? r.graph.substr(0, 17) + "..." : r.graph;
  std::string line = pad(std::to_string(r.index), 8) + pad(graph, 22) + pad(r.check ? to_string(*r.check) : "-", 20);
  if (r.error) return line + pad("error", 22) + *r.error;
  return line + pad(to_string(r.verdict->status), 22) + detail(*r.verdict);
}

std::string summary_table(const ScanSummary& s) {
  std::ostringstream os;
  os << "graphs " << s.graphs << ", records " << s.records << ", errors " << s.errors << ", counterexamples "
     << s.counterexamples.size() << '\n';
  for (const auto& [check, by_status] : s.counts) {
    for (Status st : kStatuses) {
      if (const auto it = by_status.find(st); it != by_status.end()) {
        os << "  " << pad(to_string(check), 20) << pad(to_string(st), 22) << it->second << '\n';
      }
    }
  }
  if (s.converse.with_ktree + s.converse.without_ktree + s.converse.undecided > 0) {
    os << "  win violations: " << s.converse.with_ktree << " with k-tree, " << s.converse.without_ktree
       << " without, " << s.converse.undecided << " undecided\n";
  }
  if (s.seed) os << "  seed " << *s.seed << '\n';
  return os.str();
}

}  // namespace toughtree::report
