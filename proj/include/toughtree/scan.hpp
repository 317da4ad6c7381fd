#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "toughtree/generate.hpp"
#include "toughtree/graph_io.hpp"
#include "toughtree/theorems.hpp"

namespace toughtree {

struct ScanOptions {
  TheoremParams params;
  /// Graph checks to run on every graph, in this order. The partition lemmas
  /// are not graph checks and are rejected.
  std::vector<CheckId> checks;
  CheckOptions check;
  /// 1 runs everything on the calling thread.
  std::size_t workers = 1;
  std::size_t batch_size = 1024;
  /// Echoed in the summary when the graphs came from a seeded generator.
  std::optional<std::uint64_t> seed;
};

/// One (graph, check) outcome, or a stream/evaluation error for the graph.
struct ScanRecord {
  std::size_t index = 0;
  /// graph6, or the edge list for orders above 62; empty for unparsable records.
  std::string graph;
  std::optional<CheckId> check;
  std::optional<Verdict> verdict;
  std::optional<std::string> error;
};

/// What happens to graphs that violate Win's condition. Never asserted.
struct ConverseStats {
  std::size_t with_ktree = 0;
  std::size_t without_ktree = 0;
  std::size_t undecided = 0;
};

struct ScanSummary {
  std::size_t graphs = 0;
  std::size_t records = 0;
  std::size_t errors = 0;
  std::map<CheckId, std::map<Status, std::size_t>> counts;
  ConverseStats converse;
  std::vector<ScanRecord> counterexamples;
  std::optional<std::uint64_t> seed;

  std::size_t count(CheckId check, Status status) const;
  bool has_counterexample() const { return !counterexamples.empty(); }
  /// Any unknown_timeout or indistinguishable outcome.
  bool has_unknown() const;
};

using GraphSource = std::function<std::optional<StreamItem>()>;
using RecordSink = std::function<void(const ScanRecord&)>;

GraphSource source_from_reader(GraphStreamReader& reader);
GraphSource source_from_enumerator(LabeledGraphEnumerator& enumerator);
GraphSource source_from_graphs(std::vector<Graph> graphs);

/// Runs the selected checks on every graph of the source. Records reach the
/// sink in input order (by index, then check order) whatever the worker
/// count. Exceptions raised while evaluating a graph become error records.
ScanSummary scan_stream(const GraphSource& source, const ScanOptions& options, const RecordSink& sink = {});

}  // namespace toughtree
