#include <sstream>

#include "doctest.h"
#include "toughtree/generate.hpp"
#include "toughtree/report.hpp"
#include "toughtree/scan.hpp"

using namespace toughtree;

namespace {

std::string run_scan(const std::vector<Graph>& graphs, ScanOptions options) {
  std::ostringstream out;
  const ScanSummary s = scan_stream(source_from_graphs(graphs), options,
                                    [&](const ScanRecord& r) { out << report::record_json(r).dump() << '\n'; });
  out << report::summary_json(s).dump() << '\n';
  return out.str();
}

}  // namespace

TEST_CASE("labeled enumeration counts") {
  // Connected labeled graphs on n vertices: 1, 1, 4, 38, 728, 26704.
  const std::size_t expected[] = {1, 1, 4, 38, 728, 26704};
  for (std::size_t n = 1; n <= 6; ++n) {
    LabeledGraphEnumerator e(n);
    std::size_t count = 0;
    while (e.next()) ++count;
    CHECK(count == expected[n - 1]);
  }
  LabeledGraphEnumerator all(4, false);
  std::size_t count = 0;
  while (all.next()) ++count;
  CHECK(count == 64);
  CHECK_THROWS(LabeledGraphEnumerator(8));
}

TEST_CASE("partitions") {
  std::vector<std::vector<std::size_t>> seen;
  for_each_partition(7, 3, 1, [&](const auto& p) { seen.push_back(p); });
  CHECK(seen == std::vector<std::vector<std::size_t>>{{5, 1, 1}, {4, 2, 1}, {3, 3, 1}, {3, 2, 2}});
  std::size_t count = 0;
  for_each_partition(8, 3, 2, [&](const auto&) { ++count; });
  CHECK(count == 2);  // (4,2,2), (3,3,2)
}

TEST_CASE("generators") {
  Rng rng(51);
  for (int i = 0; i < 20; ++i) {
    const Graph g = complete_minus_edges(10, 8, rng);
    CHECK(is_connected(g));
    CHECK(g.edge_count() >= 45 - 8);
    CHECK(is_connected(random_connected_graph(9, 0.2, rng)));
  }
  Rng a(5), b(5);
  CHECK(complete_minus_edges(12, 10, a) == complete_minus_edges(12, 10, b));
}

TEST_CASE("scan of an empty stream") {
  ScanOptions o;
  o.checks = {CheckId::theorem_1};
  const ScanSummary s = scan_stream(source_from_graphs({}), o);
  CHECK(s.graphs == 0);
  CHECK(s.records == 0);
  CHECK(s.counts.empty());
}

TEST_CASE("scan of three complete graphs under Theorem 1.1") {
  ScanOptions o;
  o.checks = {CheckId::theorem_1};
  std::vector<ScanRecord> records;
  const ScanSummary s = scan_stream(source_from_graphs({complete(5), complete(27), complete(30)}), o,
                                    [&](const ScanRecord& r) { records.push_back(r); });
  REQUIRE(records.size() == 3);
  CHECK(records[0].verdict->status == Status::hypothesis_failed);
  CHECK(records[1].verdict->status == Status::holds_with_ktree);
  CHECK(records[2].verdict->status == Status::holds_with_ktree);
  CHECK(s.count(CheckId::theorem_1, Status::holds_with_ktree) == 2);
}

TEST_CASE("per-graph errors are isolated") {
  ScanOptions o;
  o.checks = {CheckId::lemma_win};
  // The Win check rejects disconnected graphs; the scan records the error and continues.
  const ScanSummary s = scan_stream(source_from_graphs({empty_graph(3), complete(4)}), o);
  CHECK(s.errors == 1);
  CHECK(s.count(CheckId::lemma_win, Status::holds_with_ktree) == 1);
  o.checks = {CheckId::lemma_edge_max};
  CHECK_THROWS(scan_stream(source_from_graphs({complete(4)}), o));
}

TEST_CASE("output is identical for any worker count") {
  std::vector<Graph> graphs;
  Rng rng(52);
  for (int i = 0; i < 200; ++i) graphs.push_back(random_connected_graph(4 + rng() % 4, 0.4, rng));
  ScanOptions o;
  o.checks = {CheckId::lemma_win, CheckId::bound_hong, CheckId::bound_das};
  o.batch_size = 37;
  o.workers = 1;
  const std::string one = run_scan(graphs, o);
  o.workers = 4;
  CHECK(run_scan(graphs, o) == one);
  CHECK(run_scan(graphs, o) == one);
}

TEST_CASE("Win converse statistics") {
  ScanOptions o;
  o.checks = {CheckId::lemma_win};
  const ScanSummary s = scan_stream(source_from_graphs({star(5), build_split_family({3, 4, 5})}), o);
  CHECK(s.converse.without_ktree == 1);
  CHECK(s.converse.with_ktree == 1);
}
