#include "toughtree/scan.hpp"

#include <algorithm>
#include <atomic>
#include <memory>
#include <stdexcept>
#include <thread>

namespace toughtree {

namespace {

std::string encode(const Graph& g) {
  return g.order() <= kGraph6MaxOrder ? write_graph6(g) : write_edgelist(g);
}

Verdict run_check(CheckId check, const Graph& g, const ScanOptions& options, ExtremalCache& cache) {
  switch (check) {
    case CheckId::theorem_1: return check_theorem_1(g, options.params, options.check);
    case CheckId::theorem_2: return check_theorem_2(g, options.params, options.check, &cache);
    case CheckId::theorem_3: return check_theorem_3(g, options.params, options.check, &cache);
    case CheckId::lemma_win: return check_lemma_win(g, options.params.k, options.check);
    case CheckId::bound_hong: return check_bound_hong(g, options.check);
    case CheckId::bound_das: return check_bound_das(g, options.check);
    case CheckId::lemma_edge_max:
    case CheckId::lemma_spectral_max: break;
  }
  throw std::invalid_argument(to_string(check) + " is not a graph check");
}

std::vector<ScanRecord> process(const StreamItem& item, const ScanOptions& options, ExtremalCache& cache) {
  std::vector<ScanRecord> out;
  if (!item.ok()) {
    ScanRecord r;
    r.index = item.index;
    r.error = "line " + std::to_string(item.error().line) + ": " + item.error().message;
    out.push_back(std::move(r));
    return out;
  }
  const Graph& g = item.graph();
  const std::string text = encode(g);
  for (CheckId check : options.checks) {
    ScanRecord r;
    r.index = item.index;
    r.graph = text;
    r.check = check;
    try {
      r.verdict = run_check(check, g, options, cache);
      r.verdict->index = item.index;
    } catch (const std::exception& e) {
      r.error = e.what();
    }
    out.push_back(std::move(r));
  }
  return out;
}

template <typename Fn>
void run_parallel(std::size_t count, std::size_t workers, Fn&& fn) {
  workers = std::max<std::size_t>(1, std::min(workers, count));
  if (workers == 1) {
    for (std::size_t i = 0; i < count; ++i) fn(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  auto loop = [&] {
    for (std::size_t i = next++; i < count; i = next++) fn(i);
  };
  std::vector<std::thread> pool;
  pool.reserve(workers - 1);
  for (std::size_t w = 1; w < workers; ++w) pool.emplace_back(loop);
  loop();
  for (auto& t : pool) t.join();
}

void tally(ScanSummary& summary, const ScanRecord& r) {
  ++summary.records;
  if (r.error) {
    ++summary.errors;
    return;
  }
  const Verdict& v = *r.verdict;
  ++summary.counts[v.check][v.status];
  if (v.status == Status::counterexample) summary.counterexamples.push_back(r);
  if (v.check == CheckId::lemma_win && v.status == Status::hypothesis_failed) {
    if (!v.witness.ktree_exists) {
      ++summary.converse.undecided;
    } else if (*v.witness.ktree_exists) {
      ++summary.converse.with_ktree;
    } else {
      ++summary.converse.without_ktree;
    }
  }
}

}  // namespace

std::size_t ScanSummary::count(CheckId check, Status status) const {
  const auto it = counts.find(check);
  if (it == counts.end()) return 0;
  const auto jt = it->second.find(status);
  return jt == it->second.end() ? 0 : jt->second;
}

bool ScanSummary::has_unknown() const {
  for (const auto& [check, by_status] : counts) {
    for (const auto& [status, n] : by_status) {
      if (n > 0 && (status == Status::unknown_timeout || status == Status::indistinguishable)) return true;
    }
  }
  return false;
}

GraphSource source_from_reader(GraphStreamReader& reader) {
  return [&reader] { return reader.next(); };
}

GraphSource source_from_enumerator(LabeledGraphEnumerator& enumerator) {
  auto index = std::make_shared<std::size_t>(0);
  return [&enumerator, index]() -> std::optional<StreamItem> {
    auto g = enumerator.next();
    if (!g) return std::nullopt;
    StreamItem item{*index, 0, std::move(*g)};
    ++*index;
    return item;
  };
}

GraphSource source_from_graphs(std::vector<Graph> graphs) {
  auto data = std::make_shared<std::vector<Graph>>(std::move(graphs));
  auto index = std::make_shared<std::size_t>(0);
  return [data, index]() -> std::optional<StreamItem> {
    if (*index >= data->size()) return std::nullopt;
    StreamItem item{*index, *index + 1, (*data)[*index]};
    ++*index;
    return item;
  };
}

ScanSummary scan_stream(const GraphSource& source, const ScanOptions& options, const RecordSink& sink) {
  for (CheckId c : options.checks) {
    if (c == CheckId::lemma_edge_max || c == CheckId::lemma_spectral_max) {
      throw std::invalid_argument(to_string(c) + " is not a graph check");
    }
  }
  ScanSummary summary;
  summary.seed = options.seed;
  ExtremalCache cache;
  const std::size_t batch_size = std::max<std::size_t>(1, options.batch_size);

  std::vector<StreamItem> batch;
  std::vector<std::vector<ScanRecord>> results;
  for (;;) {
    batch.clear();
    while (batch.size() < batch_size) {
      auto item = source();
      if (!item) break;
      batch.push_back(std::move(*item));
    }
    if (batch.empty()) break;
    results.assign(batch.size(), {});
    run_parallel(batch.size(), options.workers,
                 [&](std::size_t i) { results[i] = process(batch[i], options, cache); });
    for (const auto& per_graph : results) {
      ++summary.graphs;
      for (const ScanRecord& r : per_graph) {
        tally(summary, r);
        if (sink) sink(r);
      }
    }
  }
  return summary;
}

}  // namespace toughtree
