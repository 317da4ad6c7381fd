#pragma once

#include <string>

#include "json.hpp"
#include "toughtree/invariants.hpp"
#include "toughtree/scan.hpp"
#include "toughtree/spectral.hpp"
#include "toughtree/theorems.hpp"

namespace toughtree::report {

/// Insertion-ordered so that serialised output is byte-stable.
using Json = nlohmann::ordered_json;

Json to_json(const SpectralEnclosure& e);
Json to_json(const KTreeCertificate& cert);
Json to_json(const Witness& w);
Json to_json(const CounterexampleBundle& b);
Json to_json(const Verdict& v);
Json to_json(const ToughnessResult& r);
Json to_json(const ThresholdSet& th, const TheoremParams& params, std::size_t n);
Json to_json(const AuditReport& report);

/// {"index", "graph6", "check", "status", "witness", ...}, or an error record.
Json record_json(const ScanRecord& r);
/// {"summary": {...}} with per-check status counts in enum order.
Json summary_json(const ScanSummary& s);

/// Fixed-width table line for one record, and the header that goes with it.
std::string table_header();
std::string table_row(const ScanRecord& r);
std::string summary_table(const ScanSummary& s);

}  // namespace toughtree::report
