#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cartier/engine.hpp"

namespace cartier {

/// Machine-readable single-curve record. Field order is the schema;
/// JSON emission follows it exactly so emitted documents round-trip
/// byte for byte. Missing quantities are explicit nulls, never omitted.
struct ReportDocument {
  int schema_version = 1;
  std::string family;
  std::uint64_t p = 0;
  std::optional<std::int64_t> n;
  std::int64_t degree = 0;
  std::int64_t genus = 0;
  std::int64_t cartier_rank = 0;
  std::int64_t a_number = 0;
  std::int64_t p_rank = 0;
  std::int64_t nilpotency_index = 0;
  bool superspecial = false;
  bool ordinary = false;
  std::vector<std::pair<std::string, std::string>> methods;
  std::vector<std::pair<std::string, std::int64_t>> timings;  // microseconds per phase
};

ReportDocument make_report(const InvariantReport& inv, const PhaseTimings& timings);

std::string report_to_json(const ReportDocument& doc);
ReportDocument report_from_json(const std::string& text);  // throws std::runtime_error
std::string report_to_table(const ReportDocument& doc);

/// One verification/sweep cell. agree is true iff all rank columns
/// that are present coincide.
struct SweepRow {
  std::string family;
  std::uint64_t p = 0;
  std::optional<std::int64_t> s;
  std::int64_t n = 0;
  std::int64_t degree = 0;
  std::int64_t genus = 0;
  std::optional<std::int64_t> rank_matrix;
  std::optional<std::int64_t> rank_counting;
  std::optional<std::int64_t> rank_closed;
  std::int64_t a_number = 0;
  std::optional<std::int64_t> p_rank;
  bool agree = true;

  void judge_agreement();  // recompute agree from the rank columns
};

std::string csv_header();
std::string to_csv(const SweepRow& row);
SweepRow report_to_sweep_row(const ReportDocument& doc);  // for invariants --format csv
std::string sweep_row_to_json(const SweepRow& row);       // one compact object, one line

std::string sweep_table_header();
std::string to_table_row(const SweepRow& row);

}  // namespace cartier
