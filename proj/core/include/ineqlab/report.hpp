#pragma once

#include <json.hpp>

#include <ostream>
#include <string>
#include <vector>

#include "ineqlab/checks.hpp"
#include "ineqlab/search.hpp"

namespace ineqlab {

/// One structured document per run, schema-versioned. Everything except
/// wall_time_s is deterministic for a given command and seed.
struct RunReport {
  int schema = 1;
  std::string command;
  nlohmann::json config = nlohmann::json::object();
  std::uint64_t seed = 0;
  Precision precision = Precision::Fast;
  nlohmann::json results = nlohmann::json::array();
  double wall_time_s = 0.0;
};

nlohmann::json to_json(const RunReport& r);
RunReport report_from_json(const nlohmann::json& j);

/// Deterministic payload comparison: everything but wall_time_s.
bool payload_equal(const RunReport& a, const RunReport& b);

/// Decimal string with 21 significant digits; parses back to the identical
/// double. Witness coordinates are always serialized this way.
std::string decimal_string(double v);
std::vector<std::string> witness_strings(const EvalPoint& p);

nlohmann::json margin_json(const Margin& m);
nlohmann::json check_report_json(const CheckReport& r);
nlohmann::json outcome_json(const SearchOutcome& o);
nlohmann::json threshold_json(const ThresholdEstimate& t);

/// One sweep cell. The CSV header is stable:
/// n,alpha,predicate,min_margin,violations,evaluations
struct SweepRow {
  int n;
  double alpha;
  PredicateId predicate;
  double min_margin;
  long violations;
  long evaluations;
};

extern const char* const kSweepCsvHeader;
void write_sweep_csv(std::ostream& os, const std::vector<SweepRow>& rows);

}  // namespace ineqlab
