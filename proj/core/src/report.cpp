#include "ineqlab/report.hpp"

#include <cstdio>

namespace ineqlab {

using nlohmann::json;

std::string decimal_string(double v) {
  char buf[48];
  std::snprintf(buf, sizeof buf, "%.20e", v);
  return buf;
}

std::vector<std::string> witness_strings(const EvalPoint& p) {
  std::vector<std::string> out;
  out.reserve(static_cast<size_t>(p.n()));
  for (double l : p.logs()) out.push_back(decimal_string(l));
  return out;
}

json margin_json(const Margin& m) {
  return json{{"value", m.value},
              {"verdict", to_string(m.verdict)},
              {"tolerance", m.tolerance},
              {"precision", to_string(m.precision)}};
}

json check_report_json(const CheckReport& r) {
  json j{{"predicate", to_string(r.id)},
         {"exponent", r.exponent},
         {"margin", margin_json(r.margin)}};
  if (r.index >= 0) j["index"] = r.index;
  return j;
}

json outcome_json(const SearchOutcome& o) {
  json j{{"margin", margin_json(o.best_margin)},
         {"restarts", o.restarts_used},
         {"evaluations", o.evaluations},
         {"status", o.status == SearchStatus::Converged ? "converged" : "budget-exhausted"}};
  if (o.best_margin.verdict == Verdict::Violated)
    j["witness_logx"] = witness_strings(o.best_point);
  if (o.best_boundary) j["best_boundary"] = *o.best_boundary;
  if (o.best_interior) j["best_interior"] = *o.best_interior;
  return j;
}

json threshold_json(const ThresholdEstimate& t) {
  json j{{"n", t.n},
         {"predicate", to_string(t.predicate)},
         {"bracket", {decimal_string(t.alpha_lo), decimal_string(t.alpha_hi)}},
         {"tolerance", t.tolerance},
         {"probes", t.probes},
         {"evaluations", t.evaluations},
         {"status", t.status == BracketStatus::Valid ? "valid" : "invalid"},
         {"note", t.note}};
  if (t.status == BracketStatus::Valid) {
    j["witness_lo"] = outcome_json(t.witness_lo);
    j["clearance_hi"] = outcome_json(t.clearance_hi);
  }
  return j;
}

json to_json(const RunReport& r) {
  return json{{"schema", r.schema},       {"command", r.command},
              {"config", r.config},       {"seed", r.seed},
              {"precision", to_string(r.precision)}, {"results", r.results},
              {"wall_time_s", r.wall_time_s}};
}

RunReport report_from_json(const json& j) {
  RunReport r;
  r.schema = j.at("schema").get<int>();
  r.command = j.at("command").get<std::string>();
  r.config = j.at("config");
  r.seed = j.at("seed").get<std::uint64_t>();
  r.precision =
      j.at("precision").get<std::string>() == "extended" ? Precision::Extended : Precision::Fast;
  r.results = j.at("results");
  r.wall_time_s = j.at("wall_time_s").get<double>();
  return r;
}

bool payload_equal(const RunReport& a, const RunReport& b) {
  json ja = to_json(a);
  json jb = to_json(b);
  ja.erase("wall_time_s");
  jb.erase("wall_time_s");
  return ja == jb;
}

const char* const kSweepCsvHeader = "n,alpha,predicate,min_margin,violations,evaluations";

void write_sweep_csv(std::ostream& os, const std::vector<SweepRow>& rows) {
  os << kSweepCsvHeader << "\n";
  char num[40];
  for (const SweepRow& r : rows) {
    std::snprintf(num, sizeof num, "%.17g", r.alpha);
    os << r.n << "," << num << "," << to_string(r.predicate) << ",";
    std::snprintf(num, sizeof num, "%.17g", r.min_margin);
    os << num << "," << r.violations << "," << r.evaluations << "\n";
  }
}

}  // namespace ineqlab
