#include "commands.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

#include "ineqlab/exponents.hpp"
#include "ineqlab/families.hpp"
#include "ineqlab/fuzz.hpp"
#include "ineqlab/kernels.hpp"
#include "ineqlab/numerics.hpp"
#include "ineqlab/report.hpp"
#include "ineqlab/search.hpp"

namespace ineqlab::cli {

using nlohmann::json;

namespace {

class Stopwatch {
 public:
  double seconds() const {
    return std::chrono::duration<double>(clock::now() - start_).count();
  }

 private:
  using clock = std::chrono::steady_clock;
  clock::time_point start_ = clock::now();
};

void emit(const GlobalOptions& g, RunReport& report, const Stopwatch& sw) {
  report.wall_time_s = sw.seconds();
  if (!g.json_path.empty()) {
    std::ofstream os(g.json_path);
    if (!os) throw std::invalid_argument("cannot write JSON report to " + g.json_path);
    os << to_json(report).dump(2) << "\n";
  }
}

CheckOptions check_options(const GlobalOptions& g) {
  CheckOptions o;
  o.precision = g.precision;
  o.force = g.force;
  return o;
}

json fuzz_json(int n, double exponent, PredicateId pred, const FuzzResult& r) {
  json j{{"n", n},
         {"predicate", to_string(pred)},
         {"exponent", exponent},
         {"points", r.points},
         {"checks", r.checks},
         {"violations", r.violations},
         {"min_margin", r.min_margin}};
  if (r.worst_point) {
    j["worst"] = {{"margin", margin_json(r.worst_margin)},
                  {"witness_logx", witness_strings(*r.worst_point)}};
  }
  return j;
}

bool beta_predicate(PredicateId id) {
  switch (id) {
    case PredicateId::Ineq3:
    case PredicateId::Ineq4:
    case PredicateId::Ineq5:
    case PredicateId::Ineq6:
    case PredicateId::Ineq7: return true;
    default: return false;
  }
}

}  // namespace

double parse_real(const std::string& s) {
  const auto slash = s.find('/');
  size_t used = 0;
  if (slash == std::string::npos) {
    const double v = std::stod(s, &used);
    if (used != s.size()) throw std::invalid_argument("malformed number: " + s);
    return v;
  }
  const std::string num = s.substr(0, slash), den = s.substr(slash + 1);
  const double p = std::stod(num, &used);
  if (used != num.size()) throw std::invalid_argument("malformed rational: " + s);
  const double q = std::stod(den, &used);
  if (used != den.size() || q == 0.0) throw std::invalid_argument("malformed rational: " + s);
  return p / q;
}

std::vector<double> parse_real_list(const std::string& s) {
  std::vector<double> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (!item.empty()) out.push_back(parse_real(item));
  }
  return out;
}

std::vector<int> parse_int_list(const std::string& s) {
  std::vector<int> out;
  for (double v : parse_real_list(s)) {
    const int k = static_cast<int>(v);
    if (k != v) throw std::invalid_argument("expected integer list: " + s);
    out.push_back(k);
  }
  return out;
}

std::vector<double> parse_grid(const std::string& s) {
  std::stringstream ss(s);
  std::string lo_s, hi_s, step_s;
  if (!std::getline(ss, lo_s, ':') || !std::getline(ss, hi_s, ':') ||
      !std::getline(ss, step_s, ':'))
    throw std::invalid_argument("grid must be lo:hi:step, got: " + s);
  const double lo = parse_real(lo_s), hi = parse_real(hi_s), step = parse_real(step_s);
  if (!(step > 0.0)) throw std::invalid_argument("grid step must be positive");
  std::vector<double> out;
  for (double a = lo; a <= hi + 1e-12; a += step) out.push_back(a);
  if (out.empty()) throw std::invalid_argument("empty grid: " + s);
  return out;
}

int cmd_eval(const GlobalOptions& g, const EvalArgs& a) {
  Stopwatch sw;
  const std::vector<double> xs = parse_real_list(a.xs);
  const double alpha = parse_real(a.alpha);
  const EvalPoint p = make_point(xs);

  RunReport report;
  report.command = "eval";
  report.seed = g.seed;
  report.precision = g.precision;
  report.config = {{"x", a.xs}, {"alpha", alpha}, {"force", g.force}};

  const bool feasible = is_feasible(p);
  std::printf("n = %d, log-product = %.6g, feasible: %s\n", p.n(), log_product(p),
              feasible ? "yes" : "no");
  json terms = json::array();
  for (int i = 0; i < p.n(); ++i) {
    const double t = eval_term(p, i, alpha);
    std::printf("term[%d] = %.17g\n", i, t);
    terms.push_back(t);
  }
  const double sum = eval_sum(p, alpha);
  std::printf("sum = %.17g\n", sum);

  json result{{"terms", terms}, {"sum", sum}, {"feasible", feasible}};
  int exit_code = kExitOk;
  if ((alpha >= 1.0 && feasible) || g.force) {
    const Margin m = check_prop1(p, alpha, check_options(g));
    std::printf("main inequality: %s (margin %.17g, tolerance %.3g, %s)\n",
                to_string(m.verdict), m.value, m.tolerance, to_string(m.precision));
    result["margin"] = margin_json(m);
    if (m.verdict == Verdict::Violated) {
      result["witness_logx"] = witness_strings(p);
      exit_code = kExitViolation;
    }
  } else {
    std::printf("main inequality: skipped (alpha < 1 or infeasible point; use --force)\n");
    result["margin"] = nullptr;
  }
  report.results.push_back(result);
  emit(g, report, sw);
  return exit_code;
}

int cmd_verify(const GlobalOptions& g, const VerifyArgs& a) {
  Stopwatch sw;
  if (a.n < 1) throw std::invalid_argument("verify needs n >= 1");

  PredicateId pred = a.prop == 2 ? PredicateId::Prop2 : PredicateId::Prop1;
  if (!a.pred.empty()) pred = predicate_from_string(a.pred);

  std::vector<double> exponents;
  if (beta_predicate(pred)) {
    if (a.betas.empty()) throw std::invalid_argument("this predicate needs --beta");
    exponents = parse_real_list(a.betas);
  } else if (!a.alpha_grid.empty()) {
    exponents = parse_grid(a.alpha_grid);
  } else if (!a.alphas.empty()) {
    exponents = parse_real_list(a.alphas);
  } else {
    throw std::invalid_argument("verify needs --alpha, --alpha-grid or --beta");
  }

  RunReport report;
  report.command = "verify";
  report.seed = g.seed;
  report.precision = g.precision;
  report.config = {{"n", a.n},     {"predicate", to_string(pred)}, {"count", a.count},
                   {"L", a.log_range}, {"chain", a.chain},         {"force", g.force}};

  long total_violations = 0;
  for (double e : exponents) {
    FuzzResult r;
    if (a.chain) {
      r = fuzz_chain(a.n, e, a.count, g.seed, a.log_range);
    } else {
      FuzzConfig fc;
      fc.predicate = pred;
      fc.n = a.n;
      fc.exponent = e;
      fc.count = a.count;
      fc.seed = g.seed;
      fc.log_range = a.log_range;
      fc.force = g.force;
      r = fuzz_predicate(fc);
    }
    total_violations += r.violations;
    std::printf("%s n=%d exponent=%.6g: %ld points, %ld checks, %ld violations, min margin %.6g\n",
                a.chain ? "chain" : to_string(pred), a.n, e, r.points, r.checks, r.violations,
                r.min_margin);
    report.results.push_back(fuzz_json(a.n, e, pred, r));
  }
  emit(g, report, sw);
  return total_violations > 0 ? kExitViolation : kExitOk;
}

int cmd_family(const GlobalOptions& g, const FamilyArgs& a) {
  Stopwatch sw;
  RunReport report;
  report.command = "family";
  report.seed = g.seed;
  report.precision = g.precision;
  report.config = {{"remark", a.remark}, {"n", a.n}};
  int exit_code = kExitOk;

  if (a.remark == "a") {
    report.config["x"] = a.x;
    report.config["beta"] = a.beta;
    const RemarkAFamily f{a.n, a.x, a.beta};
    const EvalPoint p = remark_a_point(f);
    const double d = remark_a_difference(f);
    CheckOptions forced = check_options(g);
    forced.force = true;
    const Margin m = check_ineq3(p, a.beta, forced);
    const LimitDirection up = remark_a_limit_direction(a.n, a.beta, ProbeDirection::TowardInfinity);
    const LimitDirection down = remark_a_limit_direction(a.n, a.beta, ProbeDirection::TowardZero);
    std::printf("family point: (x^(n-1), 1/x, ...) with n=%d x=%.17g\n", a.n, a.x);
    std::printf("power-sum gap D = %.17g (closed form), margin %.17g (%s)\n", d, m.value,
                to_string(m.verdict));
    std::printf("x -> infinity: %s; x -> 0: %s\n",
                up == LimitDirection::PlusInfinityAtLargeX ? "gap -> +infinity" : "not applicable",
                down == LimitDirection::MinusInfinityAtSmallX ? "gap -> -infinity"
                                                              : "not applicable");
    json res{{"difference", d},
             {"margin", margin_json(m)},
             {"large_x_divergence", up == LimitDirection::PlusInfinityAtLargeX},
             {"small_x_divergence", down == LimitDirection::MinusInfinityAtSmallX}};
    if (m.verdict == Verdict::Violated) {
      res["witness_logx"] = witness_strings(p);
      exit_code = kExitViolation;
    }
    report.results.push_back(res);
  } else if (a.remark == "b") {
    report.config["alpha"] = a.alpha;
    const EvalPoint rest = remark_b_point({a.n, a.alpha});
    const auto pm = kernels::detail::power_means<double>(rest.logs(), a.alpha);
    const double A = std::exp(pm.ln_a), G = std::exp(pm.ln_g);
    const Margin m = remark_b_violation(a.n, a.alpha, check_options(g));
    std::printf("trailing coordinates: ln x2 = %.17g, ln xj = %.17g\n", rest.log_at(0),
                a.n >= 3 ? rest.log_at(1) : 0.0);
    std::printf("A = %.17g, G = %.17g (alpha-independent)\n", A, G);
    std::printf("normalized inequality margin = %.17g (%s)\n", m.value, to_string(m.verdict));
    json res{{"A", A}, {"G", G}, {"margin", margin_json(m)}};
    if (m.verdict == Verdict::Violated) {
      res["witness_logx"] = witness_strings(rest);
      exit_code = kExitViolation;
    }
    report.results.push_back(res);
  } else if (a.remark == "c") {
    const double alpha = case_boundary(a.n);
    const double gamma = gamma_of(a.n, alpha);
    report.config["count"] = a.count;
    const FuzzResult r = fuzz_chain(a.n, alpha, a.count, g.seed);
    std::printf("alpha = 2 + 1/(n-1) = %.17g, gamma = %.17g\n", alpha, gamma);
    std::printf("both chains over %ld points: %ld checks, %ld violations, min margin %.6g\n",
                r.points, r.checks, r.violations, r.min_margin);
    report.results.push_back(json{{"alpha", alpha},
                                  {"gamma", gamma},
                                  {"fuzz", fuzz_json(a.n, alpha, PredicateId::Prop1, r)}});
    if (r.violations > 0) exit_code = kExitViolation;
  } else if (a.remark == "d") {
    report.config["x"] = a.x;
    const std::vector<double> alphas = parse_real_list(a.alphas);
    const auto table = remark_d_convergence(a.n, a.x, alphas);
    const double limit = remark_d_limit(a.n, a.x);
    std::printf("limit as alpha -> -infinity: %.17g (positive iff x^n < (n-1)^2)\n", limit);
    json rows = json::array();
    CheckOptions forced = check_options(g);
    forced.force = true;
    const EvalPoint p = remark_d_point({a.n, a.x});
    for (const auto& [al, sum] : table) {
      std::printf("alpha = %10.4g   sum = %.17g   |sum - limit| = %.6g\n", al, sum,
                  std::abs(sum - limit));
      rows.push_back(json{{"alpha", al}, {"sum", sum}, {"gap", std::abs(sum - limit)}});
      if (sum > 0.0) {
        const Margin m = classify_predicate(PredicateId::Prop2, p, al, false, forced);
        if (m.verdict == Verdict::Violated) exit_code = kExitViolation;
      }
    }
    report.results.push_back(json{{"limit", limit}, {"table", rows}});
  } else {
    throw std::invalid_argument("remark must be one of a, b, c, d");
  }
  emit(g, report, sw);
  return exit_code;
}

int cmd_bisect(const GlobalOptions& g, const BisectArgs& a) {
  Stopwatch sw;
  RunReport report;
  report.command = "bisect";
  report.seed = g.seed;
  report.precision = g.precision;
  report.config = {{"n", a.n}, {"case", a.which}, {"tolerance", a.tolerance}, {"budget", a.budget}};

  ThresholdEstimate est;
  if (a.which == "2") {
    est = bisect_alpha_n_case2(a.n, a.tolerance, a.budget, g.seed);
  } else if (a.which == "reverse") {
    est = bisect_alpha_n_reverse(a.n, a.tolerance, a.budget, g.seed);
  } else {
    throw std::invalid_argument("case must be 2 or reverse");
  }
  std::printf("bracket: [%.17g, %.17g]  (width %.6g, %d probes, %ld evaluations)\n", est.alpha_lo,
              est.alpha_hi, est.alpha_hi - est.alpha_lo, est.probes, est.evaluations);
  std::printf("status: %s\n", est.status == BracketStatus::Valid ? "valid" : "invalid");
  std::printf("note: %s\n", est.note.c_str());
  report.results.push_back(threshold_json(est));
  emit(g, report, sw);
  return est.status == BracketStatus::Valid ? kExitOk : kExitViolation;
}

int cmd_sweep(const GlobalOptions& g, const SweepArgs& a) {
  Stopwatch sw;
  if (a.out.empty()) throw std::invalid_argument("sweep needs --out <csv path>");
  const std::vector<int> ns = parse_int_list(a.n_list);
  if (ns.empty()) throw std::invalid_argument("sweep needs a nonempty --n-list");
  const std::vector<double> grid = parse_grid(a.alpha_grid);

  PredicateId pred = a.prop == 2 ? PredicateId::Prop2 : PredicateId::Prop1;
  if (!a.pred.empty()) pred = predicate_from_string(a.pred);

  RunReport report;
  report.command = "sweep";
  report.seed = g.seed;
  report.precision = g.precision;
  report.config = {{"n_list", a.n_list},
                   {"alpha_grid", a.alpha_grid},
                   {"predicate", to_string(pred)},
                   {"count", a.count},
                   {"force", g.force}};

  std::vector<SweepRow> rows;
  long total_violations = 0;
  for (int n : ns) {
    for (double alpha : grid) {
      FuzzConfig fc;
      fc.predicate = pred;
      fc.n = n;
      fc.exponent = alpha;
      fc.count = a.count;
      fc.seed = derive_stream_seed(g.seed, static_cast<std::uint64_t>(rows.size()));
      fc.log_range = a.log_range;
      fc.force = g.force;
      const FuzzResult r = fuzz_predicate(fc);
      rows.push_back({n, alpha, pred, r.min_margin, r.violations, r.checks});
      total_violations += r.violations;
      report.results.push_back(fuzz_json(n, alpha, pred, r));
    }
  }

  std::ofstream os(a.out);
  if (!os) throw std::invalid_argument("cannot write CSV to " + a.out);
  write_sweep_csv(os, rows);
  std::printf("wrote %zu rows to %s (%ld confirmed violations)\n", rows.size(), a.out.c_str(),
              total_violations);
  emit(g, report, sw);
  return total_violations > 0 ? kExitViolation : kExitOk;
}

}  // namespace ineqlab::cli
