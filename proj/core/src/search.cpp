#include "ineqlab/search.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "ineqlab/compensated.hpp"
#include "ineqlab/errors.hpp"
#include "ineqlab/exponents.hpp"
#include "ineqlab/families.hpp"

namespace ineqlab {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

double neumaier_sum(std::span<const double> v) {
  CompensatedSum<double> s;
  for (double x : v) s.add(x);
  return s.value();
}

}  // namespace

PointSampler::PointSampler(const SampleConfig& cfg)
    : cfg_(cfg), rng_(derive_stream_seed(cfg.seed, 0x5a3f)) {
  if (cfg.n < 1 || !(cfg.log_range > 0.0))
    throw std::invalid_argument("sampler needs n >= 1 and log_range > 0");
}

EvalPoint PointSampler::next() {
  std::vector<double> logs(static_cast<size_t>(cfg_.n));
  for (double& l : logs) l = rng_.uniform(-cfg_.log_range, cfg_.log_range);
  if (cfg_.project) {
    return project_to_boundary(EvalPoint::from_logs(std::move(logs)));
  }
  const double s = neumaier_sum(logs);
  if (s < 0.0) {
    // Flip the sign of the log-product deficit onto one random coordinate;
    // the point lands strictly inside the feasible region.
    logs[static_cast<size_t>(rng_.below(cfg_.n))] -= 2.0 * s;
  }
  return EvalPoint::from_logs(std::move(logs));
}

std::vector<EvalPoint> family_starts(PredicateId id, int n, double exponent) {
  std::vector<EvalPoint> out;
  const auto add_b_family = [&](bool rest_only) {
    if (n < 3) return;
    try {
      if (rest_only)
        out.push_back(remark_b_point({n, exponent}));
      else
        out.push_back(remark_b_full_boundary({n, exponent}));
    } catch (const DegenerateGamma&) {
      // alpha too close to 1 for the family; random starts still apply.
    }
  };
  switch (id) {
    case PredicateId::Ineq8:
      add_b_family(false);
      break;
    case PredicateId::Ineq9:
    case PredicateId::AmgmAGeG:
      add_b_family(true);
      break;
    case PredicateId::Ineq3:
    case PredicateId::Ineq6:
    case PredicateId::Ineq7:
      if (n >= 3) {
        for (double x : {0.5, 2.0}) out.push_back(remark_a_point({n, x, exponent}));
      }
      break;
    case PredicateId::Prop1:
    case PredicateId::Prop2:
      if (exponent > 1.0) {
        add_b_family(false);
      } else if (n >= 2) {
        for (double x : {1.05, 1.1, 1.2, 1.3, 1.4, 1.5})
          out.push_back(remark_d_point({n, x}));
      }
      break;
    default:
      break;
  }
  return out;
}

namespace {

enum class Walk { Boundary, Interior, Free };

// Parameterizations of the three walk spaces. Boundary walks live in the
// zero-sum subspace via the basis e_k - e_n, so the product constraint is
// linear; interior walks are free but get projected back up onto the
// feasible set before evaluation; the normalized-form predicates walk the
// trailing coordinates unconstrained.
std::vector<double> logs_from_params(Walk w, std::span<const double> u) {
  if (w == Walk::Free) return {u.begin(), u.end()};
  if (w == Walk::Boundary) {
    std::vector<double> logs(u.begin(), u.end());
    logs.push_back(-neumaier_sum(u));
    return logs;
  }
  std::vector<double> logs(u.begin(), u.end());
  const double s = neumaier_sum(logs);
  if (s < 0.0) {
    const double shift = s / static_cast<double>(logs.size());
    for (double& l : logs) l -= shift;
  }
  return logs;
}

std::vector<double> params_from_logs(Walk w, std::span<const double> logs) {
  if (w == Walk::Interior || w == Walk::Free) return {logs.begin(), logs.end()};
  return {logs.begin(), logs.end() - 1};
}

struct Candidate {
  double value = kInf;
  std::vector<double> logs;
  Walk walk = Walk::Interior;
};

bool candidate_less(const Candidate& a, const Candidate& b) {
  if (a.value != b.value) return a.value < b.value;
  return a.logs < b.logs;  // total order for deterministic merges
}

// One simplex descent (reflect / expand / contract / shrink) within its own
// evaluation budget. Returns the best vertex seen.
Candidate simplex_descent(Walk walk, PredicateId pred, double exponent, double sign,
                          std::span<const double> start_logs, double step, long budget,
                          long& evals) {
  const int d = static_cast<int>(params_from_logs(walk, start_logs).size());
  const auto objective = [&](std::span<const double> u) {
    const std::vector<double> logs = logs_from_params(walk, u);
    ++evals;
    const double v = sign * raw_margin(pred, logs, exponent);
    return std::isnan(v) ? kInf : v;
  };

  std::vector<std::vector<double>> vx(static_cast<size_t>(d + 1));
  std::vector<double> fx(static_cast<size_t>(d + 1));
  vx[0] = params_from_logs(walk, start_logs);
  for (int k = 1; k <= d; ++k) {
    vx[static_cast<size_t>(k)] = vx[0];
    vx[static_cast<size_t>(k)][static_cast<size_t>(k - 1)] += step;
  }
  long used = 0;
  const auto eval_at = [&](const std::vector<double>& u) {
    ++used;
    return objective(u);
  };
  for (int k = 0; k <= d && used < budget; ++k) fx[static_cast<size_t>(k)] = eval_at(vx[static_cast<size_t>(k)]);

  Candidate best;
  const auto remember = [&](double f, const std::vector<double>& u) {
    if (f < best.value || best.logs.empty()) {
      Candidate c{f, logs_from_params(walk, u), walk};
      if (candidate_less(c, best) || best.logs.empty()) best = std::move(c);
    }
  };
  for (int k = 0; k <= d; ++k) remember(fx[static_cast<size_t>(k)], vx[static_cast<size_t>(k)]);

  std::vector<size_t> order(static_cast<size_t>(d + 1));
  while (used < budget) {
    for (size_t k = 0; k < order.size(); ++k) order[k] = k;
    std::sort(order.begin(), order.end(), [&](size_t a, size_t b) {
      if (fx[a] != fx[b]) return fx[a] < fx[b];
      return vx[a] < vx[b];
    });
    const size_t ibest = order.front(), iworst = order.back();
    const size_t isecond = order[order.size() - 2];

    const double spread = fx[iworst] - fx[ibest];
    if (!(spread > 1e-13 * (1.0 + std::abs(fx[ibest])))) break;

    std::vector<double> centroid(static_cast<size_t>(d), 0.0);
    for (size_t k = 0; k <= static_cast<size_t>(d); ++k) {
      if (k == iworst) continue;
      for (int j = 0; j < d; ++j) centroid[static_cast<size_t>(j)] += vx[k][static_cast<size_t>(j)];
    }
    for (double& c : centroid) c /= d;

    const auto blend = [&](double coef) {
      std::vector<double> u(static_cast<size_t>(d));
      for (int j = 0; j < d; ++j)
        u[static_cast<size_t>(j)] = centroid[static_cast<size_t>(j)] +
                                    coef * (centroid[static_cast<size_t>(j)] -
                                            vx[iworst][static_cast<size_t>(j)]);
      return u;
    };

    std::vector<double> xr = blend(1.0);
    const double fr = eval_at(xr);
    remember(fr, xr);
    if (fr < fx[ibest]) {
      std::vector<double> xe = blend(2.0);
      const double fe = eval_at(xe);
      remember(fe, xe);
      if (fe < fr) {
        vx[iworst] = std::move(xe);
        fx[iworst] = fe;
      } else {
        vx[iworst] = std::move(xr);
        fx[iworst] = fr;
      }
    } else if (fr < fx[isecond]) {
      vx[iworst] = std::move(xr);
      fx[iworst] = fr;
    } else {
      std::vector<double> xc = blend(-0.5);
      const double fc = eval_at(xc);
      remember(fc, xc);
      if (fc < fx[iworst]) {
        vx[iworst] = std::move(xc);
        fx[iworst] = fc;
      } else {
        for (size_t k = 0; k <= static_cast<size_t>(d); ++k) {
          if (k == ibest) continue;
          for (int j = 0; j < d; ++j)
            vx[k][static_cast<size_t>(j)] =
                vx[ibest][static_cast<size_t>(j)] +
                0.5 * (vx[k][static_cast<size_t>(j)] - vx[ibest][static_cast<size_t>(j)]);
          if (used >= budget) break;
          fx[k] = eval_at(vx[k]);
          remember(fx[k], vx[k]);
        }
      }
    }
  }
  return best;
}

}  // namespace

SearchOutcome minimize_margin(const SearchConfig& cfg) {
  if (cfg.n < 1 || cfg.budget < 1 || cfg.restarts < 1)
    throw std::invalid_argument("search needs n >= 1, budget >= 1, restarts >= 1");
  if (!cfg.force) {
    const Hypotheses h = hypotheses_for(cfg.predicate, cfg.n);
    if (!h.exponent_range.contains(cfg.exponent))
      throw HypothesisViolated("search exponent outside the predicate's range (use force)");
  }

  const bool on_rest = predicate_on_rest(cfg.predicate);
  const int point_dim = on_rest ? cfg.n - 1 : cfg.n;
  const double sign = cfg.flip_sign ? -1.0 : 1.0;

  std::vector<Walk> walks;
  if (on_rest) {
    walks.push_back(Walk::Free);
  } else if (cfg.domain == SearchDomain::Boundary) {
    walks.push_back(Walk::Boundary);
  } else if (cfg.domain == SearchDomain::Interior) {
    walks.push_back(Walk::Interior);
  } else {
    walks.push_back(Walk::Boundary);
    walks.push_back(Walk::Interior);
  }

  // Start set: remark-family seeds, caller extras, then random fill.
  std::vector<EvalPoint> starts = family_starts(cfg.predicate, cfg.n, cfg.exponent);
  for (const EvalPoint& p : cfg.extra_starts) starts.push_back(p);
  Rng rng(derive_stream_seed(cfg.seed, 0xb0a7));
  while (static_cast<int>(starts.size()) < cfg.restarts) {
    std::vector<double> logs(static_cast<size_t>(point_dim));
    for (double& l : logs) l = rng.uniform(-cfg.log_range, cfg.log_range);
    starts.push_back(EvalPoint::from_logs(std::move(logs)));
  }

  const long total_runs = static_cast<long>(starts.size()) * static_cast<long>(walks.size());
  const long share = std::max<long>(cfg.budget / std::max<long>(total_runs, 1), 2 * point_dim + 4);

  long evals = 0;
  std::vector<Candidate> results;
  double best_boundary = kInf, best_interior = kInf;
  for (size_t si = 0; si < starts.size(); ++si) {
    for (Walk w : walks) {
      if (evals >= cfg.budget) break;
      std::vector<double> logs(starts[si].logs().begin(), starts[si].logs().end());
      if (w == Walk::Boundary) {
        const EvalPoint proj = project_to_boundary(starts[si]);
        logs.assign(proj.logs().begin(), proj.logs().end());
      }
      const long run_budget = std::min(share, cfg.budget - evals);
      Candidate c = simplex_descent(w, cfg.predicate, cfg.exponent, sign, logs, 0.5,
                                    run_budget, evals);
      if (w == Walk::Boundary) best_boundary = std::min(best_boundary, c.value);
      if (w == Walk::Interior) best_interior = std::min(best_interior, c.value);
      results.push_back(std::move(c));
    }
  }

  std::sort(results.begin(), results.end(), candidate_less);

  // Confirmation pass: only extended-verified negatives may be reported as
  // violations. Walk the candidates from the most negative; fall back to the
  // overall best when nothing confirms.
  CheckOptions copts;
  copts.force = true;
  copts.policy = cfg.policy;
  SearchOutcome out;
  out.restarts_used = static_cast<long>(starts.size());
  out.evaluations = evals;
  out.status = evals >= cfg.budget ? SearchStatus::BudgetExhausted : SearchStatus::Converged;
  if (!on_rest) {
    if (best_boundary < kInf) out.best_boundary = best_boundary;
    if (best_interior < kInf) out.best_interior = best_interior;
  }
  for (const Candidate& c : results) {
    if (!(c.value < 0.0)) break;
    const EvalPoint p = EvalPoint::from_logs(c.logs);
    const Margin m = classify_predicate(cfg.predicate, p, cfg.exponent, cfg.flip_sign, copts);
    if (m.verdict == Verdict::Violated) {
      out.best_point = p;
      out.best_margin = m;
      return out;
    }
  }
  const Candidate& top = results.front();
  out.best_point = EvalPoint::from_logs(top.logs);
  out.best_margin =
      classify_predicate(cfg.predicate, out.best_point, cfg.exponent, cfg.flip_sign, copts);
  return out;
}

namespace {

SearchOutcome probe(PredicateId pred, int n, double alpha, long budget, std::uint64_t seed,
                    int probe_index) {
  SearchConfig cfg;
  cfg.predicate = pred;
  cfg.n = n;
  cfg.exponent = alpha;
  cfg.budget = budget;
  cfg.seed = derive_stream_seed(seed, static_cast<std::uint64_t>(probe_index));
  cfg.force = true;
  return minimize_margin(cfg);
}

bool violated(const SearchOutcome& o) { return o.best_margin.verdict == Verdict::Violated; }

}  // namespace

ThresholdEstimate bisect_alpha_n_case2(int n, double tolerance, long budget_per_probe,
                                       std::uint64_t seed) {
  if (n < 3) throw std::invalid_argument("threshold bisection needs n >= 3");
  if (!(tolerance >= 1e-3)) throw std::invalid_argument("tolerance must be >= 1e-3");

  ThresholdEstimate est;
  est.n = n;
  est.predicate = PredicateId::Ineq8;
  est.tolerance = tolerance;
  est.note =
      "a probe is violating iff the search confirms a negative margin within budget, "
      "so the bracket upper-estimates the true threshold; the high-end clearance is "
      "budget-limited evidence, not proof";

  int k = 0;
  double lo = 1.01;
  double hi = case_boundary(n);
  SearchOutcome at_lo = probe(PredicateId::Ineq8, n, lo, budget_per_probe, seed, k++);
  est.evaluations += at_lo.evaluations;
  if (!violated(at_lo)) {
    est.alpha_lo = lo;
    est.alpha_hi = hi;
    est.witness_lo = at_lo;
    est.probes = k;
    est.status = BracketStatus::Invalid;
    est.note = "no violation found at the initial low probe; bracket invalid";
    return est;
  }
  SearchOutcome at_hi = probe(PredicateId::Ineq8, n, hi, budget_per_probe, seed, k++);
  est.evaluations += at_hi.evaluations;
  if (violated(at_hi)) {
    est.alpha_lo = lo;
    est.alpha_hi = hi;
    est.witness_lo = at_lo;
    est.clearance_hi = at_hi;
    est.probes = k;
    est.status = BracketStatus::Invalid;
    est.note = "violation at the case boundary where gamma = 1; bracket invalid";
    return est;
  }

  while (hi - lo > tolerance) {
    const double mid = 0.5 * (lo + hi);
    SearchOutcome at_mid = probe(PredicateId::Ineq8, n, mid, budget_per_probe, seed, k++);
    est.evaluations += at_mid.evaluations;
    if (violated(at_mid)) {
      lo = mid;
      at_lo = std::move(at_mid);
    } else {
      hi = mid;
      at_hi = std::move(at_mid);
    }
  }
  est.alpha_lo = lo;
  est.alpha_hi = hi;
  est.witness_lo = std::move(at_lo);
  est.clearance_hi = std::move(at_hi);
  est.probes = k;
  est.status = BracketStatus::Valid;
  return est;
}

ThresholdEstimate bisect_alpha_n_reverse(int n, double tolerance, long budget_per_probe,
                                         std::uint64_t seed) {
  if (n < 3) throw std::invalid_argument("threshold bisection needs n >= 3");
  if (!(tolerance >= 1e-3)) throw std::invalid_argument("tolerance must be >= 1e-3");

  ThresholdEstimate est;
  est.n = n;
  est.predicate = PredicateId::Prop2;
  est.tolerance = tolerance;
  est.note =
      "a probe is violating iff the search confirms a positive cyclic sum within budget, "
      "so the bracket upper-estimates the true onset; the high-end clearance is "
      "budget-limited evidence, not proof";

  // Find a violating low end by walking alpha down until the limit family
  // already yields a positive sum. The family caps the usable |alpha|.
  int k = 0;
  const double hi0 = reverse_boundary(n);
  double lo = -8.0;
  SearchOutcome at_lo;
  bool found = false;
  while (true) {
    const double max_log = (n - 1) * std::log(1.5);
    if (std::abs(lo) * max_log > 700.0) break;
    at_lo = probe(PredicateId::Prop2, n, lo, budget_per_probe, seed, k++);
    est.evaluations += at_lo.evaluations;
    if (violated(at_lo)) {
      found = true;
      break;
    }
    lo *= 2.0;
  }
  if (!found) {
    est.alpha_lo = lo;
    est.alpha_hi = hi0;
    est.probes = k;
    est.status = BracketStatus::Invalid;
    est.note = "no violation found down to the log-domain budget; bracket invalid";
    return est;
  }
  double hi = hi0;
  SearchOutcome at_hi = probe(PredicateId::Prop2, n, hi, budget_per_probe, seed, k++);
  est.evaluations += at_hi.evaluations;
  if (violated(at_hi)) {
    est.alpha_lo = lo;
    est.alpha_hi = hi;
    est.witness_lo = at_lo;
    est.clearance_hi = at_hi;
    est.probes = k;
    est.status = BracketStatus::Invalid;
    est.note = "violation at the reversed proposition's endpoint; bracket invalid";
    return est;
  }

  while (hi - lo > tolerance) {
    const double mid = 0.5 * (lo + hi);
    SearchOutcome at_mid = probe(PredicateId::Prop2, n, mid, budget_per_probe, seed, k++);
    est.evaluations += at_mid.evaluations;
    if (violated(at_mid)) {
      lo = mid;
      at_lo = std::move(at_mid);
    } else {
      hi = mid;
      at_hi = std::move(at_mid);
    }
  }
  est.alpha_lo = lo;
  est.alpha_hi = hi;
  est.witness_lo = std::move(at_lo);
  est.clearance_hi = std::move(at_hi);
  est.probes = k;
  est.status = BracketStatus::Valid;
  return est;
}

}  // namespace ineqlab
