#include "ineqlab/fuzz.hpp"

#include <limits>

#include "ineqlab/kernels.hpp"
#include "ineqlab/search.hpp"

namespace ineqlab {

namespace {

struct Tracker {
  FuzzResult res;
  TolerancePolicy policy;

  void observe(PredicateId pred, const EvalPoint& p, double exponent, bool flip,
               double fast_value, double fast_scale) {
    ++res.checks;
    if (fast_value < res.min_margin) res.min_margin = fast_value;
    const Margin fast = classify_fast(fast_value, fast_scale, policy);
    if (fast.verdict == Verdict::Satisfied) return;
    CheckOptions opts;
    opts.force = true;
    opts.precision = Precision::Extended;
    opts.policy = policy;
    const Margin fin = classify_predicate(pred, p, exponent, flip, opts);
    if (fin.verdict != Verdict::Violated) return;
    ++res.violations;
    if (!res.worst_point || fin.value < res.worst_margin.value) {
      res.worst_point = p;
      res.worst_margin = fin;
    }
  }
};

}  // namespace

FuzzResult fuzz_predicate(const FuzzConfig& cfg) {
  if (cfg.n < 1 || cfg.count < 0) throw std::invalid_argument("bad fuzz config");
  if (!cfg.force) {
    const Hypotheses h = hypotheses_for(cfg.predicate, cfg.n);
    if (!h.exponent_range.contains(cfg.exponent))
      throw HypothesisViolated("fuzz exponent outside the predicate's range (use force)");
  }

  const bool on_rest = predicate_on_rest(cfg.predicate);
  const int dim = on_rest ? cfg.n - 1 : cfg.n;
  const double sign = cfg.flip_sign ? -1.0 : 1.0;

  Tracker tr;
  tr.policy = cfg.policy;
  tr.res.min_margin = std::numeric_limits<double>::infinity();

  const auto run_point = [&](const EvalPoint& p) {
    ++tr.res.points;
    if (predicate_indexed(cfg.predicate)) {
      for (int i = 0; i < p.n(); ++i) {
        kernels::MarginValue<double> m{0, 1};
        switch (cfg.predicate) {
          case PredicateId::Ineq2: m = kernels::ineq2<double>(p.logs(), i, cfg.exponent); break;
          case PredicateId::Ineq8: m = kernels::ineq8<double>(p.logs(), i, cfg.exponent); break;
          default: m = kernels::prop2_step<double>(p.logs(), i, cfg.exponent); break;
        }
        // A confirmed violation at the worst coordinate certifies the point.
        tr.observe(cfg.predicate, p, cfg.exponent, cfg.flip_sign, sign * m.value, m.scale);
      }
    } else {
      const RawMargin m = raw_margin_scaled(cfg.predicate, p.logs(), cfg.exponent);
      tr.observe(cfg.predicate, p, cfg.exponent, cfg.flip_sign, sign * m.value, m.scale);
    }
  };

  if (cfg.include_family_seeds) {
    for (const EvalPoint& p : family_starts(cfg.predicate, cfg.n, cfg.exponent)) run_point(p);
  }

  if (on_rest) {
    Rng rng(derive_stream_seed(cfg.seed, 0x7e57));
    for (long k = 0; k < cfg.count; ++k) {
      std::vector<double> logs(static_cast<size_t>(dim));
      for (double& l : logs) l = rng.uniform(-cfg.log_range, cfg.log_range);
      run_point(EvalPoint::from_logs(std::move(logs)));
    }
  } else {
    const long n_boundary = cfg.mix == FuzzConfig::Mix::BoundaryOnly   ? cfg.count
                            : cfg.mix == FuzzConfig::Mix::InteriorOnly ? 0
                                                                       : cfg.count / 2;
    SampleConfig sc{cfg.n, cfg.log_range, true, n_boundary, derive_stream_seed(cfg.seed, 1)};
    PointSampler boundary(sc);
    for (long k = 0; k < n_boundary; ++k) run_point(boundary.next());
    sc.project = false;
    sc.count = cfg.count - n_boundary;
    sc.seed = derive_stream_seed(cfg.seed, 2);
    PointSampler interior(sc);
    for (long k = 0; k < sc.count; ++k) run_point(interior.next());
  }
  return tr.res;
}

FuzzResult fuzz_chain(int n, double alpha, long count, std::uint64_t seed, double log_range,
                      const TolerancePolicy& policy) {
  Tracker tr;
  tr.policy = policy;
  tr.res.min_margin = std::numeric_limits<double>::infinity();
  CheckOptions opts;
  opts.policy = policy;

  const auto run_point = [&](const EvalPoint& p) {
    ++tr.res.points;
    for (const CheckReport& r : check_chain(p, alpha, opts)) {
      ++tr.res.checks;
      if (r.margin.value < tr.res.min_margin) tr.res.min_margin = r.margin.value;
      if (r.margin.verdict == Verdict::Violated) {
        ++tr.res.violations;
        if (!tr.res.worst_point || r.margin.value < tr.res.worst_margin.value) {
          tr.res.worst_point = p;
          tr.res.worst_margin = r.margin;
        }
      }
    }
  };

  for (const EvalPoint& p : family_starts(PredicateId::Prop1, n, alpha)) run_point(p);
  SampleConfig sc{n, log_range, true, count / 2, derive_stream_seed(seed, 1)};
  PointSampler boundary(sc);
  for (long k = 0; k < sc.count; ++k) run_point(boundary.next());
  sc.project = false;
  sc.count = count - count / 2;
  sc.seed = derive_stream_seed(seed, 2);
  PointSampler interior(sc);
  for (long k = 0; k < sc.count; ++k) run_point(interior.next());
  return tr.res;
}

}  // namespace ineqlab
