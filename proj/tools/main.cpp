#include <CLI11.hpp>

#include <cstdio>
#include <exception>
#include <string>

#include "commands.hpp"
#include "ineqlab/errors.hpp"

using namespace ineqlab;
using namespace ineqlab::cli;

int main(int argc, char** argv) {
  CLI::App app{"numerical laboratory for a generalized cyclic inequality"};
  app.require_subcommand(1);

  GlobalOptions g;
  std::string precision = "fast";
  app.add_option("--seed", g.seed, "base RNG seed");
  app.add_option("--precision", precision, "fast | extended")
      ->check(CLI::IsMember({"fast", "extended"}));
  app.add_option("--json", g.json_path, "write the structured run report here");
  app.add_flag("--force", g.force, "probe deliberately outside the stated hypotheses");

  EvalArgs ea;
  auto* eval = app.add_subcommand("eval", "evaluate the cyclic sum at one point");
  eval->add_option("--x", ea.xs, "comma-separated positive values (decimals or rationals)")
      ->required();
  eval->add_option("--alpha", ea.alpha, "exponent alpha");

  VerifyArgs va;
  auto* verify = app.add_subcommand("verify", "fuzz one predicate (or the whole proof chain)");
  verify->add_option("--n", va.n, "dimension")->required();
  verify->add_option("--alpha", va.alphas, "comma-separated alphas");
  verify->add_option("--alpha-grid", va.alpha_grid, "alpha grid lo:hi:step");
  verify->add_option("--beta", va.betas, "comma-separated betas (power-sum predicates)");
  verify->add_option("--prop", va.prop, "1 = main inequality, 2 = reversed");
  verify->add_option("--pred", va.pred,
                     "predicate: prop1 prop2 ineq2..ineq9 amgm prop2step");
  verify->add_option("--count", va.count, "points per exponent");
  verify->add_option("--L", va.log_range, "log-uniform range for coordinates");
  verify->add_flag("--chain", va.chain, "verify every proof step under its hypotheses");

  FamilyArgs fa;
  auto* family = app.add_subcommand("family", "reproduce a remark's family phenomenon");
  family->add_option("--remark", fa.remark, "a | b | c | d")->required();
  family->add_option("--n", fa.n, "dimension");
  family->add_option("--x", fa.x, "family parameter x");
  family->add_option("--beta", fa.beta, "exponent beta (remark a)");
  family->add_option("--alpha", fa.alpha, "exponent alpha (remark b)");
  family->add_option("--alphas", fa.alphas, "descending alpha probes (remark d)");
  family->add_option("--count", fa.count, "fuzz points (remark c)");

  BisectArgs ba;
  auto* bisect = app.add_subcommand("bisect", "bracket an open threshold by bisection");
  bisect->add_option("--n", ba.n, "dimension")->required();
  bisect->add_option("--case", ba.which, "2 (zero-sum bound) | reverse (reversed inequality)");
  bisect->add_option("--tol", ba.tolerance, "bracket width target (>= 1e-3)");
  bisect->add_option("--budget", ba.budget, "margin evaluations per probe");

  SweepArgs sa;
  auto* sweep = app.add_subcommand("sweep", "fuzz a (n, alpha) grid and write a CSV");
  sweep->add_option("--n-list", sa.n_list, "comma-separated dimensions");
  sweep->add_option("--alpha-grid", sa.alpha_grid, "alpha grid lo:hi:step")->required();
  sweep->add_option("--prop", sa.prop, "1 = main inequality, 2 = reversed");
  sweep->add_option("--pred", sa.pred, "predicate name (overrides --prop)");
  sweep->add_option("--count", sa.count, "points per cell");
  sweep->add_option("--L", sa.log_range, "log-uniform range for coordinates");
  sweep->add_option("--out", sa.out, "CSV output path")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kExitOk : kExitUsage;
  }

  g.precision = precision == "extended" ? Precision::Extended : Precision::Fast;

  try {
    if (eval->parsed()) return cmd_eval(g, ea);
    if (verify->parsed()) return cmd_verify(g, va);
    if (family->parsed()) return cmd_family(g, fa);
    if (bisect->parsed()) return cmd_bisect(g, ba);
    if (sweep->parsed()) return cmd_sweep(g, sa);
  } catch (const NonPositiveInput& e) {
    std::fprintf(stderr, "domain error: %s\n", e.what());
    return kExitUsage;
  } catch (const HypothesisViolated& e) {
    std::fprintf(stderr, "hypothesis error: %s\n", e.what());
    return kExitUsage;
  } catch (const DegenerateGamma& e) {
    std::fprintf(stderr, "degenerate gamma: %s\n", e.what());
    return kExitUsage;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitUsage;
  }
  return kExitUsage;
}
