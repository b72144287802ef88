#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "ineqlab/margin.hpp"

namespace ineqlab::cli {

// Exit-code contract: 0 = all checks satisfied, 1 = confirmed violation
// found (expected for force/remark runs) or invalid bracket, 2 = usage or
// domain error.
inline constexpr int kExitOk = 0;
inline constexpr int kExitViolation = 1;
inline constexpr int kExitUsage = 2;

struct GlobalOptions {
  std::uint64_t seed = 0;
  Precision precision = Precision::Fast;
  std::string json_path;
  bool force = false;
};

struct EvalArgs {
  std::string xs;     // comma-separated values, decimals or rationals
  std::string alpha = "2";
};

struct VerifyArgs {
  int n = 3;
  std::string alphas;      // comma-separated values
  std::string alpha_grid;  // lo:hi:step, alternative to alphas
  std::string betas;       // for the power-sum predicates
  int prop = 1;
  std::string pred;        // overrides prop when set
  long count = 10000;
  double log_range = 5.0;
  bool chain = false;
};

struct FamilyArgs {
  std::string remark;  // a | b | c | d
  int n = 3;
  double x = 2.0;
  double beta = -1.0;
  double alpha = 1.05;
  std::string alphas = "-10,-20,-40";
  long count = 1000;
};

struct BisectArgs {
  int n = 3;
  std::string which = "2";  // 2 | reverse
  double tolerance = 0.01;
  long budget = 100000;
};

struct SweepArgs {
  std::string n_list = "3";
  std::string alpha_grid;  // lo:hi:step
  int prop = 1;
  std::string pred;
  long count = 1000;
  double log_range = 5.0;
  std::string out;  // CSV path
};

int cmd_eval(const GlobalOptions& g, const EvalArgs& a);
int cmd_verify(const GlobalOptions& g, const VerifyArgs& a);
int cmd_family(const GlobalOptions& g, const FamilyArgs& a);
int cmd_bisect(const GlobalOptions& g, const BisectArgs& a);
int cmd_sweep(const GlobalOptions& g, const SweepArgs& a);

/// Parses a decimal or a rational of the form "p/q" (exact division of the
/// two parsed halves, so family values like 3/2 convert without drift).
double parse_real(const std::string& s);
std::vector<double> parse_real_list(const std::string& s);
std::vector<int> parse_int_list(const std::string& s);
std::vector<double> parse_grid(const std::string& s);  // "lo:hi:step", inclusive

}  // namespace ineqlab::cli
