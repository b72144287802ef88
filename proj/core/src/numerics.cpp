#include "ineqlab/numerics.hpp"

#include "ineqlab/errors.hpp"
#include "ineqlab/kernels.hpp"

namespace ineqlab {

double eval_term(const EvalPoint& p, int i, double alpha) {
  return kernels::term<double>(p.logs(), i, alpha);
}

double eval_sum(const EvalPoint& p, double alpha) {
  return kernels::sum_terms<double>(p.logs(), alpha);
}

wide_float eval_sum_hp(const EvalPoint& p, double alpha) {
  return kernels::sum_terms<wide_float>(p.logs(), alpha);
}

int sign_of_sum_hp(const EvalPoint& p, double alpha, double eps_abs) {
  const wide_float s = eval_sum_hp(p, alpha);
  if (s > wide_float(eps_abs)) return 1;
  if (s < -wide_float(eps_abs)) return -1;
  throw PrecisionExhausted("cyclic sum is within the extended-precision tolerance of zero");
}

}  // namespace ineqlab
