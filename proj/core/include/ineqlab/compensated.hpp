#pragma once

#include <cmath>

#include "ineqlab/wide.hpp"

namespace ineqlab {

/// Neumaier-compensated accumulator. The running error term keeps the result
/// within ~1 ulp of the exact sum of the added values.
template <class R>
class CompensatedSum {
 public:
  void add(const R& v) {
    const R t = sum_ + v;
    if (!finite_value(t)) {
      // An infinite partial sum would poison the compensation term.
      sum_ = t;
      return;
    }
    if (abs_ge(sum_, v)) {
      comp_ += (sum_ - t) + v;
    } else {
      comp_ += (v - t) + sum_;
    }
    sum_ = t;
  }

  R value() const { return finite_value(sum_) ? sum_ + comp_ : sum_; }

 private:
  static bool abs_ge(const R& a, const R& b) {
    using std::abs;
    return abs(a) >= abs(b);
  }

  R sum_{0};
  R comp_{0};
};

}  // namespace ineqlab
