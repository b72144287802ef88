#pragma once

#include <boost/math/special_functions/fpclassify.hpp>
#include <boost/multiprecision/cpp_bin_float.hpp>

#include <type_traits>

namespace ineqlab {

/// Software wide float backing the extended-precision oracles.
/// 50 decimal digits and a huge exponent range, so family points with
/// |log x| in the tens of thousands still evaluate cleanly.
using wide_float = boost::multiprecision::cpp_bin_float_50;

template <class R>
bool finite_value(const R& x) {
  if constexpr (std::is_floating_point_v<R>) {
    return std::isfinite(x);
  } else {
    return boost::math::isfinite(x);
  }
}

template <class R>
bool nan_value(const R& x) {
  if constexpr (std::is_floating_point_v<R>) {
    return std::isnan(x);
  } else {
    return boost::math::isnan(x);
  }
}

}  // namespace ineqlab
