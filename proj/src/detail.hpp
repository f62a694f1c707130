#pragma once

#include <cmath>

#include "hyperratio/error.hpp"

namespace hyperratio::detail {

// arccos with rounding dust up to 1e-14 beyond [-1, 1] clamped; anything larger
// is a genuine range error.
inline double clamped_acos(double arg) {
  constexpr double dust = 1e-14;
  if (std::fabs(arg) > 1 + dust) fail(ErrorCode::ArccosRange, "arccos argument outside [-1, 1]");
  return std::acos(std::fmax(-1.0, std::fmin(1.0, arg)));
}

// x + sqrt(x^2 + c) for c >= 0, without cancellation when x < 0.
inline double plus_hypot(double x, double c) {
  const double s = std::sqrt(x * x + c);
  return x >= 0 ? x + s : c / (s - x);
}

}  // namespace hyperratio::detail
