#pragma once

#include <algorithm>
#include <cmath>

namespace ptolemy {

/// Scale-invariant comparison: relative tolerance with an absolute floor.
/// Cross-ratio classes are closed under rescaling, so every default
/// comparison in the library is relative; the floor keeps comparisons
/// near zero meaningful.
struct Tolerance {
  double rel = 1e-9;
  double abs = 1e-15;

  constexpr double slack(double scale) const {
    return std::max(abs, rel * std::fabs(scale));
  }

  bool close(double a, double b) const {
    return std::fabs(a - b) <= slack(std::max(std::fabs(a), std::fabs(b)));
  }

  /// |a - b| normalized by the larger magnitude (0 when both vanish).
  static double relative_gap(double a, double b) {
    const double scale = std::max(std::fabs(a), std::fabs(b));
    if (scale == 0.0) return 0.0;
    return std::fabs(a - b) / scale;
  }
};

}  // namespace ptolemy
