#pragma once

#include <algorithm>
#include <cmath>

#include "tropt/semifield.hpp"

namespace tropt {

/// Relative comparison with a floor of 1 on the scale, so values near zero
/// are compared absolutely. Infinities compare equal only to themselves.
inline bool approx_equal(double a, double b, double rtol) {
    if (a == b) return true;
    if (std::isinf(a) || std::isinf(b)) return false;
    const double scale = std::max({1.0, std::fabs(a), std::fabs(b)});
    return std::fabs(a - b) <= rtol * scale;
}

/// a <= b in the semifield order, allowing rtol slack at the boundary.
inline bool approx_leq(const Semifield& sf, double a, double b, double rtol) {
    return sf.leq(a, b) || approx_equal(a, b, rtol);
}

} // namespace tropt
