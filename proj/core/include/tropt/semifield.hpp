#pragma once

/// Scalar algebra of a linearly ordered, radicable, idempotent semifield.
///
/// Four concrete instances are supported:
///
///   max-plus    carrier R u {-inf},  zero = -inf, one = 0, (+) = max, (*) = +
///   min-plus    carrier R u {+inf},  zero = +inf, one = 0, (+) = min, (*) = +
///   max-times   carrier R+ u {0},    zero = 0,    one = 1, (+) = max, (*) = *
///   min-times   carrier R+ u {+inf}, zero = +inf, one = 1, (+) = min, (*) = *
///
/// Scalars are plain doubles; zero is the IEEE infinity of the correct sign
/// (or 0.0 for max-times), so the neutral/absorbing laws hold without sentinel
/// bookkeeping. The tag lives on containers, not on every element.

#include <cmath>
#include <limits>
#include <string>

#include "tropt/errors.hpp"

namespace tropt {

enum class SemifieldTag { MaxPlus, MinPlus, MaxTimes, MinTimes };

/// I/O name of a tag: "max-plus", "min-plus", "max-times", "min-times".
std::string tag_name(SemifieldTag tag);

/// Inverse of tag_name; throws ParseError on unknown names.
SemifieldTag tag_from_name(const std::string& name);

class Semifield {
  public:
    explicit constexpr Semifield(SemifieldTag tag) : tag_(tag) {}

    constexpr SemifieldTag tag() const { return tag_; }

    /// (+) picks the larger operand numerically (max-tags) or the smaller one (min-tags).
    constexpr bool max_like() const {
        return tag_ == SemifieldTag::MaxPlus || tag_ == SemifieldTag::MaxTimes;
    }

    /// (*) is numeric addition (plus-tags) as opposed to numeric multiplication.
    constexpr bool plus_like() const {
        return tag_ == SemifieldTag::MaxPlus || tag_ == SemifieldTag::MinPlus;
    }

    constexpr double zero() const {
        switch (tag_) {
            case SemifieldTag::MaxPlus:  return -std::numeric_limits<double>::infinity();
            case SemifieldTag::MinPlus:  return std::numeric_limits<double>::infinity();
            case SemifieldTag::MaxTimes: return 0.0;
            case SemifieldTag::MinTimes: return std::numeric_limits<double>::infinity();
        }
        return 0.0; // unreachable
    }

    constexpr double one() const { return plus_like() ? 0.0 : 1.0; }

    constexpr bool is_zero(double a) const { return a == zero(); }

    /// True when the value lies in the carrier set of this semifield.
    bool in_carrier(double a) const {
        if (std::isnan(a)) return false;
        switch (tag_) {
            case SemifieldTag::MaxPlus:  return a < std::numeric_limits<double>::infinity();
            case SemifieldTag::MinPlus:  return a > -std::numeric_limits<double>::infinity();
            case SemifieldTag::MaxTimes: return a >= 0.0 && std::isfinite(a);
            case SemifieldTag::MinTimes: return a > 0.0; // +inf is the zero element
        }
        return false;
    }

    /// a (+) b. Pure selection: the result equals a or b exactly.
    double add(double a, double b) const { return max_like() ? std::fmax(a, b) : std::fmin(a, b); }

    /// a (*) b. Zero operands are checked first so that zero absorbs
    /// (the plus-tags would otherwise produce inf - inf = NaN).
    double mul(double a, double b) const {
        if (is_zero(a) || is_zero(b)) return zero();
        return plus_like() ? a + b : a * b;
    }

    /// Multiplicative inverse; throws DomainError for the zero element.
    double inv(double a) const {
        if (is_zero(a)) throw DomainError("inv: zero has no multiplicative inverse");
        return plus_like() ? -a : 1.0 / a;
    }

    /// a to the rational power r (r * a in plus-tags, pow(a, r) in times-tags).
    /// pow(zero, r) = zero for r > 0; r <= 0 on zero throws DomainError.
    double pow(double a, double r) const {
        if (is_zero(a)) {
            if (r > 0.0) return zero();
            throw DomainError("pow: zero requires a positive exponent");
        }
        return plus_like() ? r * a : std::pow(a, r);
    }

    /// Order induced by (+): a <= b iff a (+) b = b. Reverses the numeric
    /// order in the min-tags.
    bool leq(double a, double b) const { return add(a, b) == b; }

    bool lt(double a, double b) const { return leq(a, b) && a != b; }

    friend constexpr bool operator==(Semifield lhs, Semifield rhs) { return lhs.tag_ == rhs.tag_; }

  private:
    SemifieldTag tag_;
};

inline constexpr Semifield max_plus{SemifieldTag::MaxPlus};
inline constexpr Semifield min_plus{SemifieldTag::MinPlus};
inline constexpr Semifield max_times{SemifieldTag::MaxTimes};
inline constexpr Semifield min_times{SemifieldTag::MinTimes};

} // namespace tropt
