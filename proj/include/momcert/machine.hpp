#pragma once

#include <cfloat>
#include <cmath>
#include <limits>

namespace momcert {

/// Floating-point model for the self-validating arithmetic: IEEE binary64,
/// round-to-nearest-even, no directed rounding.
struct MachineModel {
    /// Gap between 1 and the next representable double (2^-52).
    static constexpr double eps = DBL_EPSILON;
    /// Unit roundoff under round-to-nearest: |fl(x) - x| <= unit * |fl(x)|.
    static constexpr double unit = DBL_EPSILON / 2;
    /// Absolute slack that covers a gradual-underflow rounding.
    static constexpr double tiny = DBL_MIN;
    static constexpr int mantissa_bits = DBL_MANT_DIG;

    static constexpr const char* descriptor = "binary64 round-to-nearest, EPS=2^-52";
};

static_assert(std::numeric_limits<double>::is_iec559);
static_assert(1.0 + MachineModel::eps > 1.0);

inline double next_up(double x) { return std::nextafter(x, std::numeric_limits<double>::infinity()); }
inline double next_down(double x) { return std::nextafter(x, -std::numeric_limits<double>::infinity()); }

/// Upper bound for a quantity computed from exact nonnegative doubles by a
/// tree of +, *, / of the given depth, each step rounded to nearest.
inline double pad_up(double x, int depth)
{
    return next_up(x * (1.0 + depth * MachineModel::eps));
}

/// Rounding error of a + b, recovered exactly (Knuth's TwoSum).
inline double two_sum_error(double a, double b)
{
    double s = a + b;
    double bb = s - a;
    return (a - (s - bb)) + (b - bb);
}

/// Smallest double >= the decimal value whose nearest double is `nearest`.
/// Used for constants such as 1.5152 that have no exact binary64 form.
inline double decimal_up(double nearest) { return next_up(nearest); }
inline double decimal_down(double nearest) { return next_down(nearest); }

} // namespace momcert
