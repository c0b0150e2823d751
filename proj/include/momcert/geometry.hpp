#pragma once

// Horoball geometry primitives: cusp volume cut off by a half-space, the
// area of a lens between two disks, and its polynomial majorant.

#include "momcert/scalar.hpp"

#include <cmath>
#include <cstdint>
#include <random>
#include <stdexcept>

namespace momcert {

class geometry_domain_error : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

namespace detail {

template <Scalar T> void require_positive(const T& x, const char* what)
{
    if (!(lower_of(x) > 0)) throw geometry_domain_error(std::string(what) + " must be positive");
}

/// Radii closer than this relative gap use the equal-radius formula.
inline constexpr double equal_radius_tolerance = 0x1p-40;

template <Scalar T> bool nearly_equal_radii(const T& a, const T& b)
{
    using std::abs;
    T m = a > b ? a : b;
    return abs(a - b) <= T(equal_radius_tolerance) * m;
}

} // namespace detail

/// Volume of the region between a height-1/b horoball at infinity and a
/// half-space bounded by a radius-1/a hemisphere:
/// pi (b^2 / (2 a^2) - 1/2 + log(a/b)).
template <Scalar T> T lessvol(const T& a, const T& b)
{
    detail::require_positive(a, "lessvol: a");
    detail::require_positive(b, "lessvol: b");
    if constexpr (!is_jet_v<T>) {
        if (a > b) throw geometry_domain_error("lessvol: requires a <= b");
    }
    return pi<T>() * (b * b / (T(2) * a * a) - T(0.5) + log_of(a / b));
}

/// f(x) = acos(x) - x sqrt(1 - x^2), the normalized lens segment area.
/// Point kinds only; arguments a few ulps outside [-1, 1] are clamped.
template <Scalar T> requires(!is_jet_v<T>) T lens_f(T x)
{
    using std::acos;
    using std::sqrt;
    if (x > T(1)) x = T(1);
    if (x < T(-1)) x = T(-1);
    return acos(x) - x * sqrt(T(1) - x * x);
}

/// Polynomial majorant of lens_f on [0, 1]:
/// g(x) = (5/3 - pi/2) x^5 + x^3/3 - 2x + pi/2.
template <Scalar T> T lens_g(const T& x)
{
    T half_pi = pi<T>() * T(0.5);
    T c5 = T(5) / T(3) - half_pi;
    T x2 = x * x;
    return x * (x2 * (c5 * x2 + T(1) / T(3)) - T(2)) + half_pi;
}

namespace detail {

template <Scalar T, class Kernel>
T two_disk_formula(const T& a, const T& b, const T& c, Kernel&& kernel)
{
    bool equal = false;
    if constexpr (!is_jet_v<T>) equal = nearly_equal_radii(a, b);
    if (equal) return T(2) * a * a * kernel(c / (T(2) * a));
    // The unequal formula tends to the equal one as b -> a, so jets always
    // use it; only c -> 0 needs the split.
    // (a^2 - b^2 + c^2) / (2ac) with c kept out of the numerator, which keeps
    // jet enclosures tight
    T a2 = a * a, b2 = b * b, d = a2 - b2;
    T x = d / (T(2) * a * c) + c / (T(2) * a);
    T y = c / (T(2) * b) - d / (T(2) * b * c);
    return a2 * kernel(x) + b2 * kernel(y);
}

} // namespace detail

/// Exact area of the intersection of disks of radii a, b whose centers are c
/// apart.  Requires |a - b| <= c <= a + b (up to a relative 1e-12 slack).
template <Scalar T> requires(!is_jet_v<T>) T overlap_area(const T& a, const T& b, const T& c)
{
    using std::abs;
    detail::require_positive(a, "overlap_area: a");
    detail::require_positive(b, "overlap_area: b");
    T slack = T(1e-12) * (a + b);
    if (c < abs(a - b) - slack || c > a + b + slack)
        throw geometry_domain_error("overlap_area: disks disjoint or nested");
    if (c <= T(0)) {
        // concentric equal disks
        return pi<T>() * a * a;
    }
    return detail::two_disk_formula(a, b, c, [](const T& x) { return lens_f(x); });
}

/// Upper bound for overlap_area built from lens_g.  Total: c > a + b yields
/// the (possibly negative) polynomial value, callers clamp c first.
template <Scalar T> T overlap_approx(const T& a, const T& b, const T& c)
{
    detail::require_positive(a, "overlap_approx: a");
    detail::require_positive(b, "overlap_approx: b");
    if constexpr (!is_jet_v<T>) {
        if (c < T(0)) throw geometry_domain_error("overlap_approx: negative center distance");
        if (c == T(0)) {
            if (!detail::nearly_equal_radii(a, b)) throw geometry_domain_error("overlap_approx: nested disks");
            return T(2) * a * a * lens_g(T(0));
        }
    }
    return detail::two_disk_formula(a, b, c, [](const T& x) { return lens_g(x); });
}

/// overlap_approx for two disks known to have the same radius a.
template <Scalar T> T overlap_approx_equal(const T& a, const T& c)
{
    detail::require_positive(a, "overlap_approx: a");
    if constexpr (!is_jet_v<T>) {
        if (c < T(0)) throw geometry_domain_error("overlap_approx: negative center distance");
    }
    return T(2) * a * a * lens_g(c / (T(2) * a));
}

/// Distance on the cusp torus between orthocenters of horoballs in classes
/// m and n at orthoclass distance r: e_r / (e_m e_n).
template <Scalar T> T euclidean_gap(const T& e_m, const T& e_n, const T& e_r)
{
    detail::require_positive(e_m, "euclidean_gap: e_m");
    detail::require_positive(e_n, "euclidean_gap: e_n");
    detail::require_positive(e_r, "euclidean_gap: e_r");
    return e_r / (e_m * e_n);
}

/// cosh of the distance between the line through horoball centers A, C and
/// the line through B, D: (e_h e_k + e_j e_l) / (e_m e_n).
template <Scalar T>
T cosh_line_distance(const T& e_h, const T& e_j, const T& e_k, const T& e_l, const T& e_m, const T& e_n)
{
    for (const T* v : {&e_h, &e_j, &e_k, &e_l, &e_m, &e_n}) detail::require_positive(*v, "cosh_line_distance");
    return (e_h * e_k + e_j * e_l) / (e_m * e_n);
}

struct MonteCarloEstimate {
    double area = 0;
    double std_error = 0;
};

/// Monte-Carlo lens area: uniform samples in the bounding box of the smaller
/// disk, counted when they land in both disks.  Test oracle only.
inline MonteCarloEstimate mc_overlap_oracle(double a, double b, double c, std::uint64_t n,
                                            std::uint64_t seed = 0x5eed)
{
    if (!(a > 0 && b > 0 && c >= 0) || n == 0) throw geometry_domain_error("mc_overlap_oracle: bad arguments");
    // disk A at origin, disk B at (c, 0); sample the box around the smaller one
    double r = std::min(a, b);
    double cx = a <= b ? 0.0 : c;
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> u(-r, r);
    std::uint64_t hits = 0;
    for (std::uint64_t i = 0; i < n; ++i) {
        double x = cx + u(rng), y = u(rng);
        bool in_a = x * x + y * y <= a * a;
        bool in_b = (x - c) * (x - c) + y * y <= b * b;
        hits += (in_a && in_b) ? 1 : 0;
    }
    double box = 4 * r * r;
    double p = static_cast<double>(hits) / static_cast<double>(n);
    return {box * p, box * std::sqrt(p * (1 - p) / static_cast<double>(n))};
}

} // namespace momcert
