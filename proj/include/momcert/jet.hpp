#pragma once

// Affine 1-jets over three noise variables x1, x2, x3 in [-1,1].
//
// A jet (c0; c1,c2,c3; eps) stands for every function f on [-1,1]^3 with
// |f(x) - (c0 + c1 x1 + c2 x2 + c3 x3)| <= eps.  Every operation below returns
// a jet that contains the pointwise result for all members of its operands,
// assuming binary64 round-to-nearest arithmetic.
//
// Error terms follow one scheme throughout:
//
//     eps_h = (1 + n EPS) (eps_t + eps_f)
//
// eps_t is the truncation ("Taylor") error of the operation on exact members,
// eps_f the rounding error made while computing the coefficients, and the
// factor (1 + n EPS) absorbs rounding in the error sum itself.  All error sums
// are built from +, *, / on nonnegative doubles, so a sum of tree depth d is
// below the exact value by at most a factor (1-u)^d; n is chosen with
// 2n >= d + 2.  Subtractions that feed error terms are bounded explicitly.

#include "momcert/machine.hpp"

#include <array>
#include <cmath>
#include <cstdlib>
#include <ostream>
#include <stdexcept>
#include <string>

namespace momcert {

class jet_error : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// An operation produced an infinite or NaN field.
class non_finite_error : public jet_error {
public:
    using jet_error::jet_error;
};

/// Divisor range touches zero.
class division_domain_error : public jet_error {
public:
    using jet_error::jet_error;
};

/// Logarithm argument not rigorously positive.
class log_domain_error : public jet_error {
public:
    using jet_error::jet_error;
};

struct Interval {
    double lo = 0;
    double hi = 0;

    double width() const { return hi - lo; }
    bool contains(double x) const { return lo <= x && x <= hi; }
    bool excludes_zero() const { return lo > 0 || hi < 0; }
};

inline std::ostream& operator<<(std::ostream& os, const Interval& iv)
{
    return os << '[' << iv.lo << ", " << iv.hi << ']';
}

/// Per-operation n in the (1 + n EPS) padding factor.
namespace jet_padding {
    inline constexpr int add = 3;   // matches the published addition scheme
    inline constexpr int scale = 3;
    inline constexpr int mul = 8;   // error-sum depth 9
    inline constexpr int recip = 8; // error-sum depth 8
    inline constexpr int log = 6;   // fallback error-sum depth 6
} // namespace jet_padding

/// Tunables for the logarithm.
struct LogConfig {
    double window_lo = 0.9;
    double window_hi = 1.13;
    int taylor_degree = 12;
    /// Reduction constant; 9/8 is exact in binary64.
    double reduction = 9.0 / 8.0;
};

inline constexpr LogConfig default_log_config{};

class Jet {
public:
    constexpr Jet() = default;
    /// Exact constant.
    Jet(double value) : c0_(value) { check("constant"); } // NOLINT(google-explicit-constructor)
    Jet(double c0, std::array<double, 3> lin, double eps) : c0_(c0), lin_(lin), eps_(eps)
    {
        check("constructor");
        if (eps < 0) throw std::invalid_argument("jet error radius must be nonnegative");
    }

    double center() const { return c0_; }
    double coeff(int i) const { return lin_[static_cast<std::size_t>(i)]; }
    const std::array<double, 3>& linear() const { return lin_; }
    double eps() const { return eps_; }

    /// |c1| + |c2| + |c3| + eps, rounded up.
    double radius() const
    {
        double r = (std::abs(lin_[0]) + std::abs(lin_[1])) + (std::abs(lin_[2]) + eps_);
        return next_up(next_up(r));
    }

    /// Value of the affine part at x.
    double affine_at(const std::array<double, 3>& x) const
    {
        return c0_ + lin_[0] * x[0] + lin_[1] * x[1] + lin_[2] * x[2];
    }

    bool operator==(const Jet&) const = default;

    friend Jet operator-(const Jet& f) { return Jet(-f.c0_, {-f.lin_[0], -f.lin_[1], -f.lin_[2]}, f.eps_); }
    friend Jet operator+(const Jet& f, const Jet& g);
    friend Jet operator-(const Jet& f, const Jet& g) { return f + (-g); }
    friend Jet operator*(const Jet& f, const Jet& g);
    friend Jet operator/(const Jet& f, const Jet& g);

    Jet& operator+=(const Jet& g) { return *this = *this + g; }
    Jet& operator-=(const Jet& g) { return *this = *this - g; }
    Jet& operator*=(const Jet& g) { return *this = *this * g; }
    Jet& operator/=(const Jet& g) { return *this = *this / g; }

private:
    void check(const char* op) const
    {
        bool ok = std::isfinite(c0_) && std::isfinite(lin_[0]) && std::isfinite(lin_[1])
                  && std::isfinite(lin_[2]) && std::isfinite(eps_);
        if (!ok) throw non_finite_error(std::string("non-finite jet produced by ") + op);
    }

    friend Jet make_checked(double c0, std::array<double, 3> lin, double eps, const char* op);

    double c0_ = 0;
    std::array<double, 3> lin_{};
    double eps_ = 0;
};

inline Jet make_checked(double c0, std::array<double, 3> lin, double eps, const char* op)
{
    Jet h;
    h.c0_ = c0;
    h.lin_ = lin;
    h.eps_ = eps;
    h.check(op);
    return h;
}

inline std::ostream& operator<<(std::ostream& os, const Jet& f)
{
    return os << '(' << f.center() << "; " << f.coeff(0) << ", " << f.coeff(1) << ", " << f.coeff(2)
              << "; " << f.eps() << ')';
}

inline bool is_exact_constant_fields(const Jet& f)
{
    return f.coeff(0) == 0 && f.coeff(1) == 0 && f.coeff(2) == 0 && f.eps() == 0;
}

/// Rigorous enclosure of the values taken by every member of f.
inline Interval range(const Jet& f)
{
    if (is_exact_constant_fields(f)) return {f.center(), f.center()};
    double r = f.radius();
    return {next_down(f.center() - r), next_up(f.center() + r)};
}

inline Jet operator+(const Jet& f, const Jet& g)
{
    std::array<double, 3> h{};
    for (std::size_t i = 0; i < 3; ++i) h[i] = f.lin_[i] + g.lin_[i];
    double h0 = f.c0_ + g.c0_;
    double et = f.eps_ + g.eps_;
    double ef = MachineModel::eps / 2
                * ((std::abs(h0) + std::abs(h[0])) + (std::abs(h[1]) + std::abs(h[2])));
    double ea = jet_padding::add * MachineModel::eps;
    return make_checked(h0, h, (1 + ea) * (et + ef), "add");
}

/// k * F for an exact double k.
inline Jet scale(const Jet& f, double k)
{
    std::array<double, 3> h{};
    for (std::size_t i = 0; i < 3; ++i) h[i] = k * f.coeff(static_cast<int>(i));
    double h0 = k * f.center();
    double et = std::abs(k) * f.eps();
    double ef = MachineModel::eps / 2
                    * ((std::abs(h0) + std::abs(h[0])) + (std::abs(h[1]) + std::abs(h[2])))
                + MachineModel::tiny;
    double ea = jet_padding::scale * MachineModel::eps;
    return make_checked(h0, h, (1 + ea) * (et + ef), "scale");
}

/// F / k for an exact nonzero double k.
inline Jet scale_div(const Jet& f, double k)
{
    if (k == 0 || !std::isfinite(k)) throw division_domain_error("division by zero constant");
    std::array<double, 3> h{};
    for (std::size_t i = 0; i < 3; ++i) h[i] = f.coeff(static_cast<int>(i)) / k;
    double h0 = f.center() / k;
    double et = f.eps() / std::abs(k);
    double ef = MachineModel::eps / 2
                    * ((std::abs(h0) + std::abs(h[0])) + (std::abs(h[1]) + std::abs(h[2])))
                + MachineModel::tiny;
    double ea = jet_padding::scale * MachineModel::eps;
    return make_checked(h0, h, (1 + ea) * (et + ef), "scale_div");
}

/// F * 2^e, exact unless a field drops into the subnormal range.
inline Jet scale_pow2(const Jet& f, int e)
{
    std::array<double, 3> h{};
    for (std::size_t i = 0; i < 3; ++i) h[i] = std::ldexp(f.coeff(static_cast<int>(i)), e);
    double eps = std::ldexp(f.eps(), e);
    if (e < 0) eps = next_up(eps + 4 * MachineModel::tiny);
    return make_checked(std::ldexp(f.center(), e), h, eps, "scale_pow2");
}

inline bool is_exact_constant(const Jet& f) { return is_exact_constant_fields(f); }

inline Jet operator*(const Jet& f, const Jet& g)
{
    if (is_exact_constant(g)) return scale(f, g.c0_);
    if (is_exact_constant(f)) return scale(g, f.c0_);
    const auto& fl = f.lin_;
    const auto& gl = g.lin_;
    double h0 = f.c0_ * g.c0_;
    std::array<double, 3> a{}, b{}, h{};
    for (std::size_t i = 0; i < 3; ++i) {
        a[i] = f.c0_ * gl[i];
        b[i] = g.c0_ * fl[i];
        h[i] = a[i] + b[i];
    }
    double sf = (std::abs(fl[0]) + std::abs(fl[1])) + std::abs(fl[2]);
    double sg = (std::abs(gl[0]) + std::abs(gl[1])) + std::abs(gl[2]);
    // cross terms of the linear parts, plus everything touching an error term
    double et = (sf * sg + f.eps_ * ((std::abs(g.c0_) + sg) + g.eps_))
                + g.eps_ * (std::abs(f.c0_) + sf);
    // h0 one rounding; h_i three roundings bounded by |h_i| + |a_i| + |b_i|
    double hs = (std::abs(h0) + std::abs(h[0])) + (std::abs(h[1]) + std::abs(h[2]));
    double ab = ((std::abs(a[0]) + std::abs(b[0])) + (std::abs(a[1]) + std::abs(b[1])))
                + (std::abs(a[2]) + std::abs(b[2]));
    double ef = MachineModel::eps / 2 * (hs + ab) + 8 * MachineModel::tiny;
    double ea = jet_padding::mul * MachineModel::eps;
    return make_checked(h0, h, (1 + ea) * (et + ef), "mul");
}

/// Rigorous enclosure of 1/G.
///
/// Writing G = g0 + v with |v| <= s, 1/G = 1/g0 - v/g0^2 + v^2/(g0^2 (g0+v)).
/// This is the degree-1 truncation of the geometric series for 1/(1+v/g0);
/// in 1-jet arithmetic every higher power of v is pure error, so the tail
/// collapses to s^2 / (g0^2 (|g0| - s)).
inline Jet reciprocal(const Jet& g)
{
    double m = std::abs(g.center());
    double s = pad_up((std::abs(g.coeff(0)) + std::abs(g.coeff(1))) + (std::abs(g.coeff(2)) + g.eps()), 2);
    if (!(s < m)) throw division_domain_error("divisor range contains zero");
    double gap = (m - s) * (1 - 2 * MachineModel::eps); // <= exact m - s
    if (!(gap > 0)) throw division_domain_error("divisor range contains zero");

    double c = 1.0 / g.center();
    std::array<double, 3> k{};
    for (std::size_t i = 0; i < 3; ++i) k[i] = -(g.coeff(static_cast<int>(i)) * c) * c;
    double inv2 = std::abs(c) * std::abs(c) * (1 + 4 * MachineModel::eps); // >= 1/g0^2
    double et = g.eps() * inv2 + (s * s) * inv2 / gap;
    double ks = (std::abs(k[0]) + std::abs(k[1])) + std::abs(k[2]);
    double ef = MachineModel::eps * (std::abs(c) + 3 * ks) + 8 * MachineModel::tiny;
    double ea = jet_padding::recip * MachineModel::eps;
    return make_checked(c, k, (1 + ea) * (et + ef), "reciprocal");
}

inline Jet operator/(const Jet& f, const Jet& g)
{
    if (is_exact_constant(g)) return scale_div(f, g.c0_);
    return f * reciprocal(g);
}

/// max(f, 0) for every member f.
inline Jet max0(const Jet& f)
{
    Interval r = range(f);
    if (r.lo >= 0) return f;
    if (r.hi <= 0) return Jet{};
    // s = 1/2 (1 + 3 EPS)(c0 + (|c1|+|c2|) + (|c3|+eps)), with the inner sum
    // rounded upward so cancellation against a negative c0 stays rigorous.
    double inner = f.radius();
    double s = 0.5 * (1 + 3 * MachineModel::eps) * next_up(f.center() + inner);
    s = next_up(std::max(s, 0.0));
    return make_checked(s, {0, 0, 0}, s, "max0");
}

/// min(f, g) = f - max0(f - g).
inline Jet min(const Jet& f, const Jet& g) { return f - max0(f - g); }

/// Jet for the nondecreasing affine bijection from [-1,1] on `axis` (1..3)
/// onto a representable interval containing [lo, hi].
inline Jet jet_from_interval(int axis, double lo, double hi)
{
    if (!std::isfinite(lo) || !std::isfinite(hi)) throw std::invalid_argument("non-finite interval endpoint");
    if (lo > hi) throw std::invalid_argument("interval endpoints out of order");
    if (axis < 1 || axis > 3) throw std::invalid_argument("axis must be 1, 2 or 3");
    double mid = lo + (hi - lo) / 2;
    if (!std::isfinite(mid)) mid = lo / 2 + hi / 2;
    double below = mid - lo;
    if (two_sum_error(mid, -lo) > 0) below = next_up(below);
    double above = hi - mid;
    if (two_sum_error(hi, -mid) > 0) above = next_up(above);
    std::array<double, 3> lin{};
    lin[static_cast<std::size_t>(axis - 1)] = std::max(below, above);
    return make_checked(mid, lin, 0, "jet_from_interval");
}

/// Constant jet whose radius covers the distance to an irrational target.
enum class Constant { pi, sqrt3, log_9_8, ln2 };

inline Jet const_enclosure(Constant name)
{
    double v = 0;
    switch (name) {
        case Constant::pi: v = 3.141592653589793116; break;
        case Constant::sqrt3: v = 1.7320508075688772; break;
        case Constant::log_9_8: v = 0.11778303565638346; break;
        case Constant::ln2: v = 0.6931471805599453; break;
    }
    double ulp = next_up(v) - v;
    return make_checked(v, {0, 0, 0}, ulp, "const_enclosure");
}

/// Constant jet containing the real number whose nearest double is `nearest`.
inline Jet enclosing(double nearest)
{
    double ulp = next_up(std::abs(nearest)) - std::abs(nearest);
    return make_checked(nearest, {0, 0, 0}, ulp, "enclosing");
}

namespace detail {

/// Taylor polynomial of log(1+u) on a jet u whose range lies in (-1, 1),
/// with the Lagrange remainder added to the error radius.
inline Jet log1p_taylor(const Jet& u, int degree)
{
    // (-1)^(n+1)/n; only powers of two are exact, the rest get one ulp
    auto coeff = [](int n) {
        double v = 1.0 / n;
        if ((n & (n - 1)) != 0) return (n % 2 ? 1.0 : -1.0) * enclosing(v);
        return Jet((n % 2 ? 1.0 : -1.0) * v);
    };
    Jet p = coeff(degree);
    for (int n = degree - 1; n >= 1; --n) p = p * u + coeff(n);
    p = p * u;

    // |R| <= t^(d+1)/(d+1) with t = max(u_hi, |u_lo|/(1+u_lo))
    Interval ur = range(u);
    double t_pos = std::max(ur.hi, 0.0);
    double t_neg = 0;
    if (ur.lo < 0) {
        double one_plus = (1 + ur.lo) * (1 - 2 * MachineModel::eps);
        t_neg = (-ur.lo) / one_plus;
    }
    double t = std::max(t_pos, t_neg);
    double rem = 1;
    for (int i = 0; i <= degree; ++i) rem *= t;
    rem /= (degree + 1);
    double eps = pad_up(p.eps() + rem, degree + 4);
    return make_checked(p.center(), p.linear(), eps, "log");
}

} // namespace detail

/// Natural logarithm.  Power-of-two and 9/8 range reduction bring the jet
/// into the Taylor window around 1; jets too wide for the window fall back to
/// the mean-value form log f0 + (f - f0)/f0 with remainder s^2 / (2 lo^2).
inline Jet log(const Jet& f, const LogConfig& cfg = default_log_config)
{
    Interval r = range(f);
    if (!(r.lo > 0)) throw log_domain_error("log argument range not strictly positive");

    // center * 2^-e2 in [0.75, 1.5)
    int e2 = 0;
    if (std::frexp(f.center(), &e2) < 0.75) --e2;
    Jet g = scale_pow2(f, -e2);
    int k = 0;
    constexpr int max_steps = 16;
    for (int step = 0; step < max_steps && range(g).hi > cfg.window_hi; ++step) {
        g = scale_div(g, cfg.reduction);
        ++k;
    }
    for (int step = 0; step < max_steps && range(g).lo < cfg.window_lo; ++step) {
        g = scale(g, cfg.reduction);
        --k;
    }
    Interval gr = range(g);
    if (gr.lo >= cfg.window_lo && gr.hi <= cfg.window_hi) {
        Jet p = detail::log1p_taylor(g - Jet(1.0), cfg.taylor_degree);
        if (e2 != 0) p = p + scale(const_enclosure(Constant::ln2), e2);
        if (k != 0) p = p + scale(const_enclosure(Constant::log_9_8), k);
        return p;
    }

    // mean-value fallback
    double f0 = f.center();
    Jet base = log(Jet(f0), cfg);
    std::array<double, 3> lin{};
    for (std::size_t i = 0; i < 3; ++i) lin[i] = f.coeff(static_cast<int>(i)) / f0;
    double s = f.radius();
    double ks = (std::abs(lin[0]) + std::abs(lin[1])) + std::abs(lin[2]);
    double et = (base.eps() + f.eps() / f0) + (s * s) / (2 * (r.lo * r.lo));
    double ef = MachineModel::eps / 2 * ks + 4 * MachineModel::tiny;
    double ea = jet_padding::log * MachineModel::eps;
    return make_checked(base.center(), lin, (1 + ea) * (et + ef), "log");
}

} // namespace momcert
