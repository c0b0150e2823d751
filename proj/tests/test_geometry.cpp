#include "oracle.hpp"

#include "momcert/geometry.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <random>

using namespace momcert;

namespace {

constexpr double PI = std::numbers::pi;

/// Simpson's rule with n (even) panels.
template <class F> double simpson(F f, double lo, double hi, int n)
{
    double h = (hi - lo) / n, s = f(lo) + f(hi);
    for (int i = 1; i < n; ++i) s += (i % 2 ? 4 : 2) * f(lo + i * h);
    return s * h / 3;
}

/// Hyperbolic volume of {z >= 1/b} inside the hemisphere of radius 1/a,
/// integrated slice by slice: pi (R^2 - z^2) / z^3 dz.
double lessvol_quadrature(double a, double b)
{
    double R = 1 / a, h0 = 1 / b;
    if (R <= h0) return 0;
    return simpson([R](double z) { return PI * (R * R - z * z) / (z * z * z); }, h0, R, 20000);
}

/// Lens area as the integral of the vertical chord common to both disks.
double lens_quadrature(double a, double b, double c)
{
    double lo = std::max(-a, c - b), hi = std::min(a, c + b);
    if (hi <= lo) return 0;
    auto chord = [&](double x) {
        double ya = a * a - x * x, yb = b * b - (x - c) * (x - c);
        return 2 * std::sqrt(std::max(0.0, std::min(ya, yb)));
    };
    // split at the crossing of the two circles, where the chord has a kink
    double xk = (a * a - b * b + c * c) / (2 * c);
    if (xk > lo && xk < hi) return simpson(chord, lo, xk, 200000) + simpson(chord, xk, hi, 200000);
    return simpson(chord, lo, hi, 400000);
}

struct Valid {
    double a, b, c;
};

/// Random (a, b, c) with |a - b| <= c <= a + b.
Valid random_valid(std::mt19937_64& rng)
{
    std::uniform_real_distribution<double> r(0.05, 2.0), t(0, 1);
    double a = r(rng), b = r(rng);
    double lo = std::abs(a - b), hi = a + b;
    return {a, b, lo + (hi - lo) * t(rng)};
}

} // namespace

TEST(Lessvol, EqualArgumentsGiveZero)
{
    for (double b : {0.5, 1.0, 1.5152, 3.0}) EXPECT_NEAR(lessvol(b, b), 0.0, 1e-15);
}

TEST(Lessvol, MatchesVolumeIntegral)
{
    EXPECT_NEAR(lessvol(1.0, 2.0), PI * (2 - 0.5 + std::log(0.5)), 1e-14);
    EXPECT_NEAR(lessvol(1.0, 2.0), 2.53481, 1e-5);
    EXPECT_NEAR(lessvol(1.0, 2.0), lessvol_quadrature(1.0, 2.0), 1e-9);
    std::mt19937_64 rng(1);
    std::uniform_real_distribution<double> u(0.5, 2.0);
    for (int i = 0; i < 50; ++i) {
        double a = u(rng), b = a * (1 + u(rng));
        EXPECT_NEAR(lessvol(a, b), lessvol_quadrature(a, b), 1e-7 * (1 + lessvol(a, b)));
    }
}

TEST(Lessvol, DecreasingInA)
{
    const double b = 2.0;
    for (int i = 1; i < 200; ++i) {
        double a0 = b * i / 200.0, a1 = b * (i + 1) / 200.0;
        EXPECT_LT(lessvol(a1, b), lessvol(a0, b));
    }
}

TEST(Lessvol, RejectsBadArguments)
{
    EXPECT_THROW(lessvol(0.0, 1.0), geometry_domain_error);
    EXPECT_THROW(lessvol(1.0, -1.0), geometry_domain_error);
    EXPECT_THROW(lessvol(2.0, 1.0), geometry_domain_error);
}

TEST(LensFunctions, EndpointIdentities)
{
    EXPECT_NEAR(lens_f(1.0), 0, 1e-15);
    EXPECT_NEAR(lens_g(1.0), 0, 1e-15);
    EXPECT_NEAR(lens_f(0.0), PI / 2, 1e-15);
    EXPECT_NEAR(lens_g(0.0), PI / 2, 1e-15);
    EXPECT_NEAR(lens_f(-1.0), PI, 1e-15);
    EXPECT_NEAR(lens_g(-1.0), PI, 1e-15);
}

TEST(LensFunctions, GMajorizesFOnUnitInterval)
{
    for (int i = 0; i <= 100000; ++i) {
        double x = i / 100000.0;
        EXPECT_GE(lens_g(x) - lens_f(x), -1e-15) << x;
    }
}

TEST(LensFunctions, GapHasOneInteriorMaximum)
{
    // h = g - f rises then falls on a coarse grid (h is O(x^3) near 0, so
    // start past the rounding noise)
    int turns = 0;
    double prev = lens_g(0.05) - lens_f(0.05), prev_d = 1;
    for (int i = 51; i <= 1000; ++i) {
        double x = i / 1000.0, h = lens_g(x) - lens_f(x), d = h - prev;
        if (d < 0 && prev_d >= 0) ++turns;
        prev = h;
        prev_d = d;
    }
    EXPECT_EQ(turns, 1);
    // the maximum is the root of h'(x) = 5 c5 x^4 + x^2 - 2 + 2 sqrt(1 - x^2)
    const double c5 = 5.0 / 3.0 - PI / 2;
    auto dh = [c5](double x) { return 5 * c5 * std::pow(x, 4) + x * x - 2 + 2 * std::sqrt(1 - x * x); };
    double lo = 0.5, hi = 0.99;
    for (int i = 0; i < 100; ++i) (dh(0.5 * (lo + hi)) > 0 ? lo : hi) = 0.5 * (lo + hi);
    double best_x = 0, best_h = -1;
    for (int i = 0; i <= 100000; ++i) {
        double x = i / 100000.0, h = lens_g(x) - lens_f(x);
        if (h > best_h) {
            best_h = h;
            best_x = x;
        }
    }
    EXPECT_NEAR(best_x, lo, 1e-3);
    EXPECT_NEAR(lo, 0.8959, 1e-4);
}

TEST(OverlapArea, TangentDisksHaveNoOverlap)
{
    for (auto [a, b] : {std::pair{1.0, 1.0}, {0.3, 0.7}, {2.0, 0.5}}) EXPECT_NEAR(overlap_area(a, b, a + b), 0, 1e-12);
}

TEST(OverlapArea, UnitDisksAtUnitDistance)
{
    EXPECT_NEAR(overlap_area(1.0, 1.0, 1.0), 2 * PI / 3 - std::sqrt(3.0) / 2, 1e-14);
    EXPECT_NEAR(overlap_area(1.0, 1.0, 1.0), 1.22837, 1e-5);
}

TEST(OverlapArea, SymmetricAndMatchesQuadrature)
{
    std::mt19937_64 rng(2);
    for (int i = 0; i < 200; ++i) {
        auto [a, b, c] = random_valid(rng);
        EXPECT_NEAR(overlap_area(a, b, c), overlap_area(b, a, c), 1e-12);
        if (i < 40) {
            EXPECT_NEAR(overlap_area(a, b, c), lens_quadrature(a, b, c), 1e-6) << a << ' ' << b << ' ' << c;
        }
    }
}

TEST(OverlapArea, NonincreasingInDistance)
{
    std::mt19937_64 rng(3);
    std::uniform_real_distribution<double> r(0.1, 2.0);
    for (int k = 0; k < 50; ++k) {
        double a = r(rng), b = r(rng), lo = std::abs(a - b), hi = a + b;
        double prev = overlap_area(a, b, lo);
        for (int i = 1; i <= 200; ++i) {
            double cur = overlap_area(a, b, lo + (hi - lo) * i / 200.0);
            EXPECT_LE(cur, prev + 1e-12);
            prev = cur;
        }
    }
}

TEST(OverlapArea, NestedLimitIsSmallDisk)
{
    EXPECT_NEAR(overlap_area(2.0, 1.0, 1.0), PI, 1e-12);
}

TEST(OverlapArea, RejectsOutOfDomain)
{
    EXPECT_THROW(overlap_area(1.0, 1.0, 3.0), geometry_domain_error);
    EXPECT_THROW(overlap_area(2.0, 0.5, 0.5), geometry_domain_error);
    EXPECT_THROW(overlap_area(-1.0, 1.0, 1.0), geometry_domain_error);
}

TEST(OverlapApprox, Examples)
{
    for (auto [a, b] : {std::pair{1.0, 1.0}, {0.3, 0.7}, {2.0, 0.5}}) EXPECT_NEAR(overlap_approx(a, b, a + b), 0, 1e-12);
    EXPECT_NEAR(overlap_approx(1.0, 1.0, 0.0), PI, 1e-15);
    EXPECT_THROW(overlap_approx(0.0, 1.0, 1.0), geometry_domain_error);
}

TEST(OverlapApprox, MajorizesOverlapArea)
{
    std::mt19937_64 rng(4);
    for (int i = 0; i < 20000; ++i) {
        auto [a, b, c] = random_valid(rng);
        EXPECT_GE(overlap_approx(a, b, c), overlap_area(a, b, c) - 1e-12) << a << ' ' << b << ' ' << c;
    }
}

TEST(OverlapApprox, PreciseKindAgreesWithPlain)
{
    std::mt19937_64 rng(5);
    for (int i = 0; i < 200; ++i) {
        auto [a, b, c] = random_valid(rng);
        precise p = overlap_approx(precise(a), precise(b), precise(c));
        EXPECT_NEAR(static_cast<double>(p), overlap_approx(a, b, c), 1e-12);
        precise q = overlap_area(precise(a), precise(b), precise(c));
        EXPECT_NEAR(static_cast<double>(q), overlap_area(a, b, c), 1e-9);
    }
}

TEST(MonteCarlo, OracleExamples)
{
    auto m = mc_overlap_oracle(1, 1, 1, 1'000'000);
    EXPECT_NEAR(m.area, 1.228, 0.003 + 4 * m.std_error);
    auto t = mc_overlap_oracle(1, 1, 2, 10'000);
    EXPECT_LE(t.area, 1e-3);
    auto n = mc_overlap_oracle(2, 1, 1, 1'000'000);
    EXPECT_NEAR(n.area, PI, 4 * n.std_error + 1e-9);
}

TEST(MonteCarlo, AgreesWithExactAndApproxWithinFourSigma)
{
    std::mt19937_64 rng(6);
    int approx_ok = 0;
    for (int i = 0; i < 100; ++i) {
        auto [a, b, c] = random_valid(rng);
        auto m = mc_overlap_oracle(a, b, c, 200'000, 1000 + i);
        double tol = 4 * m.std_error + 1e-12;
        EXPECT_NEAR(overlap_area(a, b, c), m.area, tol) << a << ' ' << b << ' ' << c;
        // the majorant sits above the estimate, up to sampling noise
        if (overlap_approx(a, b, c) >= m.area - tol) ++approx_ok;
    }
    EXPECT_EQ(approx_ok, 100);
}

TEST(EuclideanGap, Examples)
{
    EXPECT_DOUBLE_EQ(euclidean_gap(1.0, 1.0, 1.0), 1.0);
    EXPECT_NEAR(euclidean_gap(1.2, 1.2, 1.4), 0.97222, 1e-5);
    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> u(1, 3);
    for (int i = 0; i < 1000; ++i) {
        double m = u(rng), n = u(rng), r = u(rng), t = u(rng);
        EXPECT_NEAR(euclidean_gap(t * m, n, t * r), euclidean_gap(m, n, r), 1e-14);
    }
    EXPECT_THROW(euclidean_gap(0.0, 1.0, 1.0), geometry_domain_error);
}

TEST(CoshLineDistance, ReferenceValues)
{
    EXPECT_NEAR(std::acosh(cosh_line_distance(1.0, 1.0, 1.0, 1.0, 1.0, 1.0)), 1.3169, 1e-4);
    const double e = 1.5152;
    // 1/e + 1/e^2 = (e*1 + 1*1)/(e*e)
    EXPECT_NEAR(std::acosh(cosh_line_distance(e, 1.0, 1.0, 1.0, e, e)), 0.4337, 5e-5);
    EXPECT_NEAR(std::acosh(cosh_line_distance(1.0, 1.0, 1.0, 1.0, 1.0, e)), 0.7800, 5e-5);
    EXPECT_THROW(cosh_line_distance(1.0, 1.0, 1.0, 1.0, 1.0, -1.0), geometry_domain_error);
}

TEST(JetKind, ContainsPreciseEvaluationOverTheBox)
{
    std::mt19937_64 rng(8);
    std::uniform_real_distribution<double> u(0, 1);
    for (int i = 0; i < 2000; ++i) {
        double a = 0.3 + 0.7 * u(rng), b = 0.3 + 0.7 * u(rng);
        double lo = std::abs(a - b) + 0.05, hi = a + b;
        double c = lo + (hi - lo) * u(rng);
        double w = 1e-3 * u(rng);
        Jet A = jet_from_interval(1, a, a + w), B = jet_from_interval(2, b, b + w), C = jet_from_interval(3, c, c + w);
        Jet L = lessvol(A, B + Jet(1.0));
        Jet O = overlap_approx(A, B, C);
        Jet G = euclidean_gap(A, B, C);
        Jet H = cosh_line_distance(A, B, C, A, B, C);
        for (int k = 0; k < 4; ++k) {
            std::array<double, 3> x{k == 0 ? 0 : 2 * u(rng) - 1, k == 0 ? 0 : 2 * u(rng) - 1, k == 0 ? 0 : 2 * u(rng) - 1};
            precise pa = precise(A.center()) + precise(A.coeff(0)) * precise(x[0]);
            precise pb = precise(B.center()) + precise(B.coeff(1)) * precise(x[1]);
            precise pc = precise(C.center()) + precise(C.coeff(2)) * precise(x[2]);
            auto in = [&](const Jet& j, const precise& v) {
                return oracle::member(j, x, oracle::big(v));
            };
            EXPECT_TRUE(in(L, lessvol(pa, precise(pb + 1))));
            EXPECT_TRUE(in(O, overlap_approx(pa, pb, pc)));
            EXPECT_TRUE(in(G, euclidean_gap(pa, pb, pc)));
            EXPECT_TRUE(in(H, cosh_line_distance(pa, pb, pc, pa, pb, pc)));
        }
    }
}
