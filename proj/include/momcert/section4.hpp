#pragma once

// Regional checks behind the bounds that confine the parameter box.  The
// bounds involve cos^-1, so they run in the precise scalar kind on dense
// grids together with sampled monotonicity, and are reported as "validated"
// rather than "certified".
//
// For the two-dimensional regions the structure checked is: increasing in e3
// for every sampled e2, and decreasing in e2 along the lower e3 edge.  That
// pins the minimum to the corner.  Decrease in e2 does not hold across the
// whole 3rd_vol_112 region (it fails near e2 = 1.4751, e3 > 1.66, where the
// bound is above 3.6), so it is not asserted there.

#include "momcert/certifier.hpp"

#include <chrono>
#include <functional>
#include <string>
#include <vector>

namespace momcert {

struct Section4Options {
    /// Grid points per axis for the two-dimensional regions.
    int grid = 101;
    /// Points along one-dimensional curves and monotonicity rays.
    int curve_points = 1001;
    double threshold = 2.848;
};

namespace detail {

inline precise s4_lin(const precise& lo, const precise& hi, int i, int n)
{
    if (i == 0) return lo;
    if (i == n) return hi;
    return lo + (hi - lo) * precise(i) / precise(n);
}

inline Box s4_point_box(const precise& e2, const precise& e3)
{
    double x = static_cast<double>(e2), y = static_cast<double>(e3);
    return {{x, x}, {y, y}, {y, y}, 2};
}

class Section4Check {
public:
    Section4Check(std::string label, double threshold) : threshold_(lit<precise>(std::to_string(threshold).c_str()))
    {
        report_.label = std::move(label);
        report_.min_lower_bound = std::numeric_limits<double>::infinity();
        t0_ = std::chrono::steady_clock::now();
    }

    /// A value that must exceed the threshold.
    precise value(const precise& v, const precise& e2, const precise& e3)
    {
        ++report_.boxes_processed;
        report_.min_lower_bound = std::min(report_.min_lower_bound, static_cast<double>(v));
        if (!(v > threshold_)) fail(e2, e3);
        return v;
    }

    /// Samples along a ray on which f must be nondecreasing.
    void nondecreasing(const std::vector<precise>& vals, const std::vector<std::pair<precise, precise>>& at)
    {
        for (std::size_t i = 1; i < vals.size(); ++i) {
            ++report_.boxes_processed;
            if (vals[i] < vals[i - 1]) fail(at[i].first, at[i].second);
        }
    }

    CaseReport finish()
    {
        report_.status = failed_ ? Status::failed : Status::validated;
        report_.wall_time_ms =
            std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0_).count();
        return report_;
    }

private:
    void fail(const precise& e2, const precise& e3)
    {
        failed_ = true;
        if (report_.failures.size() < 32) report_.failures.push_back(s4_point_box(e2, e3));
    }

    precise threshold_;
    CaseReport report_;
    bool failed_ = false;
    std::chrono::steady_clock::time_point t0_;
};

using Fn2 = std::function<precise(const precise&, const precise&)>;

/// f sampled along e2 (fixed e3) must be nondecreasing when `increasing`,
/// else nonincreasing; likewise along e3 for fixed e2.
inline void s4_monotone_ray(Section4Check& chk, const Fn2& f, const precise& fixed, const precise& lo,
                            const precise& hi, int n, bool along_e2, bool increasing)
{
    std::vector<precise> vals;
    std::vector<std::pair<precise, precise>> at;
    for (int i = 0; i <= n; ++i) {
        precise x = s4_lin(lo, hi, i, n);
        precise e2 = along_e2 ? x : fixed, e3 = along_e2 ? fixed : x;
        precise v = f(e2, e3);
        vals.push_back(increasing ? v : precise(-v));
        at.emplace_back(e2, e3);
    }
    chk.nondecreasing(vals, at);
}

} // namespace detail

/// Run the five regional checks; each report is "validated" or "failed".
inline std::vector<CaseReport> certify_section4(const Section4Options& opt = {})
{
    using detail::s4_lin;
    const precise one(1);
    const precise e2_top = lit<precise>(e2_cap_decimal);  // 1.4751
    const precise e_top = lit<precise>(e_cap_decimal);    // 1.5152
    const precise e3_122 = lit<precise>("1.8135");
    const precise curve0 = lit<precise>("2.1491");
    auto curve = [&](const precise& e2) { return precise(curve0 - (e2 - one)); };
    const int g = opt.grid, n = opt.curve_points - 1;
    std::vector<CaseReport> out;

    // e2 > 1.4751 rules out the remaining configurations
    {
        detail::Section4Check chk("first_vol", opt.threshold);
        auto f = [](const precise& e2, const precise&) { return vol_lb_first(e2); };
        chk.value(vol_lb_first(e2_top), e2_top, e2_top);
        detail::s4_monotone_ray(chk, f, one, e2_top, precise(3), n, true, true);
        out.push_back(chk.finish());
    }
    // no (1,1,2)-triple: bound at the corner (1, 1.8135), increasing in both
    {
        detail::Section4Check chk("2nd_vol_122", opt.threshold);
        auto f = [](const precise& e2, const precise& e3) { return vol_lb_122_family(Vol122Variant::no112, e2, e3); };
        chk.value(f(one, e3_122), one, e3_122);
        detail::s4_monotone_ray(chk, f, e3_122, one, e2_top, n, true, true);
        for (int i = 0; i <= g; ++i)
            detail::s4_monotone_ray(chk, f, s4_lin(one, e2_top, i, g), e3_122, precise(3), g, false, true);
        out.push_back(chk.finish());
    }
    // (1,2,2)-triple region; minimum at (1.4751, 1.4751)
    {
        detail::Section4Check chk("3rd_vol_122", opt.threshold);
        auto f = [](const precise& e2, const precise& e3) { return vol_lb_122_family(Vol122Variant::one122, e2, e3); };
        for (int i = 0; i <= g; ++i) {
            precise e2 = s4_lin(one, e2_top, i, g);
            for (int j = 0; j <= g; ++j) {
                precise e3 = s4_lin(e2_top, e3_122, j, g);
                chk.value(f(e2, e3), e2, e3);
            }
            detail::s4_monotone_ray(chk, f, e2, e2_top, e3_122, g, false, true);
        }
        detail::s4_monotone_ray(chk, f, e2_top, one, e2_top, n, true, false);
        out.push_back(chk.finish());
    }
    // (1,1,2)-triple boundary curve e3 = 2.1491 - (e2 - 1), increasing above it
    {
        detail::Section4Check chk("2nd_vol_112_better", opt.threshold);
        auto f = [](const precise& e2, const precise& e3) { return vol_lb_122_family(Vol122Variant::one112, e2, e3); };
        for (int i = 0; i <= n; ++i) {
            precise e2 = s4_lin(one, e2_top, i, n);
            chk.value(f(e2, curve(e2)), e2, curve(e2));
        }
        for (int i = 0; i <= g; ++i) {
            precise e2 = s4_lin(one, e2_top, i, g);
            detail::s4_monotone_ray(chk, f, e2, curve(e2), curve(e2) + precise(0.5), g, false, true);
        }
        out.push_back(chk.finish());
    }
    // (1,1,2)-triple region below the curve; minimum at (1.4751, 1.5152)
    {
        detail::Section4Check chk("3rd_vol_112", opt.threshold);
        auto f = [](const precise& e2, const precise& e3) {
            return vol_lb_122_family(Vol122Variant::one112_refined, e2, e3);
        };
        for (int i = 0; i <= g; ++i) {
            precise e2 = s4_lin(one, e2_top, i, g);
            for (int j = 0; j <= g; ++j) {
                precise e3 = s4_lin(e_top, curve(e2), j, g);
                chk.value(f(e2, e3), e2, e3);
            }
            detail::s4_monotone_ray(chk, f, e2, e_top, curve(e2), g, false, true);
        }
        detail::s4_monotone_ray(chk, f, e_top, one, e2_top, n, true, false);
        out.push_back(chk.finish());
    }
    return out;
}

} // namespace momcert
