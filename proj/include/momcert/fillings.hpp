#pragma once

// Dehn-filling slopes short enough that the filled manifold could still have
// volume at most the threshold, via the Futer-Kalfagianni-Purcell bound
//   Vol(M(s)) >= (1 - (2 pi / l_min)^2)^(3/2) Vol(M).

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <optional>
#include <ostream>
#include <cstdio>
#include <stdexcept>
#include <vector>

namespace momcert {

struct Vec2 {
    double x = 0;
    double y = 0;
};

class CuspLattice {
public:
    CuspLattice(Vec2 meridian, Vec2 longitude) : m_(meridian), l_(longitude)
    {
        if (!(std::isfinite(m_.x) && std::isfinite(m_.y) && std::isfinite(l_.x) && std::isfinite(l_.y)))
            throw std::invalid_argument("lattice vectors must be finite");
        double scale = std::hypot(m_.x, m_.y) * std::hypot(l_.x, l_.y);
        if (!(scale > 0) || std::abs(det()) <= 1e-12 * scale)
            throw std::invalid_argument("degenerate cusp lattice");
    }

    const Vec2& meridian() const { return m_; }
    const Vec2& longitude() const { return l_; }
    double det() const { return m_.x * l_.y - m_.y * l_.x; }

    /// |a m + b l|.
    double length(long a, long b) const
    {
        double x = static_cast<double>(a) * m_.x + static_cast<double>(b) * l_.x;
        double y = static_cast<double>(a) * m_.y + static_cast<double>(b) * l_.y;
        return std::hypot(x, y);
    }

private:
    Vec2 m_;
    Vec2 l_;
};

/// Meridian sqrt(2), longitude 2 sqrt(2), at right angles.
inline CuspLattice m129_lattice() { return {{std::sqrt(2.0), 0}, {0, 2 * std::sqrt(2.0)}}; }

struct Slope {
    long a = 1;
    long b = 0;
    double length = 0;

    bool operator==(const Slope& o) const { return a == o.a && b == o.b; }
};

/// Coprime, not (0,0), and a > 0 or (a, b) = (0, 1).
inline bool is_canonical_slope(long a, long b)
{
    if (std::gcd(a, b) != 1) return false;
    return a > 0 || (a == 0 && b == 1);
}

inline double fkp_volume_lb(double vol_m, double l_min)
{
    const double two_pi = 2 * std::numbers::pi;
    if (!(vol_m > 0)) throw std::domain_error("fkp_volume_lb: volume must be positive");
    if (!(l_min > two_pi)) throw std::domain_error("fkp_volume_lb: slope length must exceed 2 pi");
    double r = two_pi / l_min;
    return std::pow(1 - r * r, 1.5) * vol_m;
}

/// Largest slope length for which the bound can still be <= threshold;
/// nullopt when vol_m <= threshold, where every slope qualifies.
inline std::optional<double> slope_cutoff(double vol_m, double threshold = 2.848)
{
    if (!(threshold > 0)) throw std::domain_error("slope_cutoff: threshold must be positive");
    if (!(vol_m > threshold)) return std::nullopt;
    double t = std::cbrt(threshold / vol_m);
    return 2 * std::numbers::pi / std::sqrt(1 - t * t);
}

/// All canonical slopes with |a m + b l| <= cutoff, sorted by length, then a, then b.
inline std::vector<Slope> enumerate_slopes(const CuspLattice& lat, double cutoff)
{
    if (!(cutoff > 0) || !std::isfinite(cutoff)) throw std::invalid_argument("cutoff must be positive and finite");
    // |a| |det| = |(a m + b l) x l| <= cutoff |l|, and likewise for b.
    double ad = std::abs(lat.det());
    const Vec2& m = lat.meridian();
    const Vec2& l = lat.longitude();
    long amax = static_cast<long>(std::ceil(cutoff * std::hypot(l.x, l.y) / ad));
    long bmax = static_cast<long>(std::ceil(cutoff * std::hypot(m.x, m.y) / ad));
    std::vector<Slope> out;
    for (long a = 0; a <= amax; ++a)
        for (long b = -bmax; b <= bmax; ++b) {
            if (!is_canonical_slope(a, b)) continue;
            double len = lat.length(a, b);
            if (len <= cutoff) out.push_back({a, b, len});
        }
    std::sort(out.begin(), out.end(), [](const Slope& p, const Slope& q) {
        if (p.length != q.length) return p.length < q.length;
        if (p.a != q.a) return p.a < q.a;
        return p.b < q.b;
    });
    return out;
}

inline void write_slopes_csv(std::ostream& os, const std::vector<Slope>& slopes)
{
    os << "a,b,length\n";
    for (const Slope& s : slopes) {
        char buf[64];
        std::snprintf(buf, sizeof buf, "%.12g", s.length);
        os << s.a << ',' << s.b << ',' << buf << '\n';
    }
}

} // namespace momcert
