#pragma once

// Cusp-area and volume lower bounds as functions of the Euclidean spectrum
// (e2, e3, e4), with e1 = 1.
//
// vol_lb_first and vol_lb_122_family confine the parameter box itself; f1
// and f2 are the two bounds certified over that box for each maximal
// collection of triples.

#include "momcert/geometry.hpp"

#include <algorithm>
#include <array>
#include <stdexcept>
#include <string>
#include <vector>

namespace momcert {

/// Upper end of the e2 range and the e3/e4 cap.
inline constexpr const char* e2_cap_decimal = "1.4751";
inline constexpr const char* e_cap_decimal = "1.5152";
inline constexpr double e2_cap = 1.4751;
inline constexpr double e_cap = 1.5152;

template <Scalar T> struct SpectrumPoint {
    T e2{1.0};
    T e3{1.0};
    T e4{1.0};

    /// e_i for i in {1, 2, 3, 4}.
    T e(int i) const
    {
        switch (i) {
            case 1: return T(1.0);
            case 2: return e2;
            case 3: return e3;
            case 4: return e4;
        }
        throw std::out_of_range("spectrum index must be 1..4");
    }
};

/// Unordered index triple (p, q, r), stored ascending; (n, n, n) is rejected.
class TripleType {
public:
    TripleType(int p, int q, int r) : idx_{p, q, r}
    {
        std::sort(idx_.begin(), idx_.end());
        if (idx_[0] < 1 || idx_[2] > 4) throw std::invalid_argument("triple index out of 1..4");
        if (idx_[0] == idx_[2]) throw std::invalid_argument("(n,n,n)-triples do not exist");
    }

    int p() const { return idx_[0]; }
    int q() const { return idx_[1]; }
    int r() const { return idx_[2]; }
    const std::array<int, 3>& indices() const { return idx_; }

    bool distinct() const { return idx_[0] != idx_[1] && idx_[1] != idx_[2]; }

    auto operator<=>(const TripleType&) const = default;

    std::string str() const
    {
        return "(" + std::to_string(idx_[0]) + "," + std::to_string(idx_[1]) + "," + std::to_string(idx_[2]) + ")";
    }

private:
    std::array<int, 3> idx_;
};

struct CaseSpec {
    int id = 0;
    std::vector<TripleType> triples;

    std::string str() const
    {
        std::string s = "{";
        for (std::size_t i = 0; i < triples.size(); ++i) s += (i ? "," : "") + triples[i].str();
        return s + "}";
    }
};

/// min(e4, 1.5152).
template <Scalar T> T e_max(const SpectrumPoint<T>& pt) { return min_of(pt.e4, lit<T>(e_cap_decimal)); }

/// Radius e_max (1/e_i - 1/2) of the circles around O(i) orthocenters.
template <Scalar T> T circle_radius(const T& emax, const T& e_i) { return emax * (T(1) / e_i - T(0.5)); }

/// Area of the six disjoint circles: sum_{i=1..3} 2 pi (e_max (1/e_i - 1/2))^2.
template <Scalar T> T a0(const SpectrumPoint<T>& pt, const T& emax)
{
    T sum = T(0);
    for (int i = 1; i <= 3; ++i) {
        T r = circle_radius(emax, pt.e(i));
        sum = sum + r * r;
    }
    return T(2) * pi<T>() * sum;
}

template <Scalar T> T a0(const SpectrumPoint<T>& pt) { return a0(pt, e_max(pt)); }

/// Overlap bound l_{i,j,k} between the circles of O(i) and O(j) when their
/// horoballs sit at orthodistance o(k); the center distance is clamped to the
/// tangency distance so disjoint circles contribute zero.
template <Scalar T> T l_term(int i, int j, int k, const SpectrumPoint<T>& pt, const T& emax)
{
    if (i < 1 || i > 3 || j < 1 || j > 3 || k < 1 || k > 3) throw std::out_of_range("l_term indices must be in 1..3");
    T ei = pt.e(i), ej = pt.e(j), ek = pt.e(k);
    T a = circle_radius(emax, ei);
    T b = circle_radius(emax, ej);
    T c = min_of(ek / (ei * ej), emax * (T(1) / ei + T(1) / ej - T(1)));
    if (i == j) return overlap_approx_equal(a, c);
    return overlap_approx(a, b, c);
}

template <Scalar T> T l_term(int i, int j, int k, const SpectrumPoint<T>& pt)
{
    return l_term(i, j, k, pt, e_max(pt));
}

/// Sum over the case's triples of the three cyclic overlap terms.
template <Scalar T> T overlap_sum(const CaseSpec& cs, const SpectrumPoint<T>& pt, const T& emax)
{
    T sum = T(0);
    for (const TripleType& t : cs.triples) {
        int i = t.p(), j = t.q(), k = t.r();
        sum = sum + (l_term(i, j, k, pt, emax) + l_term(j, k, i, pt, emax) + l_term(k, i, j, pt, emax));
    }
    return sum;
}

/// Volume lower bound from the O(1..3) circles with an explicit e_max:
/// (e_max^2/2)(A0 - sum l) - pi(-3 + e_max^2 (1 + e2^-2 + e3^-2) + log(e2^2 e3^2 / e_max^6)).
template <Scalar T> T f1_with_emax(const CaseSpec& cs, const SpectrumPoint<T>& pt, const T& emax)
{
    T em2 = emax * emax;
    T area = a0(pt, emax) - overlap_sum(cs, pt, emax);
    T inv2 = T(1) / (pt.e2 * pt.e2);
    T inv3 = T(1) / (pt.e3 * pt.e3);
    // log(e2^2 e3^2 / e_max^6) split into single logs
    T logs = T(2) * log_of(pt.e2) + T(2) * log_of(pt.e3) - T(6) * log_of(emax);
    T cut = T(-3) + em2 * (T(1) + inv2 + inv3) + logs;
    return em2 * T(0.5) * area - pi<T>() * cut;
}

template <Scalar T> T f1(const CaseSpec& cs, const SpectrumPoint<T>& pt) { return f1_with_emax(cs, pt, e_max(pt)); }

/// f1 written through lessvol: Area e_max^2/2 - 2 sum_i lessvol(e_i, e_max).
template <Scalar T> T f1_via_lessvol(const CaseSpec& cs, const SpectrumPoint<T>& pt)
{
    T emax = e_max(pt);
    T area = a0(pt, emax) - overlap_sum(cs, pt, emax);
    T cut = lessvol(T(1), emax) + lessvol(pt.e2, emax) + lessvol(pt.e3, emax);
    return area * emax * emax * T(0.5) - T(2) * cut;
}

/// e4 <= 1.5152 and e2 + 1 >= e4^2 at a point.
template <Scalar T> requires(!is_jet_v<T>) bool f2_gate(const SpectrumPoint<T>& pt)
{
    return pt.e4 <= lit<T>(e_cap_decimal) && pt.e2 + T(1) >= pt.e4 * pt.e4;
}

/// Radius 1/(e4 e2) - e4/e2 + e4/2 of the circles around O(4) orthocenters.
template <Scalar T> T o4_radius(const SpectrumPoint<T>& pt)
{
    return T(1) / (pt.e4 * pt.e2) - pt.e4 / pt.e2 + pt.e4 * T(0.5);
}

/// Extra volume from the O(4) circles, valid under f2_gate:
/// (e4^2/2)(2 pi b^2 - 2 overlap_approx(e4/2, b, 1/e4)).
template <Scalar T> T f2_bonus(const SpectrumPoint<T>& pt)
{
    T b = o4_radius(pt);
    T a = pt.e4 * T(0.5);
    T c = T(1) / pt.e4;
    T area = T(2) * pi<T>() * b * b - T(2) * overlap_approx(a, b, c);
    return pt.e4 * pt.e4 * T(0.5) * area;
}

template <Scalar T> T f2(const CaseSpec& cs, const SpectrumPoint<T>& pt) { return f1(cs, pt) + f2_bonus(pt); }

/// max(f1, f2) at a point, with f2 only where the gate holds.
template <Scalar T> requires(!is_jet_v<T>) T best_bound(const CaseSpec& cs, const SpectrumPoint<T>& pt)
{
    T v1 = f1(cs, pt);
    if (!f2_gate(pt)) return v1;
    T v2 = v1 + f2_bonus(pt);
    return v2 > v1 ? v2 : v1;
}

// ---------------------------------------------------------------------------
// Bounds that confine the parameter box (point kinds; they use overlap_area)

/// Hexagonal-packing bound from the O(1) circles: e2^4 sqrt(3)/2 - pi(e2^2 - 1 - 2 log e2).
template <Scalar T> T vol_lb_first(const T& e2)
{
    return e2 * e2 * e2 * e2 * sqrt3<T>() * T(0.5) - pi<T>() * (e2 * e2 - T(1) - T(2) * log_of(e2));
}

enum class Vol122Variant { no112, one122, one112, one112_refined };

inline const char* to_string(Vol122Variant v)
{
    switch (v) {
        case Vol122Variant::no112: return "2nd_vol_122";
        case Vol122Variant::one122: return "3rd_vol_122";
        case Vol122Variant::one112: return "2nd_vol_112";
        case Vol122Variant::one112_refined: return "3rd_vol_112";
    }
    return "?";
}

namespace detail {

/// Cut-off for a cusp inflated to height 1/e3 past the O(1) and O(2) faces.
template <Scalar T> T cutoff_e3(const T& e2, const T& e3)
{
    using std::log;
    return pi<T>() * (e3 * e3 - T(1) - T(2) * log(e3) + e3 * e3 / (e2 * e2) - T(1) - T(2) * log(e3 / e2));
}

} // namespace detail

template <Scalar T> requires(!is_jet_v<T>) T vol_lb_122_family(Vol122Variant variant, const T& e2, const T& e3)
{
    using std::log;
    T half = T(0.5);
    T r_new = e3 / e2 - e3 * half; // circles around O(2) orthocenters
    T r_old = e3 * half;           // circles around O(1) orthocenters
    T two_pi = T(2) * pi<T>();
    switch (variant) {
        case Vol122Variant::no112:
            return e2 * e2 * e3 * e3 * sqrt3<T>() * half - pi<T>() * (e2 * e2 - T(1) - T(2) * log(e2));
        case Vol122Variant::one122: {
            T area = two_pi * r_old * r_old + two_pi * r_new * r_new - T(2) * overlap_area(r_new, r_old, T(1))
                     - overlap_area(r_new, r_new, T(1) / (e2 * e2));
            return area * e3 * e3 * half - detail::cutoff_e3(e2, e3);
        }
        case Vol122Variant::one112: {
            T area = two_pi * r_old * r_old - overlap_area(r_old, r_old, e2);
            return area * e2 * e2 * half - pi<T>() * (e2 * e2 - T(1) - T(2) * log(e2));
        }
        case Vol122Variant::one112_refined: {
            T area = two_pi * r_old * r_old + two_pi * r_new * r_new - overlap_area(r_old, r_old, e2)
                     - T(2) * overlap_area(r_new, r_old, T(1) / e2);
            return area * e3 * e3 * half - detail::cutoff_e3(e2, e3);
        }
    }
    throw std::invalid_argument("unknown variant");
}

} // namespace momcert
