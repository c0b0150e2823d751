#pragma once

// Scalar kinds shared by the geometry and bound formulas.
//
// The same templated expression runs in plain binary64, in a 213-bit
// high-precision type (tests and oracles), and in rigorous jets.  Decimal
// constants such as 1.5152 must go through lit<T>() so that the jet kind
// encloses the real decimal rather than its nearest double.

#include "momcert/jet.hpp"

#include <boost/math/constants/constants.hpp>
#include <boost/multiprecision/cpp_bin_float.hpp>

#include <algorithm>
#include <cmath>
#include <string>
#include <type_traits>

namespace momcert {

using precise = boost::multiprecision::number<boost::multiprecision::cpp_bin_float<64>,
                                              boost::multiprecision::et_off>;

enum class ScalarKind { plain, precise, jet };

template <class T> inline constexpr bool is_jet_v = std::is_same_v<T, Jet>;

template <class T> concept Scalar = std::is_same_v<T, double> || std::is_same_v<T, precise> || is_jet_v<T>;

template <Scalar T> constexpr ScalarKind kind_of()
{
    if constexpr (std::is_same_v<T, double>) return ScalarKind::plain;
    else if constexpr (std::is_same_v<T, precise>) return ScalarKind::precise;
    else return ScalarKind::jet;
}

/// Real decimal constant in kind T.
template <Scalar T> T lit(const char* decimal)
{
    if constexpr (std::is_same_v<T, double>) return std::strtod(decimal, nullptr);
    else if constexpr (std::is_same_v<T, precise>) return precise(decimal);
    else return enclosing(std::strtod(decimal, nullptr));
}

template <Scalar T> T pi()
{
    if constexpr (std::is_same_v<T, double>) return 3.141592653589793;
    else if constexpr (std::is_same_v<T, precise>) return boost::math::constants::pi<precise>();
    else return const_enclosure(Constant::pi);
}

template <Scalar T> T sqrt3()
{
    if constexpr (std::is_same_v<T, double>) return std::sqrt(3.0);
    else if constexpr (std::is_same_v<T, precise>) return sqrt(precise(3));
    else return const_enclosure(Constant::sqrt3);
}

template <Scalar T> T log_of(const T& x)
{
    using std::log;
    if constexpr (is_jet_v<T>) return momcert::log(x);
    else return log(x);
}

template <Scalar T> T min_of(const T& a, const T& b)
{
    if constexpr (is_jet_v<T>) return momcert::min(a, b);
    else return a < b ? a : b;
}

/// Lower end of a value: itself for point kinds, the range bound for jets.
template <Scalar T> double lower_of(const T& x)
{
    if constexpr (is_jet_v<T>) return range(x).lo;
    else return static_cast<double>(x);
}

template <Scalar T> double upper_of(const T& x)
{
    if constexpr (is_jet_v<T>) return range(x).hi;
    else return static_cast<double>(x);
}

inline const char* to_string(ScalarKind k)
{
    switch (k) {
        case ScalarKind::plain: return "plain";
        case ScalarKind::precise: return "precise";
        case ScalarKind::jet: return "jet";
    }
    return "?";
}

} // namespace momcert
