#pragma once

/**
 * @file numeric.hpp
 * @brief Exact scalar types shared by every module.
 *
 * Flag numbers grow quickly under barycentric subdivision, so all counts are
 * arbitrary precision. cpp_int keeps small values inline and only allocates
 * once a value leaves the machine-word range.
 */

#include <cstdint>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace cdindex {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline bool is_integral(const Rational& r)
{
    return boost::multiprecision::denominator(r) == 1;
}

inline Integer to_integer(const Rational& r)
{
    return boost::multiprecision::numerator(r) / boost::multiprecision::denominator(r);
}

inline std::string to_string(const Integer& v) { return v.str(); }

inline std::string to_string(const Rational& v)
{
    if (is_integral(v)) return boost::multiprecision::numerator(v).str();
    return boost::multiprecision::numerator(v).str() + "/" + boost::multiprecision::denominator(v).str();
}

// (-1)^k for k >= 0 or k < 0.
constexpr int sign_power(long k) { return (k % 2 == 0) ? 1 : -1; }

} // namespace cdindex
