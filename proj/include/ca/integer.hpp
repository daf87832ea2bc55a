#pragma once

#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace ca {

/// Arbitrary-precision signed integer (expression templates off, so
/// arithmetic yields plain values).
using Integer = boost::multiprecision::number<boost::multiprecision::cpp_int_backend<>, boost::multiprecision::et_off>;

inline std::string to_string(const Integer& v) { return v.str(); }

/// Decimal digits only; Boost would read a leading 0 as octal.
inline Integer parse_decimal(std::string_view digits) {
    Integer v = 0;
    for (char c : digits) v = v * 10 + (c - '0');
    return v;
}

inline Integer gcd(const Integer& a, const Integer& b) { return boost::multiprecision::gcd(a, b); }

} // namespace ca
