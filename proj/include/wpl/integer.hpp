#pragma once

/**
 * @file integer.hpp
 * @brief Exact integer and rational scalars shared by every module.
 *
 * All arithmetic in the library is exact. Integers are unbounded
 * (Boost.Multiprecision cpp_int), rationals are normalized fractions of them.
 */

#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace wpl {

using Integer = boost::multiprecision::number<boost::multiprecision::cpp_int_backend<>, boost::multiprecision::et_off>;
using Rational = boost::multiprecision::number<boost::multiprecision::rational_adaptor<
                                                  boost::multiprecision::cpp_int_backend<>>,
                                              boost::multiprecision::et_off>;

/// Floor division for a positive divisor (cpp_int truncates toward zero).
inline Integer floor_div(const Integer& a, const Integer& b) {
    Integer q = a / b;
    if ((a % b) != 0 && a < 0) --q;
    return q;
}

/// Residue in [0, b) for b > 0.
inline Integer floor_mod(const Integer& a, const Integer& b) {
    Integer r = a % b;
    if (r < 0) r += b;
    return r;
}

/// Number of monomials of total degree n in three variables, C(n+2, 2); zero for n < 0.
inline Integer monomials_of_total_degree(const Integer& n) {
    if (n < 0) return 0;
    return (n + 2) * (n + 1) / 2;
}

inline std::int64_t to_int64(const Integer& v) {
    if (v > std::numeric_limits<std::int64_t>::max() || v < std::numeric_limits<std::int64_t>::min())
        throw std::overflow_error("integer " + v.str() + " does not fit in 64 bits");
    return v.convert_to<std::int64_t>();
}

inline std::string to_string(const Rational& r) {
    using boost::multiprecision::denominator;
    using boost::multiprecision::numerator;
    if (denominator(r) == 1) return numerator(r).str();
    return numerator(r).str() + "/" + denominator(r).str();
}

} // namespace wpl
