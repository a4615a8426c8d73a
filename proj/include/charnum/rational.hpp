#pragma once

#include <boost/multiprecision/eigen.hpp>
#include <boost/multiprecision/gmp.hpp>

#include <cstdint>
#include <string>
#include <string_view>

namespace charnum {

/// Exact rational scalar used for every count and every Chow-ring coefficient.
/// Expression templates are disabled so the type composes with Eigen.
using Rational = boost::multiprecision::number<boost::multiprecision::gmp_rational,
                                               boost::multiprecision::et_off>;
using Integer = boost::multiprecision::number<boost::multiprecision::gmp_int,
                                              boost::multiprecision::et_off>;

/// Renders `p` for integers and `p/q` otherwise.
std::string to_string(const Rational& value);

/// Parses `p`, `-p` or `p/q`. Throws std::invalid_argument on malformed input
/// or a zero denominator.
Rational parse_rational(std::string_view text);

inline bool is_integer(const Rational& value) {
  return boost::multiprecision::denominator(value) == 1;
}

Integer binomial(int n, int k);

}  // namespace charnum
