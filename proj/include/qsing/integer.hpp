#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <optional>
#include <string>
#include <string_view>

namespace qsing {

// Expression templates off: values are always concrete numbers.
using Integer = boost::multiprecision::number<boost::multiprecision::cpp_int_backend<>,
                                              boost::multiprecision::et_off>;
using Rational = boost::multiprecision::number<boost::multiprecision::cpp_rational_backend,
                                               boost::multiprecision::et_off>;

std::string to_string(const Integer& value);
std::string to_string(const Rational& value);

/// Strict decimal parse: optional leading '-', no leading zeros, no spaces.
/// Returns nullopt on anything that would not format back to the same text.
std::optional<Integer> parse_canonical_integer(std::string_view text);

Integer gcd(const Integer& a, const Integer& b);

/// Least nonnegative residue of `value` modulo a positive `modulus`.
Integer mod_floor(const Integer& value, const Integer& modulus);

/// ceil(a / b) for b > 0.
Integer ceil_div(const Integer& a, const Integer& b);

}  // namespace qsing
