#pragma once

#include <optional>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace foxh {

using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

/// Parses "p/q", an integer, or a finite decimal ("0.25", "-1.5e-1") exactly.
/// Throws Error{ParseError} on malformed input or a zero denominator.
Rational parse_rational(std::string_view text);

std::string to_string(const Rational& r);
double to_double(const Rational& r);
bool is_integer(const Rational& r);
BigInt floor_of(const Rational& r);

/// Recovers a small-denominator rational (denominator <= max_den) that rounds to
/// exactly `x`, e.g. 0.1 -> 1/10, 2.0/3.0 -> 2/3. Returns nullopt when none exists.
std::optional<Rational> recover_rational(double x, long long max_den = 1000000);

}  // namespace foxh
