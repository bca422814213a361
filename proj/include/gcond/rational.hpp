#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <optional>
#include <string>
#include <string_view>

namespace gcond {

// Exact arithmetic everywhere: edge weights, matching counts and all
// identity checks are arbitrary-precision rationals. cpp_rational keeps
// the canonical form (reduced fraction, positive denominator) on its own.
using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

// Renders "p/q", or just "p" when the denominator is 1.
std::string to_string(const Rational& r);

// Accepts an optionally signed integer or "p/q" with nonzero q.
std::optional<Rational> parse_rational(std::string_view text);

}  // namespace gcond
