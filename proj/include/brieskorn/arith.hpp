#pragma once

// Exact arithmetic carriers and checked machine-integer helpers.

#include <cstdint>
#include <span>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace brieskorn {

using Integer = boost::multiprecision::cpp_int;
/// Always kept in lowest terms with a positive denominator.
using Rational = boost::multiprecision::cpp_rational;

Rational make_rational(const Integer& num, const Integer& den);

/// "p/q", or "p" when the denominator is one.
std::string to_string(const Rational& value);
std::string to_string(const Integer& value);

/// Six significant digits, for human scanning only.
std::string approx_string(const Rational& value);

Rational parse_rational(const std::string& text);

std::int64_t checked_mul(std::int64_t a, std::int64_t b);
std::int64_t checked_add(std::int64_t a, std::int64_t b);
std::int64_t lcm_checked(std::int64_t a, std::int64_t b);
std::int64_t lcm_of(std::span<const std::int64_t> values);

std::int64_t to_int64(const Integer& value);

/// Floor division for a positive divisor.
constexpr std::int64_t floor_div(std::int64_t a, std::int64_t b) {
  std::int64_t q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

constexpr std::int64_t ceil_div(std::int64_t a, std::int64_t b) { return -floor_div(-a, b); }

}  // namespace brieskorn
