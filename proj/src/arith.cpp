#include "brieskorn/arith.hpp"

#include <iomanip>
#include <numeric>
#include <sstream>

#include <boost/multiprecision/cpp_bin_float.hpp>

#include "brieskorn/errors.hpp"

namespace brieskorn {

namespace mp = boost::multiprecision;

Rational make_rational(const Integer& num, const Integer& den) {
  ensure(den != 0, ErrorKind::InternalInconsistency, "zero denominator");
  return Rational(num, den);
}

std::string to_string(const Integer& value) { return value.str(); }

std::string to_string(const Rational& value) {
  const Integer den = mp::denominator(value);
  if (den == 1) return mp::numerator(value).str();
  return mp::numerator(value).str() + "/" + den.str();
}

std::string approx_string(const Rational& value) {
  using Float = mp::cpp_bin_float_50;
  const Float v = Float(mp::numerator(value)) / Float(mp::denominator(value));
  std::ostringstream out;
  out << std::setprecision(6) << v.convert_to<double>();
  return out.str();
}

Rational parse_rational(const std::string& text) {
  const auto slash = text.find('/');
  try {
    if (slash == std::string::npos) return Rational(Integer(text));
    const Integer num(text.substr(0, slash));
    const Integer den(text.substr(slash + 1));
    ensure(den != 0, ErrorKind::Schema, "zero denominator in '" + text + "'");
    return Rational(num, den);
  } catch (const std::runtime_error& e) {
    if (dynamic_cast<const Error*>(&e) != nullptr) throw;
    raise(ErrorKind::Schema, "not a rational number: '" + text + "'");
  }
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t out = 0;
  if (__builtin_mul_overflow(a, b, &out)) raise(ErrorKind::Overflow, "64-bit product overflow");
  return out;
}

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t out = 0;
  if (__builtin_add_overflow(a, b, &out)) raise(ErrorKind::Overflow, "64-bit sum overflow");
  return out;
}

std::int64_t lcm_checked(std::int64_t a, std::int64_t b) {
  if (a == 0 || b == 0) return 0;
  const std::int64_t g = std::gcd(a, b);
  return checked_mul(a / g, b);
}

std::int64_t lcm_of(std::span<const std::int64_t> values) {
  std::int64_t out = 1;
  for (const auto v : values) out = lcm_checked(out, v);
  return out;
}

std::int64_t to_int64(const Integer& value) {
  ensure(value <= std::numeric_limits<std::int64_t>::max() &&
             value >= std::numeric_limits<std::int64_t>::min(),
         ErrorKind::Overflow, "value " + value.str() + " does not fit in 64 bits");
  return value.convert_to<std::int64_t>();
}

}  // namespace brieskorn
