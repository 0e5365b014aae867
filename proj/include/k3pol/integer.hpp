#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace k3pol {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

using IntVector = std::vector<Integer>;
using RationalVector = std::vector<Rational>;

inline Integer abs(const Integer& a) { return a < 0 ? Integer(-a) : a; }

// Nonnegative gcd; gcd(0, 0) = 0.
Integer gcd(const Integer& a, const Integer& b);

// Nonnegative gcd of all entries; 0 for an empty or zero vector.
Integer content(std::span<const Integer> v);

struct ExtendedGcd {
  Integer g;  // g = x*a + y*b, g >= 0
  Integer x;
  Integer y;
};
ExtendedGcd extended_gcd(const Integer& a, const Integer& b);

// Floor division and the matching nonnegative remainder for b > 0.
Integer floor_div(const Integer& a, const Integer& b);
Integer mod(const Integer& a, const Integer& b);

// Throws Error(invalid_argument) on anything other than [+-]digits.
Integer parse_integer(std::string_view text);
// Accepts "p/q" or a plain integer; the result is normalized.
Rational parse_rational(std::string_view text);

std::string to_string(const Integer& a);
// "p/q", or "p" when the denominator is 1.
std::string to_string(const Rational& q);

inline bool is_zero(std::span<const Integer> v) {
  for (const auto& x : v)
    if (x != 0) return false;
  return true;
}

// Scales a rational vector by the lcm of its denominators.
IntVector clear_denominators(std::span<const Rational> v);
RationalVector to_rational(std::span<const Integer> v);

}  // namespace k3pol
