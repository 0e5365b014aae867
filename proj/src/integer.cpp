#include "k3pol/integer.hpp"

#include "k3pol/error.hpp"

#include <cctype>

namespace k3pol {

Integer gcd(const Integer& a, const Integer& b) {
  Integer x = abs(a), y = abs(b);
  while (y != 0) {
    Integer r = x % y;
    x = std::move(y);
    y = std::move(r);
  }
  return x;
}

Integer content(std::span<const Integer> v) {
  Integer g = 0;
  for (const auto& x : v) {
    g = gcd(g, x);
    if (g == 1) break;
  }
  return g;
}

ExtendedGcd extended_gcd(const Integer& a, const Integer& b) {
  Integer old_r = a, r = b;
  Integer old_s = 1, s = 0;
  Integer old_t = 0, t = 1;
  while (r != 0) {
    Integer q = old_r / r;
    Integer tmp = old_r - q * r;
    old_r = std::move(r);
    r = std::move(tmp);
    tmp = old_s - q * s;
    old_s = std::move(s);
    s = std::move(tmp);
    tmp = old_t - q * t;
    old_t = std::move(t);
    t = std::move(tmp);
  }
  if (old_r < 0) return {-old_r, -old_s, -old_t};
  return {old_r, old_s, old_t};
}

Integer floor_div(const Integer& a, const Integer& b) {
  Integer q = a / b;  // truncates toward zero
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

Integer mod(const Integer& a, const Integer& b) {
  Integer r = a % b;
  if (r < 0) r += abs(b);
  return r;
}

Integer parse_integer(std::string_view text) {
  std::size_t pos = 0;
  bool negative = false;
  if (pos < text.size() && (text[pos] == '+' || text[pos] == '-')) {
    negative = text[pos] == '-';
    ++pos;
  }
  if (pos == text.size())
    throw Error(Errc::invalid_argument,
                "not an integer: \"" + std::string(text) + "\"");
  Integer value = 0;
  for (; pos < text.size(); ++pos) {
    const char c = text[pos];
    if (!std::isdigit(static_cast<unsigned char>(c)))
      throw Error(Errc::invalid_argument,
                  "not an integer: \"" + std::string(text) + "\"");
    value = value * 10 + (c - '0');
  }
  return negative ? Integer(-value) : value;
}

Rational parse_rational(std::string_view text) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_integer(text));
  const Integer num = parse_integer(text.substr(0, slash));
  const Integer den = parse_integer(text.substr(slash + 1));
  if (den == 0) throw Error(Errc::invalid_argument, "zero denominator");
  return den < 0 ? Rational(-num, -den) : Rational(num, den);
}

std::string to_string(const Integer& a) { return a.str(); }

std::string to_string(const Rational& q) {
  using boost::multiprecision::denominator;
  using boost::multiprecision::numerator;
  if (denominator(q) == 1) return numerator(q).str();
  return numerator(q).str() + "/" + denominator(q).str();
}

IntVector clear_denominators(std::span<const Rational> v) {
  using boost::multiprecision::denominator;
  using boost::multiprecision::numerator;
  Integer l = 1;
  for (const auto& q : v) {
    const Integer& den = denominator(q);
    l = l / gcd(l, den) * den;
  }
  IntVector out;
  out.reserve(v.size());
  for (const auto& q : v) out.push_back(numerator(q) * (l / denominator(q)));
  return out;
}

RationalVector to_rational(std::span<const Integer> v) {
  RationalVector out;
  out.reserve(v.size());
  for (const auto& x : v) out.emplace_back(x);
  return out;
}

}  // namespace k3pol
