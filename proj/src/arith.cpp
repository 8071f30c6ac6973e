#include "bsurf/arith.hpp"

#include <stdexcept>

namespace bsurf {

std::string format_rational(const Rational& q) {
  return numerator_of(q).str() + "/" + denominator_of(q).str();
}

static bool is_integer_text(std::string_view s) {
  if (s.empty()) return false;
  std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i)
    if (s[i] < '0' || s[i] > '9') return false;
  return true;
}

Integer parse_integer(std::string_view text) {
  if (!is_integer_text(text)) throw std::invalid_argument("not an integer: '" + std::string(text) + "'");
  std::string s(text);
  if (s[0] == '+') s.erase(0, 1);
  return Integer(s);
}

Rational parse_rational(std::string_view text) {
  auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_integer(text));
  Integer p = parse_integer(text.substr(0, slash));
  std::string_view qs = text.substr(slash + 1);
  if (!qs.empty() && (qs[0] == '-' || qs[0] == '+'))
    throw std::invalid_argument("signed denominator: '" + std::string(text) + "'");
  Integer q = parse_integer(qs);
  if (q == 0) throw std::invalid_argument("zero denominator: '" + std::string(text) + "'");
  return Rational(p, q);
}

std::string format_integer(const Integer& z) { return z.str(); }

Integer numerator_of(const Rational& q) { return boost::multiprecision::numerator(q); }
Integer denominator_of(const Rational& q) { return boost::multiprecision::denominator(q); }

Integer gcd(const Integer& a, const Integer& b) { return boost::multiprecision::gcd(a, b); }

Integer lcm(const Integer& a, const Integer& b) {
  if (a == 0 || b == 0) return 0;
  return boost::multiprecision::lcm(a, b);
}

void make_primitive(std::vector<Integer>& v) {
  Integer g = 0;
  for (const auto& x : v) g = gcd(g, x);
  if (g > 1)
    for (auto& x : v) x /= g;
}

std::vector<Integer> clear_denominators(const std::vector<Rational>& v) {
  Integer l = 1;
  for (const auto& x : v) l = lcm(l, denominator_of(x));
  std::vector<Integer> out;
  out.reserve(v.size());
  for (const auto& x : v) out.push_back(numerator_of(x) * (l / denominator_of(x)));
  make_primitive(out);
  return out;
}

Rational pow(const Rational& base, unsigned exponent) {
  Rational r = 1, b = base;
  while (exponent) {
    if (exponent & 1u) r *= b;
    b *= b;
    exponent >>= 1;
  }
  return r;
}

Integer pow(const Integer& base, unsigned long exponent) {
  return boost::multiprecision::pow(base, static_cast<unsigned>(exponent));
}

Integer ceil_of(const Rational& q) {
  Integer n = numerator_of(q), d = denominator_of(q);
  Integer fl = n / d;  // truncates toward zero
  if (fl * d != n && n > 0) fl += 1;
  return fl;
}

} // namespace bsurf
