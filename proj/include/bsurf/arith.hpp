#pragma once

#include <boost/multiprecision/gmp.hpp>

#include <string>
#include <string_view>
#include <vector>

namespace bsurf {

using Integer = boost::multiprecision::mpz_int;
using Rational = boost::multiprecision::mpq_rational;

// Always "p/q" with q >= 1, e.g. "3/1", "-1/2".
std::string format_rational(const Rational& q);
// Accepts "p/q" or "p".
Rational parse_rational(std::string_view text);
std::string format_integer(const Integer& z);
Integer parse_integer(std::string_view text);

Integer numerator_of(const Rational& q);
Integer denominator_of(const Rational& q);

Integer gcd(const Integer& a, const Integer& b);
Integer lcm(const Integer& a, const Integer& b);

// Divide by the gcd of the entries (no-op on the zero vector).
void make_primitive(std::vector<Integer>& v);

// Scale by the lcm of denominators, giving the primitive integer vector on the same ray.
std::vector<Integer> clear_denominators(const std::vector<Rational>& v);

Rational pow(const Rational& base, unsigned exponent);
Integer pow(const Integer& base, unsigned long exponent);

// ceil for a rational, exact.
Integer ceil_of(const Rational& q);

} // namespace bsurf
