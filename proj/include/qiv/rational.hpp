#pragma once

#include <boost/multiprecision/gmp.hpp>

#include <optional>
#include <string>

namespace qiv {

using Int = boost::multiprecision::mpz_int;

// GMP-backed rational, always canonical: gcd(num, den) = 1, den > 0, zero is 0/1.
using Rational = boost::multiprecision::mpq_rational;

// r^e with integer e of either sign; raises DivisionByZeroSeries for 0^negative.
Rational rat_pow(const Rational& r, long long e);

// Renders "p" or "p/q"; parse accepts the same forms.
std::string rat_str(const Rational& r);
std::optional<Rational> rat_parse(const std::string& s);

// True iff r is the square of a rational; writes the nonnegative root if asked.
bool rat_is_square(const Rational& r, Rational* root = nullptr);

}  // namespace qiv
