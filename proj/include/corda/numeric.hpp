#pragma once
#include <gmpxx.h>

#include <optional>
#include <string>

namespace corda {

// Element payloads and small exponents.  Anything that can grow without bound
// (linear algebra, resultants, rotation arithmetic) uses Integer/Rational.
using Int = long long;
using Integer = mpz_class;
using Rational = mpq_class;

// mpz_class has no long long constructor; funnel payload ints through here.
inline Integer to_integer(Int v) { return Integer(static_cast<long>(v)); }

Integer int_gcd(const Integer& a, const Integer& b);
Integer int_lcm(const Integer& a, const Integer& b);

// floor(num/den), exact, den != 0.
Integer floor_div(const Integer& num, const Integer& den);

// Canonical rational with positive denominator; den != 0.
Rational make_rational(const Integer& num, const Integer& den);
inline Rational make_rational(Int num, Int den) {
  return make_rational(to_integer(num), to_integer(den));
}

// Representative of q + Z in [0, 1).
Rational rational_mod1(const Rational& q);

// "p/q" in lowest terms; "/1" omitted.
std::string rational_string(const Rational& q);

// Accepts "p" or "p/q" with optional leading '-'; q > 0 after parsing fails
// otherwise.  No whitespace, no '+'.
std::optional<Rational> parse_rational(const std::string& text);

struct RationalInterval {
  Rational lo;
  Rational hi;
};

} // namespace corda
