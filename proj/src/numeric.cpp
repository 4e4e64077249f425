#include "corda/numeric.hpp"

#include <cctype>

#include "corda/error.hpp"

namespace corda {

const char* status_name(Status s) {
  switch (s) {
    case Status::ok: return "ok";
    case Status::invalid_argument: return "invalid_argument";
    case Status::unsupported: return "unsupported";
    case Status::budget_exhausted: return "budget_exhausted";
    case Status::parse_error: return "parse_error";
    case Status::internal: return "internal";
  }
  return "unknown";
}

Integer int_gcd(const Integer& a, const Integer& b) {
  Integer r;
  mpz_gcd(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

Integer int_lcm(const Integer& a, const Integer& b) {
  Integer r;
  mpz_lcm(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

Integer floor_div(const Integer& num, const Integer& den) {
  if (den == 0) fail_arg("floor_div: zero denominator");
  Integer q;
  mpz_fdiv_q(q.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  return q;
}

Rational make_rational(const Integer& num, const Integer& den) {
  if (den == 0) fail_arg("make_rational: zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

Rational rational_mod1(const Rational& q) {
  Rational r = q - Rational(floor_div(q.get_num(), q.get_den()));
  r.canonicalize();
  return r;
}

std::string rational_string(const Rational& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

std::optional<Rational> parse_rational(const std::string& text) {
  size_t i = 0;
  bool neg = false;
  if (i < text.size() && text[i] == '-') {
    neg = true;
    ++i;
  }
  size_t num_begin = i;
  while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
  if (i == num_begin) return std::nullopt;
  Integer num(text.substr(num_begin, i - num_begin));
  Integer den = 1;
  if (i < text.size()) {
    if (text[i] != '/') return std::nullopt;
    ++i;
    size_t den_begin = i;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
    if (i == den_begin || i != text.size()) return std::nullopt;
    den = Integer(text.substr(den_begin));
    if (den == 0) return std::nullopt;
  }
  if (neg) num = -num;
  return make_rational(num, den);
}

} // namespace corda
