#include "grecip/rational.hpp"

#include <cctype>
#include <stdexcept>

#include "grecip/errors.hpp"

namespace grecip {
namespace {

bool is_decimal_integer(std::string_view s, bool allow_sign) {
  if (allow_sign && !s.empty() && s.front() == '-') s.remove_prefix(1);
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

}  // namespace

std::string to_string(const Rational& q) { return q.get_str(10); }
std::string to_string(const BigInt& z) { return z.get_str(10); }

BigInt parse_bigint(std::string_view text) {
  if (!is_decimal_integer(text, true))
    throw ParseError("not a decimal integer: '" + std::string(text) + "'");
  return BigInt(std::string(text), 10);
}

Rational parse_rational(std::string_view text) {
  auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_bigint(text));
  auto num = text.substr(0, slash);
  auto den = text.substr(slash + 1);
  if (!is_decimal_integer(num, true) || !is_decimal_integer(den, false))
    throw ParseError("not a rational: '" + std::string(text) + "'");
  BigInt d(std::string(den), 10);
  if (d == 0) throw ParseError("zero denominator: '" + std::string(text) + "'");
  Rational q(BigInt(std::string(num), 10), d);
  q.canonicalize();
  return q;
}

Rational make_rational(const BigInt& num, const BigInt& den) {
  if (den == 0) throw std::invalid_argument("zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

BigInt factorial(unsigned n) {
  BigInt r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return r;
}

BigInt lcm(const BigInt& a, const BigInt& b) {
  BigInt r;
  mpz_lcm(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

}  // namespace grecip
