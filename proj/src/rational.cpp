#include "torusbt/rational.hpp"

#include "torusbt/error.hpp"

#include <cctype>

namespace torusbt {

Rational make_rational(const Integer& num, const Integer& den) {
  if (den == 0) throw Error(ErrorCode::InvalidArgument, "zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

std::string to_string(const Integer& z) { return z.get_str(); }

std::string to_string(const Rational& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

namespace {

Integer parse_integer(std::string_view text, std::string_view whole) {
  std::size_t start = (!text.empty() && (text[0] == '-' || text[0] == '+')) ? 1 : 0;
  if (text.size() == start) throw Error(ErrorCode::ParseError, "bad rational '" + std::string(whole) + "'");
  for (std::size_t i = start; i < text.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(text[i]))) {
      throw Error(ErrorCode::ParseError, "bad rational '" + std::string(whole) + "'");
    }
  }
  std::string digits(text[0] == '+' ? text.substr(1) : text);
  return Integer(digits, 10);
}

}  // namespace

Rational parse_rational(std::string_view text) {
  auto slash = text.find('/');
  if (slash == std::string_view::npos) return make_rational(parse_integer(text, text));
  Integer den = parse_integer(text.substr(slash + 1), text);
  if (den <= 0) throw Error(ErrorCode::ParseError, "nonpositive denominator in '" + std::string(text) + "'");
  return make_rational(parse_integer(text.substr(0, slash), text), den);
}

std::optional<Rational> rational_nth_root(const Rational& x, unsigned long n) {
  if (n == 0 || x <= 0) throw Error(ErrorCode::InvalidArgument, "rational_nth_root needs x > 0 and n >= 1");
  Integer num_root, den_root;
  if (mpz_root(num_root.get_mpz_t(), x.get_num_mpz_t(), n) == 0) return std::nullopt;
  if (mpz_root(den_root.get_mpz_t(), x.get_den_mpz_t(), n) == 0) return std::nullopt;
  return make_rational(num_root, den_root);
}

unsigned long valuation(const Integer& z, const Integer& p) {
  if (z == 0) throw Error(ErrorCode::InvalidArgument, "valuation of zero");
  unsigned long v = 0;
  Integer rest = abs(z);
  while (rest % p == 0) {
    rest /= p;
    ++v;
  }
  return v;
}

Rational prime_to_part(const Rational& x, const Integer& p) {
  if (x == 0) return x;
  Integer num = x.get_num();
  Integer den = x.get_den();
  while (num % p == 0) num /= p;
  while (den % p == 0) den /= p;
  return make_rational(num, den);
}

Integer lcm(const Integer& a, const Integer& b) {
  Integer r;
  mpz_lcm(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

}  // namespace torusbt
