#include "tfag/exact/rational.hpp"

#include "tfag/errors.hpp"
#include "tfag/exact/primes.hpp"

#include <cctype>

namespace tfag {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

Integer parse_integer(std::string_view s) {
  s = trim(s);
  std::string_view digits = s;
  if (!digits.empty() && (digits.front() == '-' || digits.front() == '+')) digits.remove_prefix(1);
  if (digits.empty()) throw ArgumentError("empty integer literal");
  for (char c : digits)
    if (!std::isdigit(static_cast<unsigned char>(c)))
      throw ArgumentError("malformed integer literal '" + std::string(s) + "'");
  std::string buf(s.front() == '+' ? s.substr(1) : s);
  return Integer(buf, 10);
}

} // namespace

Rational::Rational(const Integer& num, const Integer& den) {
  if (den == 0) throw ArgumentError("rational with zero denominator");
  q_ = mpq_class(num, den);
  q_.canonicalize();
}

Rational Rational::from_lowest_terms(const Integer& num, const Integer& den) {
  if (den <= 0) throw ArgumentError("denominator must be positive");
  Rational out;
  out.q_.get_num() = num;
  out.q_.get_den() = den;
  return out;
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw ArgumentError("division by zero");
  q_ /= o.q_;
  return *this;
}

Rational Rational::parse(std::string_view text) {
  text = trim(text);
  auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_integer(text));
  return Rational(parse_integer(text.substr(0, slash)), parse_integer(text.substr(slash + 1)));
}

std::string Rational::to_string() const {
  if (is_integer()) return q_.get_num().get_str();
  return q_.get_num().get_str() + "/" + q_.get_den().get_str();
}

RatVector to_rational(const IntVector& v) {
  return RatVector(v.begin(), v.end());
}

Integer common_denominator(const RatVector& v) {
  Integer d = 1;
  for (const auto& x : v) {
    Integer e = x.den();
    mpz_lcm(d.get_mpz_t(), d.get_mpz_t(), e.get_mpz_t());
  }
  return d;
}

bool is_integral(const RatVector& v) {
  for (const auto& x : v)
    if (!x.is_integer()) return false;
  return true;
}

long valuation_unchecked(const Integer& x, const Integer& p) {
  if (x == 0) return -1;
  Integer rest;
  return static_cast<long>(mpz_remove(rest.get_mpz_t(), x.get_mpz_t(), p.get_mpz_t()));
}

std::optional<long> p_valuation(const Rational& x, const Integer& p) {
  if (!is_prime(p)) throw ArgumentError(p.get_str() + " is not prime");
  if (x.is_zero()) return std::nullopt;
  return valuation_unchecked(x.num(), p) - valuation_unchecked(x.den(), p);
}

} // namespace tfag
