#pragma once

#include <gmpxx.h>

#include <compare>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace tfag {

using Integer = mpz_class;
using IntVector = std::vector<Integer>;

/// Exact rational number, always stored in lowest terms with a positive
/// denominator. Equality is therefore structural.
class Rational {
public:
  Rational() = default;
  Rational(long v) : q_(v) {}
  Rational(const Integer& v) : q_(v) {}
  /// Throws ArgumentError when `den` is zero.
  Rational(const Integer& num, const Integer& den);

  /// num/den already in lowest terms with den > 0; skips the gcd. Only the
  /// sign of den is checked.
  static Rational from_lowest_terms(const Integer& num, const Integer& den);

  /// Parses "a", "-a" or "a/b" (whitespace around the tokens is ignored).
  static Rational parse(std::string_view text);

  Integer num() const { return q_.get_num(); }
  Integer den() const { return q_.get_den(); }
  bool is_integer() const { return q_.get_den() == 1; }
  bool is_zero() const { return sgn(q_) == 0; }
  int sign() const { return sgn(q_); }

  const mpq_class& raw() const { return q_; }

  Rational operator-() const { return Rational(mpq_class(-q_)); }
  Rational& operator+=(const Rational& o) { q_ += o.q_; return *this; }
  Rational& operator-=(const Rational& o) { q_ -= o.q_; return *this; }
  Rational& operator*=(const Rational& o) { q_ *= o.q_; return *this; }
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) { return a.q_ == b.q_; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    int c = cmp(a.q_, b.q_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  std::string to_string() const;

private:
  explicit Rational(mpq_class q) : q_(std::move(q)) { q_.canonicalize(); }
  mpq_class q_;
};

using RatVector = std::vector<Rational>;

RatVector to_rational(const IntVector& v);

/// Least common multiple of the entry denominators (1 for an integral vector).
Integer common_denominator(const RatVector& v);

bool is_integral(const RatVector& v);

/// Largest e with p^e | x; nullopt encodes +infinity (x == 0).
/// Throws ArgumentError when p is not prime.
std::optional<long> p_valuation(const Rational& x, const Integer& p);

/// Same as p_valuation but assumes p was already validated as prime.
long valuation_unchecked(const Integer& x, const Integer& p);

} // namespace tfag
