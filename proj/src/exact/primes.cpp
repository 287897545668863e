#include "tfag/exact/primes.hpp"

#include "tfag/errors.hpp"

#include <array>

namespace tfag {

namespace {

constexpr unsigned long kTrialLimit = 1'000'000;

bool miller_rabin_round(const Integer& n, const Integer& d, unsigned long s, unsigned long base) {
  Integer a = base;
  if (a % n == 0) return true;
  Integer x;
  Integer n1 = n - 1;
  mpz_powm(x.get_mpz_t(), a.get_mpz_t(), d.get_mpz_t(), n.get_mpz_t());
  if (x == 1 || x == n1) return true;
  for (unsigned long i = 1; i < s; ++i) {
    x = (x * x) % n;
    if (x == n1) return true;
  }
  return false;
}

} // namespace

bool is_prime(const Integer& n) {
  if (n < 2) return false;
  static constexpr std::array<unsigned long, 13> bases{2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41};
  for (unsigned long b : bases) {
    if (n == b) return true;
    if (n % b == 0) return false;
  }
  // Jaeschke/Sorenson-Webster bound for the first 13 prime bases.
  static const Integer deterministic_bound("3317044064679887385961981", 10);
  if (n >= deterministic_bound) return mpz_probab_prime_p(n.get_mpz_t(), 50) > 0;

  Integer d = n - 1;
  unsigned long s = 0;
  while (mpz_even_p(d.get_mpz_t())) {
    d >>= 1;
    ++s;
  }
  for (unsigned long b : bases)
    if (!miller_rabin_round(n, d, s, b)) return false;
  return true;
}

std::vector<PrimePower> factor_integer(const Integer& n) {
  if (n == 0) throw ArgumentError("cannot factor zero");
  Integer rest = abs(n);
  std::vector<PrimePower> out;
  auto strip = [&](unsigned long q) {
    if (mpz_divisible_ui_p(rest.get_mpz_t(), q) == 0) return;
    unsigned long e = 0;
    while (mpz_divisible_ui_p(rest.get_mpz_t(), q) != 0) {
      mpz_divexact_ui(rest.get_mpz_t(), rest.get_mpz_t(), q);
      ++e;
    }
    out.push_back({Integer(q), e});
  };
  strip(2);
  for (unsigned long q = 3; q <= kTrialLimit && rest > 1; q += 2) {
    if (Integer(q) * q > rest) break;
    strip(q);
  }
  if (rest == 1) return out;
  // No factor up to min(10^6, sqrt(rest)) remains.
  if (rest < Integer(kTrialLimit) * kTrialLimit || is_prime(rest)) {
    out.push_back({rest, 1});
    return out;
  }
  throw DomainError("cannot factor " + n.get_str() + ": composite cofactor " + rest.get_str() +
                    " has no prime factor below 10^6");
}

} // namespace tfag
