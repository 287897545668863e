#pragma once

#include "tfag/exact/rational.hpp"

#include <utility>
#include <vector>

namespace tfag {

/// Deterministic Miller-Rabin below 3.3e24, GMP's strong probable-prime test
/// above.
bool is_prime(const Integer& n);

struct PrimePower {
  Integer prime;
  unsigned long exponent;
  friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

/// Factorization of |n| by trial division up to 10^6 followed by a primality
/// test on the cofactor. Throws DomainError when the cofactor is composite,
/// since it could not be split. n == 0 is an ArgumentError.
std::vector<PrimePower> factor_integer(const Integer& n);

} // namespace tfag
