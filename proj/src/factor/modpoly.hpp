#pragma once

// Dense univariate polynomials over Z/m, lowest degree first. Internal to the
// factor library.

#include "tfag/exact/rational.hpp"

#include <utility>

namespace tfag::detail {

using Poly = IntVector;  // ascending coefficients

void trim(Poly& a);
long degree(const Poly& a);  // -1 for the zero polynomial
Poly reduce(const Poly& a, const Integer& m);
Poly add(const Poly& a, const Poly& b, const Integer& m);
Poly sub(const Poly& a, const Poly& b, const Integer& m);
Poly mul(const Poly& a, const Poly& b, const Integer& m);
/// Division by a polynomial whose leading coefficient is 1 mod m.
std::pair<Poly, Poly> divrem_monic(const Poly& a, const Poly& b, const Integer& m);
bool is_zero(const Poly& a);

/// s, t with s·a + t·b = 1 over F_p, deg s < deg b, deg t < deg a. Throws
/// InvariantError when a and b are not coprime mod p.
std::pair<Poly, Poly> bezout_mod_prime(const Poly& a, const Poly& b, const Integer& p);

Poly from_leading_first(const IntVector& c);
IntVector to_leading_first(const Poly& a, std::size_t length);

} // namespace tfag::detail
