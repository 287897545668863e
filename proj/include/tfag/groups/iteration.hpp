#pragma once

// Bounded-iteration cross-checks. These never consult the p-adic machinery;
// they walk A^n v directly, so they make an independent second route for the
// membership, divisibility and metric answers.

#include "tfag/groups/presentation.hpp"

#include <optional>

namespace tfag {

/// Largest exponent of any prime in the common denominator of v.
unsigned long max_denominator_exponent(const RatVector& v);

/// r·(e_max + r) + r, the certificate search bound.
unsigned long certificate_bound(const StationaryPresentation& pres, const RatVector& v);

/// r·(N + e_max + r) + r: long enough for the ideal part of v to fall below
/// p^-N once the element is integral.
unsigned long metric_bound(const StationaryPresentation& pres, const RatVector& v, long precision);

/// Smallest n <= bound with A^n v integral.
std::optional<unsigned long> integrality_certificate(const StationaryPresentation& pres, const RatVector& v,
                                                     unsigned long bound);

/// Smallest n in [1, bound] with A^n = 0 mod p.
std::optional<unsigned long> zero_power_witness(const IntMatrix& a, const Integer& p, unsigned long bound);

/// max j <= N such that A^n v lies in p^j Z^r for some n <= bound; nullopt if
/// A^n v is never integral within the bound.
std::optional<long> divisibility_depth(const StationaryPresentation& pres, const RatVector& v, const Integer& p,
                                       long precision, unsigned long bound);

} // namespace tfag
