#include "tfag/exact/primes.hpp"
#include "tfag/groups/groups.hpp"
#include "tfag/groups/iteration.hpp"

namespace tfag {

namespace {

struct ClosureVerdict {
  bool accepted = true;
  bool foreign_prime = false;  // a denominator prime not dividing det(A)
  std::string reason;
};

ClosureVerdict closure_check(const StationaryPresentation& pres, const RatVector& v, long precision) {
  const Integer den = common_denominator(v);
  if (den == 1) return {};
  const auto primes = factor_integer(den);
  for (const auto& q : primes)
    if (mpz_divisible_p(pres.det().get_mpz_t(), q.prime.get_mpz_t()) == 0)
      return {false, true, "denominator prime " + q.prime.get_str() + " does not divide det(A)"};

  IntVector x(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) x[i] = (v[i] * Rational(den)).num();

  for (const auto& q : primes) {
    const long e = static_cast<long>(q.exponent);
    FunctionalBasis basis = functionals_basis(pres, q.prime, precision + e);
    const PadicRing& ring = basis.module.ring();
    for (const auto& w : basis.module.rows()) {
      Integer pairing = 0;
      for (std::size_t i = 0; i < x.size(); ++i) pairing += w[i] * x[i];
      // w·v = pairing / den; only the q-part of den matters.
      if (ring.valuation(pairing) < e)
        return {false, false, "a " + q.prime.get_str() + "-adic functional takes v outside Z_" + q.prime.get_str()};
    }
  }
  return {};
}

} // namespace

Membership member(const StationaryPresentation& pres, const RatVector& v, long precision) {
  if (v.size() != pres.rank()) throw DimensionError("vector does not match presentation rank");
  if (precision < 1) throw ArgumentError("precision must be at least 1");
  const ClosureVerdict verdict = closure_check(pres, v, precision);
  // A foreign prime stays in every A^n v, so there is nothing to iterate.
  if (verdict.foreign_prime) return {false, std::nullopt, verdict.reason};
  const unsigned long bound = certificate_bound(pres, v);
  const auto cert = integrality_certificate(pres, v, bound);

  if (verdict.accepted) {
    if (!cert)
      throw PrecisionError("closure criterion accepts v but no n <= " + std::to_string(bound) +
                           " makes A^n v integral; raise the precision or bound");
    return {true, GroupElement{v, cert}, {}};
  }
  if (cert) throw InvariantError("closure criterion rejects v but A^" + std::to_string(*cert) + " v is integral");
  return {false, std::nullopt, verdict.reason};
}

GroupElement make_element(const StationaryPresentation& pres, const RatVector& v, long precision) {
  Membership m = member(pres, v, precision);
  if (!m.member) throw DomainError("vector is not in the group: " + m.reason);
  return *m.element;
}

} // namespace tfag
