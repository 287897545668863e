#include "tfag/factor/factor.hpp"

#include "modpoly.hpp"
#include "tfag/exact/primes.hpp"

namespace tfag {

using detail::Poly;

namespace {

void require_monic(const IntVector& chi) {
  if (chi.empty() || chi.front() != 1) throw ArgumentError("polynomial must be monic (leading coefficient 1)");
}

PadicPoly to_padic(const PadicRing& ring, const Poly& a) {
  Poly r = detail::reduce(a, ring.modulus());
  return PadicPoly{ring, detail::to_leading_first(r, r.size())};
}

Poly to_poly(const PadicPoly& a) { return detail::from_leading_first(a.coeffs); }

Integer power_of(const Integer& p, long e) {
  Integer r;
  mpz_pow_ui(r.get_mpz_t(), p.get_mpz_t(), static_cast<unsigned long>(e));
  return r;
}

struct Lifted {
  Poly g, h, s, t;
};

// One quadratic Hensel step (von zur Gathen & Gerhard, Alg. 15.10) taking
// f = g·h, s·g + t·h = 1 from modulus m to modulus m2. h is monic.
Lifted hensel_step(const Poly& f, const Lifted& in, const Integer& m2) {
  using namespace detail;
  Poly e = sub(f, mul(in.g, in.h, m2), m2);
  auto [q, r] = divrem_monic(mul(in.s, e, m2), in.h, m2);
  Poly g = add(add(in.g, mul(in.t, e, m2), m2), mul(q, in.g, m2), m2);
  Poly h = add(in.h, r, m2);
  Poly b = sub(add(mul(in.s, g, m2), mul(in.t, h, m2), m2), Poly{Integer(1)}, m2);
  auto [c, d] = divrem_monic(mul(in.s, b, m2), h, m2);
  Poly s = sub(in.s, d, m2);
  Poly t = sub(sub(in.t, mul(in.t, b, m2), m2), mul(c, g, m2), m2);
  return {g, h, s, t};
}

} // namespace

long unit_root_count(const IntVector& chi, const Integer& p) {
  require_monic(chi);
  if (!is_prime(p)) throw ArgumentError(p.get_str() + " is not prime");
  long k = 0;
  for (std::size_t i = 1; i < chi.size(); ++i)
    if (mpz_divisible_p(chi[i].get_mpz_t(), p.get_mpz_t()) == 0) k = static_cast<long>(i);
  return k;
}

UnitIdealSplit hensel_split(const IntVector& chi, const Integer& p, long precision) {
  require_monic(chi);
  PadicRing ring(p, precision);
  const long r = static_cast<long>(chi.size()) - 1;
  const long k = unit_root_count(chi, p);
  const PadicPoly one{ring, {Integer(1)}};
  const PadicPoly zero{ring, {}};
  PadicPoly full{ring, {}};
  for (const auto& c : chi) full.coeffs.push_back(ring.reduce(c));

  if (k == 0) return {ring, 0, one, full, one, zero};
  if (k == r) return {ring, r, full, one, zero, one};

  // Seed: chi = x^(r-k)·(x^k + a_1 x^(k-1) + ... + a_k) mod p.
  const Poly f = detail::from_leading_first(chi);
  Lifted cur;
  cur.g = detail::reduce(detail::from_leading_first(IntVector(chi.begin(), chi.begin() + k + 1)), p);
  cur.h = Poly(static_cast<std::size_t>(r - k + 1), Integer(0));
  cur.h.back() = 1;
  std::tie(cur.s, cur.t) = detail::bezout_mod_prime(cur.g, cur.h, p);

  long reached = 1;
  while (reached < precision) {
    long next = std::min(2 * reached, precision);
    cur = hensel_step(f, cur, power_of(p, next));
    reached = next;
  }

  UnitIdealSplit out{ring, k, to_padic(ring, cur.g), to_padic(ring, cur.h), to_padic(ring, cur.s),
                     to_padic(ring, cur.t)};
  if (out.chi1.degree() != k || !out.chi1.is_monic() || out.chi0.degree() != r - k || !out.chi0.is_monic())
    throw InvariantError("Hensel lifting changed factor degrees");
  return out;
}

std::pair<PadicPoly, PadicPoly> bezout_cofactors(const PadicPoly& chi1, const PadicPoly& chi0) {
  if (!(chi1.ring == chi0.ring)) throw ArgumentError("factors live in different residue rings");
  const PadicRing& ring = chi1.ring;
  if (!chi1.is_monic() || !chi0.is_monic()) throw ArgumentError("Bezout factors must be monic");
  const PadicPoly one{ring, {Integer(1)}};
  const PadicPoly zero{ring, {}};
  if (chi1.degree() == 0) return {one, zero};
  if (chi0.degree() == 0) return {zero, one};

  const Poly a = to_poly(chi1);
  const Poly b = to_poly(chi0);
  auto [s, t] = detail::bezout_mod_prime(a, b, ring.prime());
  long reached = 1;
  while (reached < ring.precision()) {
    long next = std::min(2 * reached, ring.precision());
    const Integer m = power_of(ring.prime(), next);
    using namespace detail;
    // s·a + t·b = 1 - e  ==>  (1+e)s·a + (1+e)t·b = 1 - e^2.
    Poly e = sub(Poly{Integer(1)}, add(mul(s, a, m), mul(t, b, m), m), m);
    Poly one_plus_e = add(Poly{Integer(1)}, e, m);
    auto [q, s_new] = divrem_monic(mul(s, one_plus_e, m), b, m);
    t = add(mul(t, one_plus_e, m), mul(q, a, m), m);
    s = std::move(s_new);
    reached = next;
  }
  return {to_padic(ring, s), to_padic(ring, t)};
}

PadicPoly multiply(const PadicPoly& a, const PadicPoly& b) {
  if (!(a.ring == b.ring)) throw ArgumentError("polynomials live in different residue rings");
  return to_padic(a.ring, detail::mul(to_poly(a), to_poly(b), a.ring.modulus()));
}

PadicPoly add(const PadicPoly& a, const PadicPoly& b) {
  if (!(a.ring == b.ring)) throw ArgumentError("polynomials live in different residue rings");
  return to_padic(a.ring, detail::add(to_poly(a), to_poly(b), a.ring.modulus()));
}

} // namespace tfag
