#include "modpoly.hpp"

#include "tfag/errors.hpp"

#include <algorithm>

namespace tfag::detail {

namespace {
Integer mod(const Integer& x, const Integer& m) {
  Integer r;
  mpz_fdiv_r(r.get_mpz_t(), x.get_mpz_t(), m.get_mpz_t());
  return r;
}
} // namespace

void trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

long degree(const Poly& a) {
  for (std::size_t i = a.size(); i-- > 0;)
    if (a[i] != 0) return static_cast<long>(i);
  return -1;
}

bool is_zero(const Poly& a) { return degree(a) < 0; }

Poly reduce(const Poly& a, const Integer& m) {
  Poly out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = mod(a[i], m);
  trim(out);
  return out;
}

Poly add(const Poly& a, const Poly& b, const Integer& m) {
  Poly out(std::max(a.size(), b.size()), Integer(0));
  for (std::size_t i = 0; i < a.size(); ++i) out[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) out[i] += b[i];
  return reduce(out, m);
}

Poly sub(const Poly& a, const Poly& b, const Integer& m) {
  Poly out(std::max(a.size(), b.size()), Integer(0));
  for (std::size_t i = 0; i < a.size(); ++i) out[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) out[i] -= b[i];
  return reduce(out, m);
}

Poly mul(const Poly& a, const Poly& b, const Integer& m) {
  if (a.empty() || b.empty()) return {};
  Poly out(a.size() + b.size() - 1, Integer(0));
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  }
  return reduce(out, m);
}

std::pair<Poly, Poly> divrem_monic(const Poly& a, const Poly& b, const Integer& m) {
  Poly bb = reduce(b, m);
  const long db = degree(bb);
  if (db < 0 || mod(bb[static_cast<std::size_t>(db)] - 1, m) != 0)
    throw InvariantError("division by a non-monic polynomial");
  Poly r = reduce(a, m);
  long dr = degree(r);
  if (dr < db) return {Poly{}, r};
  Poly q(static_cast<std::size_t>(dr - db + 1), Integer(0));
  for (long k = dr; k >= db; --k) {
    Integer c = r[static_cast<std::size_t>(k)];
    if (c == 0) continue;
    const auto shift = static_cast<std::size_t>(k - db);
    q[shift] = c;
    for (long i = 0; i <= db; ++i) {
      auto idx = shift + static_cast<std::size_t>(i);
      r[idx] = mod(r[idx] - c * bb[static_cast<std::size_t>(i)], m);
    }
  }
  trim(q);
  trim(r);
  return {q, r};
}

std::pair<Poly, Poly> bezout_mod_prime(const Poly& a, const Poly& b, const Integer& p) {
  // Extended Euclid over the field F_p, tracking only the cofactor of a.
  Poly r0 = reduce(a, p), r1 = reduce(b, p);
  Poly s0{Integer(1)}, s1{};
  while (!is_zero(r1)) {
    const auto d1 = static_cast<std::size_t>(degree(r1));
    Integer inv;
    mpz_invert(inv.get_mpz_t(), r1[d1].get_mpz_t(), p.get_mpz_t());
    Poly r1_monic = reduce(mul(r1, Poly{inv}, p), p);
    auto [q, r] = divrem_monic(r0, r1_monic, p);
    // r0 = q·r1_monic + r = (q·inv)·r1 + r
    Poly qq = mul(q, Poly{inv}, p);
    Poly s2 = sub(s0, mul(qq, s1, p), p);
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s2);
  }
  if (degree(r0) != 0) throw InvariantError("polynomials are not coprime modulo p");
  Integer inv;
  mpz_invert(inv.get_mpz_t(), r0[0].get_mpz_t(), p.get_mpz_t());
  Poly s = mul(s0, Poly{inv}, p);
  // t = (1 - s·a) / b, exact over F_p.
  Poly num = sub(Poly{Integer(1)}, mul(s, a, p), p);
  Integer lead_inv;
  Poly bb = reduce(b, p);
  mpz_invert(lead_inv.get_mpz_t(), bb[static_cast<std::size_t>(degree(bb))].get_mpz_t(), p.get_mpz_t());
  auto [t_monic, rem] = divrem_monic(num, mul(bb, Poly{lead_inv}, p), p);
  if (!is_zero(rem)) throw InvariantError("Bezout cofactor division left a remainder");
  Poly t = mul(t_monic, Poly{lead_inv}, p);
  // Normalize deg s < deg b.
  if (degree(s) >= degree(bb) && degree(bb) >= 0) {
    auto [q, sr] = divrem_monic(s, mul(bb, Poly{lead_inv}, p), p);
    Poly a_red = reduce(a, p);
    t = add(t, mul(mul(q, Poly{lead_inv}, p), a_red, p), p);
    s = sr;
  }
  return {s, t};
}

Poly from_leading_first(const IntVector& c) {
  Poly out(c.rbegin(), c.rend());
  trim(out);
  return out;
}

IntVector to_leading_first(const Poly& a, std::size_t length) {
  IntVector out(length, Integer(0));
  for (std::size_t i = 0; i < a.size() && i < length; ++i) out[length - 1 - i] = a[i];
  return out;
}

} // namespace tfag::detail
