#include "tfag/groups/groups.hpp"

#include "tfag/exact/primes.hpp"
#include "tfag/groups/iteration.hpp"

namespace tfag {

DivisibilityResult is_p_divisible(const StationaryPresentation& pres, const Integer& p) {
  if (!is_prime(p)) throw ArgumentError(p.get_str() + " is not prime");
  const IntVector& chi = pres.charpoly();
  for (std::size_t i = 1; i < chi.size(); ++i)
    if (mpz_divisible_p(chi[i].get_mpz_t(), p.get_mpz_t()) == 0) return {false, std::nullopt};
  // chi = x^r mod p, so A^r = 0 mod p by Cayley-Hamilton.
  auto witness = zero_power_witness(pres.matrix(), p, pres.rank());
  if (!witness) throw InvariantError("coefficient test passed but no power of A vanishes mod p");
  return {true, witness};
}

FunctionalBasis functionals_basis(const StationaryPresentation& pres, const Integer& p, long precision) {
  UnitIdealSplit split = hensel_split(pres.charpoly(), p, precision);
  const PadicMatrix a(split.ring, pres.matrix());
  RowModule kernel = left_kernel(matrix_poly_eval(split.chi1, a));
  // chi1(A) is invertible on the ideal summand, so the truncated kernel is
  // the free rank-k unit summand.
  if (!kernel.is_free_of_rank(static_cast<std::size_t>(split.unit_roots)))
    throw InvariantError("functional module is not free of rank equal to the unit-root count");
  return {std::move(kernel), std::move(split)};
}

long pro_p_corank(const StationaryPresentation& pres, const Integer& p) {
  return unit_root_count(pres.charpoly(), p);
}

RowModule limit_prefix_functionals(const InductivePrefix& prefix, const Integer& p, long precision,
                                   std::size_t stage) {
  if (stage > prefix.length()) throw ArgumentError("stage exceeds prefix length");
  PadicRing ring(p, precision);
  PadicMatrix product = PadicMatrix::identity(ring, prefix.rank());
  // Rows act on the right: w·A_n···A_1.
  for (std::size_t i = 0; i < stage; ++i) product = PadicMatrix(ring, prefix.matrices()[i]) * product;
  return row_span(product);
}

UnitProjection unit_projection(const StationaryPresentation& pres, const Integer& p, long precision,
                               const GroupElement& g) {
  if (g.v.size() != pres.rank()) throw DimensionError("element does not match presentation rank");
  PadicRing out_ring(p, precision);
  const Integer den = common_denominator(g.v);
  const long e = valuation_unchecked(den, p);
  const long r = static_cast<long>(pres.rank());
  const long det_val = valuation_unchecked(abs(pres.det()), p);
  const long working = precision + e + r * (det_val * r);

  UnitIdealSplit split = hensel_split(pres.charpoly(), p, working);
  const PadicRing& ring = split.ring;
  const PadicMatrix a(ring, pres.matrix());
  const PadicMatrix projector = matrix_poly_eval(split.v, a) * matrix_poly_eval(split.chi0, a);

  // g = x / (p^e·d'); project x/d' and divide by p^e afterwards.
  const Integer pe = ring.power(static_cast<unsigned long>(e));
  IntVector scaled(g.v.size());
  for (std::size_t i = 0; i < g.v.size(); ++i) scaled[i] = ring.reduce(g.v[i] * Rational(pe));
  IntVector c = projector.act_on_column(scaled);

  UnitProjection out{out_ring, IntVector(c.size()), {}, e > 0, working};
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (c[i] != 0 && valuation_unchecked(c[i], p) < e)
      throw DomainError("unit component is not " + p.get_str() + "-integral; element is not in the group");
    out.component[i] = out_ring.reduce(Integer(c[i] / pe));
  }
  out.norm = residue_norm(out_ring, out.component);
  return out;
}

namespace {
GroupElement ensure_member(const StationaryPresentation& pres, const GroupElement& g, long precision) {
  if (g.cert) return g;
  Membership m = member(pres, g.v, precision);
  if (!m.member) throw DomainError("element is not in the group: " + m.reason);
  return *m.element;
}
} // namespace

PadicNorm dp_distance(const StationaryPresentation& pres, const Integer& p, long precision,
                      const GroupElement& g, const GroupElement& h) {
  if (g.v.size() != pres.rank() || h.v.size() != pres.rank())
    throw DimensionError("element does not match presentation rank");
  const GroupElement gm = ensure_member(pres, g, precision);
  const GroupElement hm = ensure_member(pres, h, precision);
  RatVector diff(gm.v.size());
  for (std::size_t i = 0; i < diff.size(); ++i) diff[i] = gm.v[i] - hm.v[i];
  GroupElement d{std::move(diff), std::max(*gm.cert, *hm.cert)};
  return unit_projection(pres, p, precision, d).norm;
}

} // namespace tfag
