#pragma once

#include "tfag/padic/padic.hpp"

#include <utility>

namespace tfag {

/// chi = chi1·chi0 over Z_p, truncated at p^N. chi1 collects the roots of
/// absolute value 1 (the unit root factor), chi0 those of absolute value < 1
/// (the ideal root factor). u·chi1 + v·chi0 = 1 with deg u < deg chi0 and
/// deg v < deg chi1. All polynomials are leading-first; the zero polynomial
/// has an empty coefficient list.
struct UnitIdealSplit {
  PadicRing ring;
  long unit_roots = 0;  // k = deg chi1
  PadicPoly chi1;
  PadicPoly chi0;
  PadicPoly u;
  PadicPoly v;
};

/// Number of roots of absolute value 1, read off the coefficients: the
/// largest i with p not dividing a_i (a_0 = 1). `chi` is leading-first and
/// must be monic.
long unit_root_count(const IntVector& chi, const Integer& p);

/// Splits a monic integer polynomial into unit and ideal root factors.
/// The seed mod p is chi = x^(r-k)·g(x) with g(0) a unit; it is lifted by
/// quadratic Hensel steps up to precision N.
UnitIdealSplit hensel_split(const IntVector& chi, const Integer& p, long precision);

/// Bezout cofactors (u, v) with u·chi1 + v·chi0 = 1 mod p^N for monic
/// factors that are coprime mod p. Euclid over F_p, then Newton lifting.
std::pair<PadicPoly, PadicPoly> bezout_cofactors(const PadicPoly& chi1, const PadicPoly& chi0);

/// Product of two polynomials over the same Z/p^N (leading-first).
PadicPoly multiply(const PadicPoly& a, const PadicPoly& b);
PadicPoly add(const PadicPoly& a, const PadicPoly& b);

} // namespace tfag
