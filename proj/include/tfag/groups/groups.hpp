#pragma once

#include "tfag/factor/factor.hpp"
#include "tfag/groups/presentation.hpp"
#include "tfag/padic/howell.hpp"

#include <optional>
#include <string>
#include <vector>

namespace tfag {

struct DivisibilityResult {
  bool divisible = false;
  /// Smallest n >= 1 with A^n = 0 mod p (present iff divisible).
  std::optional<unsigned long> witness_power;
};

/// G is p-divisible iff p divides every non-leading coefficient of chi_A.
DivisibilityResult is_p_divisible(const StationaryPresentation& pres, const Integer& p);

/// The p-adic functionals on G: rows w with w·chi1(A) = 0, truncated mod p^N.
struct FunctionalBasis {
  RowModule module;
  UnitIdealSplit split;

  /// Free rank k; module.rank() counts Howell rows and can be larger.
  std::size_t rank() const { return static_cast<std::size_t>(split.unit_roots); }
};

FunctionalBasis functionals_basis(const StationaryPresentation& pres, const Integer& p, long precision);

/// Component g^1 of g in the right unit subspace, and its norm (which is
/// d_p(g, 0) for members).
struct UnitProjection {
  PadicRing ring;           // precision N requested by the caller
  IntVector component;      // g^1 mod p^N
  PadicNorm norm;
  bool p_in_denominator = false;
  long working_precision = 0;
};

/// Computes g^1 = v(A)·chi0(A)·g where u·chi1 + v·chi0 = 1. Throws DomainError
/// if the unit component is not p-integral, which cannot happen for members.
UnitProjection unit_projection(const StationaryPresentation& pres, const Integer& p, long precision,
                               const GroupElement& g);

/// d_p(g, h) = ||(g - h)^1||_p. Throws DomainError when g or h is not in G.
PadicNorm dp_distance(const StationaryPresentation& pres, const Integer& p, long precision,
                      const GroupElement& g, const GroupElement& h);

struct Membership {
  bool member = false;
  std::optional<GroupElement> element;  // with certificate when member
  std::string reason;                   // why v was rejected
};

/// Decides v in G by the closure criterion: every prime q in the denominator
/// divides det(A), and every q-adic functional takes v into Z_q. The
/// certificate n with A^n v integral is then found by bounded iteration and
/// must agree with the criterion; a mismatch is reported as PrecisionError
/// (no certificate within the bound) or InvariantError (certificate for a
/// rejected vector).
Membership member(const StationaryPresentation& pres, const RatVector& v, long precision = kDefaultPrecision);

/// Validating constructor: throws DomainError when v is not in G.
GroupElement make_element(const StationaryPresentation& pres, const RatVector& v,
                          long precision = kDefaultPrecision);

/// Z_p-rank of the pro-p completion; the unit-root count of chi_A.
long pro_p_corank(const StationaryPresentation& pres, const Integer& p);

/// Row module (Z/p^N)^r · A_n···A_1 approximating G^{*p} from above at stage n.
RowModule limit_prefix_functionals(const InductivePrefix& prefix, const Integer& p, long precision,
                                   std::size_t stage);

} // namespace tfag
