#pragma once

#include "tfag/groups/presentation.hpp"

#include <optional>
#include <vector>

namespace tfag {

/// G = union of alpha^n(F) inside an ambient Q^r, with F free of rank r and
/// F contained in alpha(F).
///
/// `basis` rows are a Z-basis f_1..f_r of F in ambient coordinates; `alpha`
/// acts on ambient column vectors. The same ambient frame is kept through
/// every construction below, so results stay comparable.
class IncreasingPresentation {
public:
  /// Throws DimensionError on shape problems and DomainError when basis or
  /// alpha is singular or F is not contained in alpha(F).
  IncreasingPresentation(RatMatrix basis, RatMatrix alpha);

  /// F = Z^r, alpha = A^-1.
  static IncreasingPresentation from_stationary(const StationaryPresentation& pres);

  std::size_t rank() const { return basis_.rows(); }
  const RatMatrix& basis() const { return basis_; }
  const RatMatrix& alpha() const { return alpha_; }

  /// Integer B with f_i = sum_j B_ji alpha(f_j).
  const IntMatrix& transition() const { return transition_; }

  /// Coordinates x of an ambient vector a = sum_i x_i f_i.
  RatVector to_coordinates(const RatVector& ambient) const;
  RatVector to_ambient(const RatVector& coords) const;

private:
  struct Unchecked {};
  IncreasingPresentation(Unchecked, RatMatrix basis, RatMatrix alpha, IntMatrix transition)
      : basis_(std::move(basis)), alpha_(std::move(alpha)), transition_(std::move(transition)) {}
  friend struct Adjunction adjoin_element(const IncreasingPresentation& pres, const RatVector& z);

  RatMatrix basis_;
  RatMatrix alpha_;
  IntMatrix transition_;
};

/// The stationary presentation with matrix transition(): union of B^-n(Z^r)
/// in F-coordinates, isomorphic to G through x -> sum_i x_i f_i.
StationaryPresentation increasing_to_limit(const IncreasingPresentation& pres);

struct PowerCongruence {
  unsigned long k = 0;
  unsigned long l = 0;
  friend bool operator==(const PowerCongruence&, const PowerCongruence&) = default;
};

/// First collision B^k = B^l mod m (k > l >= 0) in the sequence of powers.
/// Throws ArgumentError for m < 2 or a non-square B.
PowerCongruence power_congruence(const IntMatrix& b, const Integer& m);

/// Result of adjoining z to G.
struct Adjunction {
  IncreasingPresentation increasing;  // (F', alpha^k) in the ambient frame
  StationaryPresentation stationary;  // transition matrix of (F', alpha^k)
  Integer order;                      // least m >= 1 with m·z in F
  std::optional<PowerCongruence> congruence;  // absent when z is already in F
  unsigned long k = 1;
  /// The base lattice was moved to alpha^l(F) because <F, z> was not
  /// contained in alpha^k(<F, z>).
  bool rebased = false;
};

/// Builds a stationary presentation of <G, z> for any z in G ⊗ Q by
/// adjoining z to F and passing to a power of alpha.
Adjunction adjoin_element(const IncreasingPresentation& pres, const RatVector& z);
Adjunction adjoin_element(const StationaryPresentation& pres, const RatVector& z);

/// alpha: G -> H and beta: H -> G in ambient coordinates, with
/// alpha·beta = n·id and beta·alpha = n·id.
class QuasiIsoData {
public:
  /// Throws DomainError unless both composites equal n·id.
  QuasiIsoData(Integer n, RatMatrix alpha, RatMatrix beta);

  const Integer& n() const { return n_; }
  const RatMatrix& alpha() const { return alpha_; }
  const RatMatrix& beta() const { return beta_; }

private:
  Integer n_;
  RatMatrix alpha_;
  RatMatrix beta_;
};

struct QuasiRebuild {
  IncreasingPresentation increasing;
  StationaryPresentation stationary;
  std::vector<Adjunction> steps;
};

/// Stationary presentation of G from a stationary H quasi-isomorphic to it
/// and coset representatives of G / beta(H). Starts at beta(H) and adjoins
/// the representatives one by one. Throws DomainError when some n·z is not in
/// beta(H).
QuasiRebuild quasi_to_stationary(const StationaryPresentation& h, const QuasiIsoData& data,
                                 const std::vector<RatVector>& reps);

} // namespace tfag
