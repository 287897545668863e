#pragma once

#include "tfag/exact/matrix.hpp"

#include <optional>
#include <vector>

namespace tfag {

inline constexpr long kDefaultPrecision = 64;

/// G = union over n of A^-n(Z^r) for a nonsingular integer matrix A.
class StationaryPresentation {
public:
  /// Throws DimensionError for a non-square or empty matrix and DomainError
  /// for a singular one.
  explicit StationaryPresentation(IntMatrix a);

  std::size_t rank() const { return a_.rows(); }
  const IntMatrix& matrix() const { return a_; }
  const Integer& det() const { return det_; }
  /// Leading-first coefficients of det(xI - A).
  const IntVector& charpoly() const { return chi_; }

  friend bool operator==(const StationaryPresentation& x, const StationaryPresentation& y) {
    return x.a_ == y.a_;
  }

private:
  IntMatrix a_;
  Integer det_;
  IntVector chi_;
};

/// A finite prefix A_1, ..., A_n of an inductive system of injective maps.
class InductivePrefix {
public:
  /// All matrices must be square, nonsingular, and of one size.
  explicit InductivePrefix(std::vector<IntMatrix> mats);

  std::size_t rank() const { return rank_; }
  std::size_t length() const { return mats_.size(); }
  const std::vector<IntMatrix>& matrices() const { return mats_; }

private:
  std::size_t rank_ = 0;
  std::vector<IntMatrix> mats_;
};

/// An element of Q^r together with the smallest n found so far with A^n v
/// integral. Elements built through `member()` always carry a certificate.
struct GroupElement {
  RatVector v;
  std::optional<unsigned long> cert;

  /// Skips validation; the operations taking elements re-check membership
  /// when no certificate is present.
  static GroupElement unchecked(RatVector v) { return {std::move(v), std::nullopt}; }
};

} // namespace tfag
