#pragma once

#include "tfag/exact/matrix.hpp"

#include <optional>
#include <vector>

namespace tfag {

/// Row-style Hermite normal form of an integer lattice: basis rows in echelon
/// order, positive pivots, entries above each pivot reduced into [0, pivot).
struct HermiteForm {
  IntMatrix basis;                  // rank x dim
  std::vector<std::size_t> pivots;  // pivot column of each basis row
  std::size_t dim = 0;

  std::size_t rank() const { return basis.rows(); }
  friend bool operator==(const HermiteForm&, const HermiteForm&) = default;
};

/// HNF of the lattice spanned by `rows` (all of length `dim`).
HermiteForm hnf_int(const std::vector<IntVector>& rows, std::size_t dim);
HermiteForm hnf_int(const IntMatrix& rows);

/// Integer coordinates c with c·basis = v when v lies in the row lattice.
std::optional<IntVector> lattice_member(const HermiteForm& lattice, const RatVector& v);

} // namespace tfag
