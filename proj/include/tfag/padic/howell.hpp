#pragma once

#include "tfag/padic/padic.hpp"

#include <vector>

namespace tfag {

/// A submodule of (Z/p^N)^dim held in Howell normal form.
///
/// Basis rows are in echelon order; the pivot of row i sits in column
/// pivot_cols[i] and equals p^pivot_vals[i] exactly; entries above a pivot
/// are reduced into [0, p^e). Every module element whose first c coordinates
/// vanish is a combination of the basis rows with pivot column >= c, which is
/// what makes the form canonical: two generating sets give identical bases
/// iff they span the same module.
class RowModule {
public:
  RowModule(PadicRing ring, std::size_t dim) : ring_(std::move(ring)), dim_(dim) {}

  const PadicRing& ring() const { return ring_; }
  std::size_t dim() const { return dim_; }
  /// Number of basis rows (not the minimal number of generators).
  std::size_t rank() const { return rows_.size(); }
  /// log_p of the module size: sum of N - e over the pivots p^e.
  long length() const;
  /// Free of rank k, i.e. isomorphic to (Z/p^N)^k.
  bool is_free_of_rank(std::size_t k) const;
  const std::vector<IntVector>& rows() const { return rows_; }
  const std::vector<std::size_t>& pivot_cols() const { return pivot_cols_; }
  const std::vector<long>& pivot_vals() const { return pivot_vals_; }
  std::vector<PadicRowVec> basis() const;

  /// True iff w reduces to zero against the basis.
  bool contains(const IntVector& w) const;
  bool contains(const PadicRowVec& w) const;
  /// Every basis row of `other` lies in this module.
  bool contains(const RowModule& other) const;

  friend bool operator==(const RowModule&, const RowModule&) = default;

private:
  friend RowModule howell_form(const PadicRing& ring, std::size_t dim,
                               const std::vector<IntVector>& generators);

  PadicRing ring_;
  std::size_t dim_;
  std::vector<IntVector> rows_;
  std::vector<std::size_t> pivot_cols_;
  std::vector<long> pivot_vals_;
};

RowModule howell_form(const PadicRing& ring, std::size_t dim, const std::vector<IntVector>& generators);
/// Requires a uniform ring and dimension; throws ArgumentError otherwise.
/// An empty list needs the explicit overload above.
RowModule howell_form(const std::vector<PadicRowVec>& generators);

/// Howell basis of { w : w·M = 0 mod p^N }.
RowModule left_kernel(const PadicMatrix& m);

/// Row span (Z/p^N)^rows · M.
RowModule row_span(const PadicMatrix& m);

inline bool row_module_contains(const RowModule& m, const PadicRowVec& w) { return m.contains(w); }

} // namespace tfag
