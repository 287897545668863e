#include "tfag/exact/lattice.hpp"

#include <utility>

namespace tfag {

namespace {

// Row operation on (x, y): (x, y) <- (a x + b y, c x + d y).
void combine(IntVector& x, IntVector& y, const Integer& a, const Integer& b, const Integer& c,
             const Integer& d) {
  for (std::size_t j = 0; j < x.size(); ++j) {
    Integer nx = a * x[j] + b * y[j];
    Integer ny = c * x[j] + d * y[j];
    x[j] = std::move(nx);
    y[j] = std::move(ny);
  }
}

} // namespace

HermiteForm hnf_int(const std::vector<IntVector>& rows, std::size_t dim) {
  std::vector<IntVector> work;
  work.reserve(rows.size());
  for (const auto& r : rows) {
    if (r.size() != dim) throw DimensionError("lattice generators of mixed dimension");
    work.push_back(r);
  }

  std::vector<IntVector> basis;
  std::vector<std::size_t> pivots;
  for (std::size_t col = 0; col < dim && !work.empty(); ++col) {
    // Fold every row's entry in this column into a single gcd row.
    std::size_t lead = work.size();
    for (std::size_t i = 0; i < work.size(); ++i) {
      if (work[i][col] == 0) continue;
      if (lead == work.size()) {
        lead = i;
        continue;
      }
      Integer g, s, t;
      mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), work[lead][col].get_mpz_t(),
                 work[i][col].get_mpz_t());
      Integer u = work[lead][col] / g;
      Integer w = work[i][col] / g;
      // [s t; -w u] has determinant 1.
      combine(work[lead], work[i], s, t, -w, u);
    }
    if (lead == work.size()) continue;

    IntVector pivot_row = std::move(work[lead]);
    work.erase(work.begin() + static_cast<std::ptrdiff_t>(lead));
    if (pivot_row[col] < 0)
      for (auto& x : pivot_row) x = -x;
    for (std::size_t b = 0; b < basis.size(); ++b) {
      Integer q;
      mpz_fdiv_q(q.get_mpz_t(), basis[b][col].get_mpz_t(), pivot_row[col].get_mpz_t());
      if (q != 0)
        for (std::size_t j = 0; j < dim; ++j) basis[b][j] -= q * pivot_row[j];
    }
    basis.push_back(std::move(pivot_row));
    pivots.push_back(col);
    std::erase_if(work, [](const IntVector& r) {
      for (const auto& x : r)
        if (x != 0) return false;
      return true;
    });
  }

  HermiteForm out;
  out.dim = dim;
  out.pivots = std::move(pivots);
  out.basis = IntMatrix(basis.size(), dim);
  for (std::size_t i = 0; i < basis.size(); ++i)
    for (std::size_t j = 0; j < dim; ++j) out.basis(i, j) = basis[i][j];
  return out;
}

HermiteForm hnf_int(const IntMatrix& rows) { return hnf_int(rows.to_rows(), rows.cols()); }

std::optional<IntVector> lattice_member(const HermiteForm& lattice, const RatVector& v) {
  if (v.size() != lattice.dim) throw DimensionError("vector dimension does not match lattice");
  if (!is_integral(v)) return std::nullopt;
  IntVector rest(v.size());
  for (std::size_t j = 0; j < v.size(); ++j) rest[j] = v[j].num();

  IntVector coords(lattice.rank(), Integer(0));
  for (std::size_t i = 0; i < lattice.rank(); ++i) {
    const std::size_t c = lattice.pivots[i];
    const Integer& piv = lattice.basis(i, c);
    if (!mpz_divisible_p(rest[c].get_mpz_t(), piv.get_mpz_t())) return std::nullopt;
    Integer q = rest[c] / piv;
    if (q == 0) continue;
    for (std::size_t j = 0; j < lattice.dim; ++j) rest[j] -= q * lattice.basis(i, j);
    coords[i] = q;
  }
  for (const auto& x : rest)
    if (x != 0) return std::nullopt;
  return coords;
}

} // namespace tfag
