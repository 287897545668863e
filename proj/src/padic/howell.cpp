#include "tfag/padic/howell.hpp"

#include <algorithm>

namespace tfag {

namespace {

bool is_zero_row(const IntVector& r) {
  return std::all_of(r.begin(), r.end(), [](const Integer& x) { return x == 0; });
}

void axpy_mod(IntVector& y, const Integer& a, const IntVector& x, const PadicRing& ring) {
  for (std::size_t j = 0; j < y.size(); ++j) {
    if (x[j] == 0) continue;
    y[j] = ring.reduce(y[j] - a * x[j]);
  }
}

} // namespace

std::vector<PadicRowVec> RowModule::basis() const {
  std::vector<PadicRowVec> out;
  out.reserve(rows_.size());
  for (const auto& r : rows_) out.emplace_back(ring_, r);
  return out;
}

RowModule howell_form(const PadicRing& ring, std::size_t dim, const std::vector<IntVector>& generators) {
  RowModule out(ring, dim);
  std::vector<IntVector> pool;
  for (const auto& g : generators) {
    if (g.size() != dim) throw DimensionError("generator dimension mismatch");
    IntVector r(dim);
    for (std::size_t j = 0; j < dim; ++j) r[j] = ring.reduce(g[j]);
    if (!is_zero_row(r)) pool.push_back(std::move(r));
  }

  const long n = ring.precision();
  for (std::size_t col = 0; col < dim && !pool.empty(); ++col) {
    std::size_t best = pool.size();
    long best_val = n;
    for (std::size_t i = 0; i < pool.size(); ++i) {
      long v = ring.valuation(pool[i][col]);
      if (v < best_val) {
        best_val = v;
        best = i;
      }
    }
    if (best == pool.size()) continue;

    IntVector piv = std::move(pool[best]);
    pool.erase(pool.begin() + static_cast<std::ptrdiff_t>(best));

    const Integer pe = ring.power(static_cast<unsigned long>(best_val));
    Integer unit = piv[col] / pe;
    Integer unit_inv = ring.inverse(unit);
    for (auto& x : piv) x = ring.reduce(x * unit_inv);

    // Minimal valuation: p^e divides every other entry in this column.
    for (auto& r : pool) {
      if (r[col] == 0) continue;
      Integer q = r[col] / pe;
      axpy_mod(r, q, piv, ring);
    }
    for (auto& r : out.rows_) {
      Integer q;
      mpz_fdiv_q(q.get_mpz_t(), r[col].get_mpz_t(), pe.get_mpz_t());
      if (q != 0) axpy_mod(r, q, piv, ring);
    }
    // Howell step: p^(N-e)·piv vanishes in this column but may not elsewhere.
    if (best_val > 0) {
      const Integer ann = ring.power(static_cast<unsigned long>(n - best_val));
      IntVector extra(dim);
      for (std::size_t j = 0; j < dim; ++j) extra[j] = ring.reduce(ann * piv[j]);
      if (!is_zero_row(extra)) pool.push_back(std::move(extra));
    }
    std::erase_if(pool, is_zero_row);

    out.rows_.push_back(std::move(piv));
    out.pivot_cols_.push_back(col);
    out.pivot_vals_.push_back(best_val);
  }
  return out;
}

RowModule howell_form(const std::vector<PadicRowVec>& generators) {
  if (generators.empty()) throw ArgumentError("empty generator list needs an explicit ring and dimension");
  const PadicRing& ring = generators.front().ring();
  const std::size_t dim = generators.front().dim();
  std::vector<IntVector> rows;
  rows.reserve(generators.size());
  for (const auto& g : generators) {
    if (!(g.ring() == ring) || g.dim() != dim) throw ArgumentError("generators must share (p, N, dim)");
    rows.push_back(g.residues());
  }
  return howell_form(ring, dim, rows);
}

bool RowModule::contains(const IntVector& w) const {
  if (w.size() != dim_) throw DimensionError("vector dimension does not match module");
  IntVector rest(dim_);
  for (std::size_t j = 0; j < dim_; ++j) rest[j] = ring_.reduce(w[j]);
  std::size_t next = 0;
  for (std::size_t col = 0; col < dim_; ++col) {
    if (rest[col] == 0) continue;
    while (next < rows_.size() && pivot_cols_[next] < col) ++next;
    if (next == rows_.size() || pivot_cols_[next] != col) return false;
    const Integer pe = ring_.power(static_cast<unsigned long>(pivot_vals_[next]));
    if (mpz_divisible_p(rest[col].get_mpz_t(), pe.get_mpz_t()) == 0) return false;
    Integer q = rest[col] / pe;
    axpy_mod(rest, q, rows_[next], ring_);
  }
  return true;
}

bool RowModule::contains(const PadicRowVec& w) const {
  if (!(w.ring() == ring_)) throw ArgumentError("vector lives in a different residue ring");
  return contains(w.residues());
}

long RowModule::length() const {
  long total = 0;
  for (long e : pivot_vals_) total += ring_.precision() - e;
  return total;
}

bool RowModule::is_free_of_rank(std::size_t k) const {
  const long n = ring_.precision();
  if (length() != n * static_cast<long>(k)) return false;
  // M = sum of Z/p^a_i with sum a_i = N·k; p^(N-1)·M has length #{a_i = N}.
  const Integer scale = ring_.power(static_cast<unsigned long>(n - 1));
  std::vector<IntVector> top;
  for (const auto& r : rows_) {
    IntVector v(r.size());
    for (std::size_t i = 0; i < r.size(); ++i) v[i] = r[i] * scale;
    top.push_back(std::move(v));
  }
  return howell_form(ring_, dim_, top).length() == static_cast<long>(k);
}

bool RowModule::contains(const RowModule& other) const {
  if (!(other.ring_ == ring_) || other.dim_ != dim_) throw ArgumentError("modules are not comparable");
  return std::all_of(other.rows_.begin(), other.rows_.end(), [this](const IntVector& r) { return contains(r); });
}

RowModule left_kernel(const PadicMatrix& m) {
  const std::size_t r = m.rows();
  const std::size_t c = m.cols();
  std::vector<IntVector> augmented(r, IntVector(c + r, Integer(0)));
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t j = 0; j < c; ++j) augmented[i][j] = m.residues()(i, j);
    augmented[i][c + i] = 1;
  }
  RowModule full = howell_form(m.ring(), c + r, augmented);
  std::vector<IntVector> kernel_rows;
  for (std::size_t i = 0; i < full.rank(); ++i) {
    if (full.pivot_cols()[i] < c) continue;
    const auto& row = full.rows()[i];
    kernel_rows.emplace_back(row.begin() + static_cast<std::ptrdiff_t>(c), row.end());
  }
  return howell_form(m.ring(), r, kernel_rows);
}

RowModule row_span(const PadicMatrix& m) {
  return howell_form(m.ring(), m.cols(), m.residues().to_rows());
}

} // namespace tfag
