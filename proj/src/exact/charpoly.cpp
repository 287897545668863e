#include "tfag/exact/charpoly.hpp"

namespace tfag {

IntVector charpoly(const IntMatrix& a) {
  if (!a.is_square()) throw DimensionError("characteristic polynomial of a non-square matrix");
  const std::size_t n = a.rows();
  if (n == 0) return {Integer(1)};

  // poly holds the characteristic polynomial of the leading k x k block.
  IntVector poly{Integer(1), Integer(-a(0, 0))};
  for (std::size_t k = 1; k < n; ++k) {
    // Block split: leading k x k block L, column c = A[0..k-1][k],
    // row s = A[k][0..k-1], corner a_kk.
    // Toeplitz column t = (1, -a_kk, -s c, -s L c, ..., -s L^{k-1} c).
    IntVector t(k + 2);
    t[0] = 1;
    t[1] = -a(k, k);
    IntVector v(k);
    for (std::size_t i = 0; i < k; ++i) v[i] = a(i, k);
    for (std::size_t step = 0; step < k; ++step) {
      Integer dot = 0;
      for (std::size_t i = 0; i < k; ++i) dot += a(k, i) * v[i];
      t[step + 2] = -dot;
      if (step + 1 == k) break;
      IntVector next(k, Integer(0));
      for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j) next[i] += a(i, j) * v[j];
      v = std::move(next);
    }
    IntVector next_poly(k + 2, Integer(0));
    for (std::size_t i = 0; i < k + 2; ++i)
      for (std::size_t j = 0; j <= std::min(i, k); ++j) next_poly[i] += t[i - j] * poly[j];
    poly = std::move(next_poly);
  }
  return poly;
}

IntMatrix evaluate_at(const IntVector& coeffs, const IntMatrix& a) {
  if (!a.is_square()) throw DimensionError("polynomial evaluation at a non-square matrix");
  IntMatrix acc(a.rows(), a.cols());
  const IntMatrix id = IntMatrix::identity(a.rows());
  for (const auto& c : coeffs) acc = acc * a + c * id;
  return acc;
}

IntMatrix adjugate(const IntMatrix& a) {
  if (!a.is_square()) throw DimensionError("adjugate of a non-square matrix");
  const std::size_t n = a.rows();
  if (n == 0) return a;
  // A^(n-1) + a_1 A^(n-2) + ... + a_(n-1) I = (-1)^(n+1) adj(A).
  IntVector chi = charpoly(a);
  chi.pop_back();
  IntMatrix out = evaluate_at(chi, a);
  if (n % 2 == 0) out = Integer(-1) * out;
  return out;
}

} // namespace tfag
