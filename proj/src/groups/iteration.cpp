#include "tfag/groups/iteration.hpp"

#include "tfag/exact/primes.hpp"

#include <algorithm>

namespace tfag {

unsigned long max_denominator_exponent(const RatVector& v) {
  Integer d = common_denominator(v);
  unsigned long e = 0;
  if (d == 1) return 0;
  for (const auto& pp : factor_integer(d)) e = std::max(e, pp.exponent);
  return e;
}

unsigned long certificate_bound(const StationaryPresentation& pres, const RatVector& v) {
  const unsigned long r = pres.rank();
  return r * (max_denominator_exponent(v) + r) + r;
}

unsigned long metric_bound(const StationaryPresentation& pres, const RatVector& v, long precision) {
  const unsigned long r = pres.rank();
  return r * (static_cast<unsigned long>(precision) + max_denominator_exponent(v) + r) + r;
}

std::optional<unsigned long> integrality_certificate(const StationaryPresentation& pres, const RatVector& v,
                                                     unsigned long bound) {
  if (v.size() != pres.rank()) throw DimensionError("vector does not match presentation rank");
  RatVector cur = v;
  for (unsigned long n = 0; n <= bound; ++n) {
    if (is_integral(cur)) return n;
    cur = pres.matrix().apply(cur);
  }
  return std::nullopt;
}

std::optional<unsigned long> zero_power_witness(const IntMatrix& a, const Integer& p, unsigned long bound) {
  auto reduce = [&](IntMatrix m) {
    for (std::size_t i = 0; i < m.rows(); ++i)
      for (std::size_t j = 0; j < m.cols(); ++j) mpz_fdiv_r(m(i, j).get_mpz_t(), m(i, j).get_mpz_t(), p.get_mpz_t());
    return m;
  };
  const IntMatrix base = reduce(a);
  IntMatrix cur = base;
  for (unsigned long n = 1; n <= bound; ++n) {
    if (cur.is_zero()) return n;
    cur = reduce(cur * base);
  }
  return std::nullopt;
}

std::optional<long> divisibility_depth(const StationaryPresentation& pres, const RatVector& v, const Integer& p,
                                       long precision, unsigned long bound) {
  if (v.size() != pres.rank()) throw DimensionError("vector does not match presentation rank");
  std::optional<long> best;
  RatVector cur = v;
  for (unsigned long n = 0; n <= bound; ++n) {
    if (is_integral(cur)) {
      long depth = precision;
      for (const auto& x : cur)
        if (!x.is_zero()) depth = std::min(depth, valuation_unchecked(x.num(), p));
      best = std::max(best.value_or(0), depth);
      if (best == precision) break;
    }
    cur = pres.matrix().apply(cur);
  }
  return best;
}

} // namespace tfag
