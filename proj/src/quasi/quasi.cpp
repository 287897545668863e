#include "tfag/quasi/quasi.hpp"

#include "tfag/exact/charpoly.hpp"
#include "tfag/exact/lattice.hpp"
#include "tfag/exact/primes.hpp"
#include "tfag/groups/groups.hpp"

#include <numeric>
#include <string>
#include <unordered_map>

namespace tfag {

namespace {

IntMatrix transition_of(const RatMatrix& basis, const RatMatrix& alpha) {
  // f_i = sum_j B_ji alpha(f_j)  <=>  F^T = alpha·F^T·B  <=>  B = F^-T alpha^-1 F^T.
  const RatMatrix ft = basis.transpose();
  RatMatrix b = inverse(ft) * inverse(alpha) * ft;
  try {
    return to_integer(b);
  } catch (const DomainError&) {
    throw DomainError("F is not contained in alpha(F): transition matrix is not integral");
  }
}

RatMatrix scaled(const IntMatrix& m, const Integer& den) {
  RatMatrix out(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) = Rational(m(i, j), den);
  return out;
}

Integer power(const Integer& x, unsigned long k) {
  Integer out;
  mpz_pow_ui(out.get_mpz_t(), x.get_mpz_t(), k);
  return out;
}

std::pair<Integer, IntMatrix> integral_scaling(const RatMatrix& m) {
  Integer d = 1;
  for (const auto& x : m.data()) mpz_lcm(d.get_mpz_t(), d.get_mpz_t(), x.den().get_mpz_t());
  return {d, to_integer(Rational(d) * m)};
}

// x/den in lowest terms when every prime of den divides radix. Dividing out
// the known primes avoids a full gcd on very large entries.
class Reducer {
public:
  explicit Reducer(const Integer& radix) {
    if (mpz_sizeinbase(radix.get_mpz_t(), 2) > 192) return;
    try {
      for (const auto& pp : factor_integer(radix)) primes_.push_back(pp.prime);
      factored_ = true;
    } catch (const DomainError&) {
    }
  }

  Rational operator()(Integer x, Integer den) const {
    if (!factored_) return Rational(x, den);
    if (den < 0) {
      x = -x;
      den = -den;
    }
    if (x == 0) return Rational(0);
    Integer tmp;
    for (const auto& q : primes_) {
      if (!mpz_divisible_p(x.get_mpz_t(), q.get_mpz_t()) || !mpz_divisible_p(den.get_mpz_t(), q.get_mpz_t())) continue;
      const unsigned long vx = mpz_remove(tmp.get_mpz_t(), x.get_mpz_t(), q.get_mpz_t());
      const unsigned long vd = mpz_remove(tmp.get_mpz_t(), den.get_mpz_t(), q.get_mpz_t());
      const Integer qe = power(q, std::min(vx, vd));
      mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), qe.get_mpz_t());
      mpz_divexact(den.get_mpz_t(), den.get_mpz_t(), qe.get_mpz_t());
    }
    return Rational::from_lowest_terms(x, den);
  }

private:
  std::vector<Integer> primes_;
  bool factored_ = false;
};

// alpha^-1 = F^T B F^-T, so alpha^k = F^T adj(B)^k F^-T / det(B)^k.
RatMatrix alpha_power(const IncreasingPresentation& pres, const IntMatrix& adj_k, const Integer& det_k,
                      const Integer& det) {
  const RatMatrix ft = pres.basis().transpose();
  const auto [d1, fi] = integral_scaling(ft);
  const auto [d2, gi] = integral_scaling(inverse(ft));
  const IntMatrix num = fi * adj_k * gi;
  const Integer den = d1 * d2 * det_k;
  const Reducer reduce(d1 * d2 * abs(det));
  RatMatrix out(num.rows(), num.cols());
  for (std::size_t i = 0; i < num.rows(); ++i)
    for (std::size_t j = 0; j < num.cols(); ++j) out(i, j) = reduce(num(i, j), den);
  return out;
}

struct Extension {
  RatMatrix lattice;  // rows: basis of Z^r + Z x in base coordinates
  IntMatrix stationary;  // W^-T B^k W^T
};

// Z^r + Z·x (x = v/m in base coordinates) and the check that B^k maps it into
// itself, i.e. that it is contained in alpha^k of itself.
std::optional<Extension> extend_lattice(const IntMatrix& bk, const RatVector& x, const Integer& m) {
  const std::size_t r = bk.rows();
  std::vector<IntVector> gens;
  for (std::size_t i = 0; i < r; ++i) {
    IntVector e(r, Integer(0));
    e[i] = m;
    gens.push_back(std::move(e));
  }
  IntVector v(r);
  for (std::size_t i = 0; i < r; ++i) v[i] = (x[i] * Rational(m)).num();
  gens.push_back(v);
  const HermiteForm h = hnf_int(gens, r);
  if (h.rank() != r) throw InvariantError("extended lattice lost rank");

  for (std::size_t i = 0; i < r; ++i)
    if (!lattice_member(h, to_rational(bk.apply(h.basis.row(i))))) return std::nullopt;

  RatMatrix w = scaled(h.basis, m);
  RatMatrix wt = w.transpose();
  IntMatrix c = to_integer(inverse(wt) * to_rational(bk) * wt);
  return Extension{std::move(w), std::move(c)};
}

} // namespace

IncreasingPresentation::IncreasingPresentation(RatMatrix basis, RatMatrix alpha)
    : basis_(std::move(basis)), alpha_(std::move(alpha)) {
  if (!basis_.is_square() || !alpha_.is_square() || basis_.rows() != alpha_.rows() || basis_.rows() == 0)
    throw DimensionError("basis and alpha must be square matrices of one size");
  if (det_exact(basis_).is_zero()) throw DomainError("F basis is singular");
  if (det_exact(alpha_).is_zero()) throw DomainError("alpha is singular");
  transition_ = transition_of(basis_, alpha_);
}

IncreasingPresentation IncreasingPresentation::from_stationary(const StationaryPresentation& pres) {
  return IncreasingPresentation(RatMatrix::identity(pres.rank()), inverse(pres.matrix()));
}

RatVector IncreasingPresentation::to_coordinates(const RatVector& ambient) const {
  return solve(basis_.transpose(), ambient);
}

RatVector IncreasingPresentation::to_ambient(const RatVector& coords) const {
  return basis_.transpose().apply(coords);
}

StationaryPresentation increasing_to_limit(const IncreasingPresentation& pres) {
  return StationaryPresentation(pres.transition());
}

PowerCongruence power_congruence(const IntMatrix& b, const Integer& m) {
  if (!b.is_square()) throw ArgumentError("power congruence needs a square matrix");
  if (m < 2) throw ArgumentError("modulus must be at least 2");
  const std::size_t r = b.rows();
  auto reduce = [&](IntMatrix x) {
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < r; ++j) mpz_fdiv_r(x(i, j).get_mpz_t(), x(i, j).get_mpz_t(), m.get_mpz_t());
    return x;
  };
  auto key = [](const IntMatrix& x) {
    std::string s;
    for (const auto& e : x.data()) {
      s += e.get_str(16);
      s += ',';
    }
    return s;
  };
  Integer cap;
  mpz_pow_ui(cap.get_mpz_t(), m.get_mpz_t(), static_cast<unsigned long>(r * r));
  cap += 1;

  const IntMatrix base = reduce(b);
  std::unordered_map<std::string, unsigned long> seen;
  IntMatrix cur = IntMatrix::identity(r);
  if (r > 0) cur = reduce(cur);
  for (unsigned long n = 0; cap >= n; ++n) {
    auto [it, fresh] = seen.emplace(key(cur), n);
    if (!fresh) return {n, it->second};
    cur = reduce(cur * base);
  }
  throw InvariantError("no repeated power found below m^(r^2)+1");
}

Adjunction adjoin_element(const IncreasingPresentation& pres, const RatVector& z) {
  if (z.size() != pres.rank()) throw DimensionError("adjoined vector does not match rank");
  const IntMatrix& b = pres.transition();
  const RatVector x = pres.to_coordinates(z);
  const Integer m = common_denominator(x);
  if (m == 1) return {pres, increasing_to_limit(pres), m, std::nullopt, 1, false};

  const PowerCongruence pc = power_congruence(b, m);
  const unsigned long l1 = pc.k, l2 = pc.l, d = l1 - l2;
  // (B^l1 - B^l2)·(m x) = 0 mod m, i.e. z - alpha^d(z) lies in alpha^l1(F).
  {
    IntVector v(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) v[i] = (x[i] * Rational(m)).num();
    IntVector diff = (b.pow(l1) - b.pow(l2)).apply(v);
    for (const auto& e : diff)
      if (!mpz_divisible_p(e.get_mpz_t(), m.get_mpz_t()))
        throw InvariantError("power congruence does not annihilate the adjoined element");
  }
  // k = l1 - l2 suffices over alpha^l2(F) and equals l1 when l2 = 0.
  const unsigned long k = d;

  const Integer det = det_exact(b);
  const IntMatrix adj = adjugate(b);
  const IntMatrix adj_k = adj.pow(k);
  const Integer det_k = power(det, k);
  const IntMatrix bk = b.pow(k);
  const RatMatrix alpha_k = alpha_power(pres, adj_k, det_k, det);

  // w: new basis rows in F-coordinates, c: transition of (F', alpha^k).
  // alpha^k F'^T c = F'^T reduces to adj(B)^k W^T c = det(B)^k W^T.
  auto finish = [&](const RatMatrix& w, IntMatrix c, bool rebased) -> Adjunction {
    const IntMatrix wi = integral_scaling(w.transpose()).second;
    if (!(adj_k * wi * c == det_k * wi)) throw InvariantError("transition mismatch after adjunction");
    IncreasingPresentation next(IncreasingPresentation::Unchecked{}, w * pres.basis(), alpha_k, c);
    StationaryPresentation stat(std::move(c));
    return {std::move(next), std::move(stat), m, pc, k, rebased};
  };

  if (auto ext = extend_lattice(bk, x, m)) return finish(ext->lattice, std::move(ext->stationary), false);

  // Rebase on alpha^l2(F), whose basis in F-coordinates is (B^-l2)^T. Its
  // transition is still B, the coordinates become x~ = B^l2 x, and
  // B^l2 (B^k - I) = 0 mod m gives B^k x~ - x~ integral.
  const RatMatrix shift = scaled(adj.pow(l2), power(det, l2)).transpose();
  const RatVector xs = to_rational(b.pow(l2)).apply(x);
  const Integer ms = common_denominator(xs);
  if (ms == 1) return finish(shift, bk, true);
  auto ext = extend_lattice(bk, xs, ms);
  if (!ext) throw InvariantError("adjunction failed even over the shifted base lattice");
  return finish(ext->lattice * shift, std::move(ext->stationary), true);
}

Adjunction adjoin_element(const StationaryPresentation& pres, const RatVector& z) {
  return adjoin_element(IncreasingPresentation::from_stationary(pres), z);
}

QuasiIsoData::QuasiIsoData(Integer n, RatMatrix alpha, RatMatrix beta)
    : n_(std::move(n)), alpha_(std::move(alpha)), beta_(std::move(beta)) {
  if (n_ < 1) throw ArgumentError("quasi-isomorphism multiplier must be positive");
  if (!alpha_.is_square() || !beta_.is_square() || alpha_.rows() != beta_.rows())
    throw DimensionError("quasi-isomorphism maps must be square of one size");
  const RatMatrix target = Rational(n_) * RatMatrix::identity(alpha_.rows());
  if (!(alpha_ * beta_ == target)) throw DomainError("alpha·beta is not n·id");
  if (!(beta_ * alpha_ == target)) throw DomainError("beta·alpha is not n·id");
}

QuasiRebuild quasi_to_stationary(const StationaryPresentation& h, const QuasiIsoData& data,
                                 const std::vector<RatVector>& reps) {
  if (data.beta().rows() != h.rank()) throw DimensionError("quasi-isomorphism rank differs from H");
  // beta(H): F = beta(Z^r), alpha_G = beta·A^-1·beta^-1.
  const RatMatrix beta_inv = inverse(data.beta());
  IncreasingPresentation cur(data.beta().transpose(), data.beta() * inverse(h.matrix()) * beta_inv);

  for (const auto& z : reps) {
    if (z.size() != h.rank()) throw DimensionError("coset representative does not match rank");
    RatVector nz(z.size());
    for (std::size_t i = 0; i < z.size(); ++i) nz[i] = z[i] * Rational(data.n());
    if (!member(h, beta_inv.apply(nz)).member)
      throw DomainError("n·z is not in beta(H) for a coset representative");
  }

  std::vector<Adjunction> steps;
  for (const auto& z : reps) {
    steps.push_back(adjoin_element(cur, z));
    cur = steps.back().increasing;
  }
  StationaryPresentation stat = increasing_to_limit(cur);
  return {std::move(cur), std::move(stat), std::move(steps)};
}

} // namespace tfag
