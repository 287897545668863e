#include "oracles.hpp"

#include <algorithm>

namespace oracle {

long uniform(Rng& rng, long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng); }

IntMatrix random_matrix(Rng& rng, std::size_t r, long lo, long hi) {
  IntMatrix m(r, r);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < r; ++j) m(i, j) = uniform(rng, lo, hi);
  return m;
}

IntMatrix random_nonsingular(Rng& rng, std::size_t r, long lo, long hi) {
  for (;;) {
    IntMatrix m = random_matrix(rng, r, lo, hi);
    if (det_cofactor(m) != 0) return m;
  }
}

IntVector random_vector(Rng& rng, std::size_t r, long lo, long hi) {
  IntVector v(r);
  for (auto& x : v) x = uniform(rng, lo, hi);
  return v;
}

Rational det_cofactor(const RatMatrix& a) {
  const std::size_t n = a.rows();
  if (n == 0) return Rational(1);
  if (n == 1) return a(0, 0);
  Rational total(0);
  for (std::size_t j = 0; j < n; ++j) {
    if (a(0, j).is_zero()) continue;
    RatMatrix minor(n - 1, n - 1);
    for (std::size_t i = 1; i < n; ++i)
      for (std::size_t k = 0, c = 0; k < n; ++k)
        if (k != j) minor(i - 1, c++) = a(i, k);
    Rational term = a(0, j) * det_cofactor(minor);
    total = (j % 2 == 0) ? total + term : total - term;
  }
  return total;
}

Integer det_cofactor(const IntMatrix& a) {
  RatMatrix q(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) q(i, j) = Rational(a(i, j));
  return det_cofactor(q).num();
}

IntVector charpoly_interpolated(const IntMatrix& a) {
  const std::size_t r = a.rows();
  std::vector<Rational> xs, ys;
  for (std::size_t t = 0; t <= r; ++t) {
    RatMatrix m(r, r);
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < r; ++j) m(i, j) = Rational(Integer((i == j ? Integer(long(t)) : Integer(0)) - a(i, j)));
    xs.push_back(Rational(long(t)));
    ys.push_back(det_cofactor(m));
  }
  // Lagrange basis expanded into ascending coefficients.
  std::vector<Rational> coeffs(r + 1, Rational(0));
  for (std::size_t i = 0; i <= r; ++i) {
    std::vector<Rational> basis{Rational(1)};
    Rational denom(1);
    for (std::size_t j = 0; j <= r; ++j) {
      if (j == i) continue;
      std::vector<Rational> next(basis.size() + 1, Rational(0));
      for (std::size_t k = 0; k < basis.size(); ++k) {
        next[k + 1] += basis[k];
        next[k] -= basis[k] * xs[j];
      }
      basis = next;
      denom *= xs[i] - xs[j];
    }
    for (std::size_t k = 0; k < basis.size(); ++k) coeffs[k] += basis[k] * ys[i] / denom;
  }
  IntVector out;
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) out.push_back(it->num());
  return out;
}

RatVector mat_vec(const IntMatrix& a, const RatVector& v) {
  RatVector out(a.rows(), Rational(0));
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) out[i] += Rational(a(i, j)) * v[j];
  return out;
}

bool integral(const RatVector& v) {
  return std::all_of(v.begin(), v.end(), [](const Rational& x) { return x.den() == 1; });
}

Integer lcm_den(const RatVector& v) {
  Integer l = 1;
  for (const auto& x : v) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.den().get_mpz_t());
  return l;
}

std::optional<unsigned long> iterate_to_integral(const IntMatrix& a, const RatVector& v, unsigned long bound) {
  RatVector cur = v;
  for (unsigned long n = 0; n <= bound; ++n) {
    if (integral(cur)) return n;
    cur = mat_vec(a, cur);
  }
  return std::nullopt;
}

bool p_divisible_in_group(const IntMatrix& a, const RatVector& v, const Integer& p, long j, unsigned long bound) {
  const Rational scale(Integer(1), ipow(p, static_cast<unsigned long>(j)));
  RatVector w(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) w[i] = v[i] * scale;
  return iterate_to_integral(a, w, bound).has_value();
}

long divisibility_exponent(const IntMatrix& a, const RatVector& v, const Integer& p, long jmax, unsigned long bound) {
  long best = 0;
  for (long j = 1; j <= jmax; ++j) {
    if (!p_divisible_in_group(a, v, p, j, bound)) break;
    best = j;
  }
  return best;
}

Integer mod(const Integer& x, const Integer& m) {
  Integer r;
  mpz_fdiv_r(r.get_mpz_t(), x.get_mpz_t(), m.get_mpz_t());
  return r;
}

long p_adic_valuation(const Integer& x, const Integer& p) {
  Integer y = x;
  long v = 0;
  while (y != 0 && mod(y, p) == 0) {
    y /= p;
    ++v;
  }
  return v;
}

Integer ipow(const Integer& b, unsigned long e) {
  Integer r = 1;
  for (unsigned long i = 0; i < e; ++i) r *= b;
  return r;
}

std::pair<unsigned long, unsigned long> first_power_repeat(const IntMatrix& b, const Integer& m) {
  const std::size_t r = b.rows();
  std::vector<IntMatrix> seen;
  IntMatrix cur = IntMatrix::identity(r);
  auto reduce = [&](IntMatrix x) {
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < r; ++j) x(i, j) = mod(x(i, j), m);
    return x;
  };
  cur = reduce(cur);
  for (unsigned long n = 0;; ++n) {
    for (unsigned long l = 0; l < seen.size(); ++l)
      if (seen[l] == cur) return {n, l};
    seen.push_back(cur);
    cur = reduce(cur * b);
  }
}

std::set<Residues> span_enumerate(const std::vector<Residues>& gens, long modulus, std::size_t dim) {
  std::set<Residues> span{Residues(dim, 0)};
  for (const auto& g : gens) {
    std::set<Residues> next;
    for (const auto& s : span)
      for (long c = 0; c < modulus; ++c) {
        Residues v(dim);
        for (std::size_t i = 0; i < dim; ++i) v[i] = ((s[i] + c * g[i]) % modulus + modulus) % modulus;
        next.insert(v);
      }
    span = std::move(next);
  }
  return span;
}

std::set<Residues> left_kernel_enumerate(const std::vector<Residues>& m, long modulus, std::size_t cols) {
  const std::size_t rows = m.size();
  std::set<Residues> out;
  Residues w(rows, 0);
  for (;;) {
    bool zero = true;
    for (std::size_t j = 0; j < cols && zero; ++j) {
      long s = 0;
      for (std::size_t i = 0; i < rows; ++i) s += w[i] * m[i][j];
      zero = ((s % modulus) + modulus) % modulus == 0;
    }
    if (zero) out.insert(w);
    std::size_t k = 0;
    while (k < rows && ++w[k] == modulus) w[k++] = 0;
    if (k == rows) break;
  }
  return out;
}

IntVector poly_reduce(const IntVector& a, const Integer& m) {
  IntVector out;
  for (const auto& c : a) out.push_back(mod(c, m));
  return out;
}

IntVector poly_mul_mod(const IntVector& a, const IntVector& b, const Integer& m) {
  if (a.empty() || b.empty()) return {};
  IntVector out(a.size() + b.size() - 1, Integer(0));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  return poly_reduce(out, m);
}

long zero_root_multiplicity_mod_p(const IntVector& chi, const Integer& p) {
  long mult = 0;
  for (auto it = chi.rbegin(); it != chi.rend() && mod(*it, p) == 0; ++it) ++mult;
  return mult;
}

namespace {
Integer eval(const IntVector& f, const Integer& x, const Integer& m) {
  Integer acc = 0;
  for (const auto& c : f) acc = mod(acc * x + c, m);
  return acc;
}
IntVector derivative(const IntVector& f) {
  IntVector d;
  const long deg = static_cast<long>(f.size()) - 1;
  for (long i = 0; i < deg; ++i) d.push_back(f[i] * (deg - i));
  return d;
}
} // namespace

Integer newton_root(const IntVector& f, const Integer& seed, const Integer& p, long n) {
  const Integer m = ipow(p, static_cast<unsigned long>(n));
  const IntVector df = derivative(f);
  Integer x = seed;
  for (long i = 0; i < n + 1; ++i) {
    Integer d = eval(df, x, m), inv;
    if (mpz_invert(inv.get_mpz_t(), d.get_mpz_t(), m.get_mpz_t()) == 0) throw std::runtime_error("not a simple root");
    x = mod(x - eval(f, x, m) * inv, m);
  }
  return x;
}

IntMatrix dugas_matrix() {
  return IntMatrix::from_rows({{0, 0, 0, -9}, {1, 0, 0, 0}, {0, 1, 0, 2}, {0, 0, 1, 0}});
}

Integer dugas_alpha(long precision) {
  const Integer p = 3;
  const Integer nu = newton_root({Integer(1), Integer(-2), Integer(9)}, Integer(0), p, precision);
  return mod(nu - 2, ipow(p, static_cast<unsigned long>(precision)));
}

RatVector random_member(Rng& rng, const IntMatrix& a, unsigned long max_n, long lo, long hi) {
  const std::size_t r = a.rows();
  const IntVector x = random_vector(rng, r, lo, hi);
  const unsigned long n = static_cast<unsigned long>(uniform(rng, 0, static_cast<long>(max_n)));
  // Solve A^n g = x by Cramer's rule on A^n.
  IntMatrix an = IntMatrix::identity(r);
  for (unsigned long i = 0; i < n; ++i) an = an * a;
  const Rational d(det_cofactor(an));
  RatVector g(r);
  for (std::size_t k = 0; k < r; ++k) {
    IntMatrix c = an;
    for (std::size_t i = 0; i < r; ++i) c(i, k) = x[i];
    g[k] = Rational(det_cofactor(c)) / d;
  }
  return g;
}

} // namespace oracle
