#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "oracles.hpp"
#include "tfag/exact/charpoly.hpp"
#include "tfag/exact/lattice.hpp"
#include "tfag/exact/primes.hpp"

using namespace tfag;

namespace {

IntVector iv(std::initializer_list<long> xs) {
  IntVector v;
  for (long x : xs) v.push_back(Integer(x));
  return v;
}

std::set<std::vector<long>> box_points(const std::vector<IntVector>& gens, long coeff, long box) {
  std::set<std::vector<long>> pts;
  const std::size_t k = gens.size(), dim = gens.front().size();
  std::vector<long> c(k, -coeff);
  for (;;) {
    std::vector<long> v(dim, 0);
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = 0; j < dim; ++j) v[j] += c[i] * gens[i][j].get_si();
    if (std::all_of(v.begin(), v.end(), [&](long x) { return std::abs(x) <= box; })) pts.insert(v);
    std::size_t i = 0;
    while (i < k && ++c[i] > coeff) c[i++] = -coeff;
    if (i == k) break;
  }
  return pts;
}

} // namespace

TEST_CASE("rational normalization and parsing") {
  CHECK(Rational(Integer(4), Integer(-6)) == Rational::parse("-2/3"));
  CHECK(Rational::parse("-4/6").den() == 3);
  CHECK(Rational::parse("12").is_integer());
  CHECK(Rational::parse(" 7/1 ") == Rational(7));
  CHECK_THROWS(Rational::parse("1/0"));
  CHECK_THROWS(Rational::parse("x"));
  CHECK(Rational::parse("3/9").to_string() == "1/3");
}

TEST_CASE("p_valuation examples") {
  CHECK(p_valuation(Rational(9), Integer(3)) == 2);
  CHECK(p_valuation(Rational(Integer(1), Integer(3)), Integer(3)) == -1);
  CHECK(p_valuation(Rational(Integer(10), Integer(7)), Integer(5)) == 1);
  CHECK_FALSE(p_valuation(Rational(0), Integer(5)).has_value());
  CHECK_THROWS_AS(p_valuation(Rational(3), Integer(4)), ArgumentError);
}

TEST_CASE("charpoly examples") {
  CHECK(charpoly(oracle::dugas_matrix()) == iv({1, 0, -2, 0, 9}));
  CHECK(charpoly(IntMatrix::identity(2)) == iv({1, -2, 1}));
  CHECK_THROWS_AS(charpoly(IntMatrix(2, 3)), DimensionError);
}

TEST_CASE("charpoly agrees with the cofactor oracle on random 3x3 and 4x4") {
  oracle::Rng rng(11);
  for (int t = 0; t < 60; ++t) {
    const IntMatrix a = oracle::random_matrix(rng, 3 + t % 2, -5, 5);
    CHECK(charpoly(a) == oracle::charpoly_interpolated(a));
  }
}

TEST_CASE("Cayley-Hamilton") {
  oracle::Rng rng(12);
  for (int t = 0; t < 50; ++t) {
    const std::size_t r = 1 + t % 6;
    const IntMatrix a = oracle::random_matrix(rng, r, -9, 9);
    CHECK(evaluate_at(charpoly(a), a).is_zero());
  }
}

TEST_CASE("determinant examples") {
  CHECK(det_exact(oracle::dugas_matrix()) == 9);
  CHECK(oracle::det_cofactor(oracle::dugas_matrix()) == 9);
  CHECK(det_exact(IntMatrix::identity(5)) == 1);
  CHECK(det_exact(IntMatrix::from_rows({{2, 0}, {0, 3}})) == 6);
  CHECK_THROWS_AS(det_exact(IntMatrix(2, 1)), DimensionError);
}

TEST_CASE("det equals signed constant coefficient, 200 random matrices") {
  oracle::Rng rng(13);
  for (int t = 0; t < 200; ++t) {
    const std::size_t r = 1 + t % 6;
    const IntMatrix a = oracle::random_matrix(rng, r, -9, 9);
    const IntVector chi = charpoly(a);
    const Integer expected = (r % 2 == 0) ? chi.back() : Integer(-chi.back());
    CHECK(det_exact(a) == expected);
    if (r <= 5) CHECK(det_exact(a) == oracle::det_cofactor(a));
  }
}

TEST_CASE("adjugate equals the transposed cofactor matrix") {
  oracle::Rng rng(17);
  for (int t = 0; t < 100; ++t) {
    const std::size_t r = 1 + t % 5;
    const IntMatrix a = oracle::random_matrix(rng, r, -4, 4);
    IntMatrix expected(r, r);
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < r; ++j) {
        if (r == 1) {
          expected(j, i) = 1;
          continue;
        }
        IntMatrix minor(r - 1, r - 1);
        for (std::size_t x = 0, mx = 0; x < r; ++x) {
          if (x == i) continue;
          for (std::size_t y = 0, my = 0; y < r; ++y) {
            if (y == j) continue;
            minor(mx, my++) = a(x, y);
          }
          ++mx;
        }
        const Integer c = oracle::det_cofactor(minor);
        expected(j, i) = (i + j) % 2 == 0 ? c : Integer(-c);
      }
    CHECK(adjugate(a) == expected);
    CHECK(a * adjugate(a) == det_exact(a) * IntMatrix::identity(r));
  }
}

TEST_CASE("rational inverse and solve") {
  oracle::Rng rng(14);
  for (int t = 0; t < 30; ++t) {
    const IntMatrix a = oracle::random_nonsingular(rng, 1 + t % 4, -6, 6);
    const RatMatrix q = to_rational(a);
    CHECK(q * inverse(q) == RatMatrix::identity(a.rows()));
    const RatVector b = to_rational(oracle::random_vector(rng, a.rows(), -9, 9));
    CHECK(q.apply(solve(q, b)) == b);
  }
  CHECK_THROWS_AS(inverse(RatMatrix(2, 2)), DomainError);
  CHECK_THROWS_AS(to_integer(RatMatrix::from_rows({{Rational::parse("1/2")}})), DomainError);
  CHECK_THROWS_AS(IntMatrix::from_rows({iv({1, 2}), iv({3})}), DimensionError);
}

TEST_CASE("HNF examples") {
  const HermiteForm h = hnf_int({iv({2, 0}), iv({0, 2}), iv({1, 1})}, 2);
  CHECK(h.rank() == 2);
  CHECK(h.basis == IntMatrix::from_rows({iv({1, 1}), iv({0, 2})}));
  // Same lattice points as the generators, enumerated in a box.
  CHECK(box_points({iv({2, 0}), iv({0, 2}), iv({1, 1})}, 6, 4) == box_points(h.basis.to_rows(), 6, 4));

  CHECK(hnf_int({iv({1, 0}), iv({0, 1})}, 2).basis == IntMatrix::identity(2));
  CHECK(hnf_int({iv({0, 0})}, 2).rank() == 0);
}

TEST_CASE("lattice membership examples") {
  const HermiteForm h = hnf_int({iv({1, 1}), iv({0, 2})}, 2);
  auto c = lattice_member(h, to_rational(iv({1, 3})));
  REQUIRE(c.has_value());
  CHECK(*c == iv({1, 1}));
  CHECK_FALSE(lattice_member(h, to_rational(iv({1, 2}))).has_value());
  CHECK(lattice_member(h, to_rational(iv({0, 0}))) == iv({0, 0}));
  CHECK_FALSE(lattice_member(h, RatVector{Rational::parse("1/2"), Rational(1)}).has_value());
}

TEST_CASE("HNF idempotent, canonical and span preserving") {
  oracle::Rng rng(15);
  for (int t = 0; t < 100; ++t) {
    const std::size_t dim = 1 + t % 4;
    std::vector<IntVector> gens;
    const long count = oracle::uniform(rng, 1, 5);
    for (long i = 0; i < count; ++i) gens.push_back(oracle::random_vector(rng, dim, -7, 7));
    const HermiteForm h = hnf_int(gens, dim);
    CHECK(hnf_int(h.basis.to_rows(), dim) == h);
    for (std::size_t i = 0; i < h.rank(); ++i) {
      const std::size_t pc = h.pivots[i];
      CHECK(h.basis(i, pc) > 0);
      for (std::size_t k = 0; k < i; ++k) {
        CHECK(h.basis(k, pc) >= 0);
        CHECK(h.basis(k, pc) < h.basis(i, pc));
      }
      for (std::size_t j = 0; j < pc; ++j) CHECK(h.basis(i, j) == 0);
    }
    const HermiteForm g = hnf_int(gens, dim);
    for (const auto& v : gens) CHECK(lattice_member(h, to_rational(v)).has_value());
    for (std::size_t i = 0; i < h.rank(); ++i) {
      // Each HNF row is an integer combination of the generators.
      CHECK(lattice_member(g, to_rational(h.basis.row(i))).has_value());
    }
    // Coordinates reproduce the vector.
    const IntVector v = gens.front();
    auto c = lattice_member(h, to_rational(v));
    REQUIRE(c.has_value());
    IntVector back(dim, Integer(0));
    for (std::size_t i = 0; i < h.rank(); ++i)
      for (std::size_t j = 0; j < dim; ++j) back[j] += (*c)[i] * h.basis(i, j);
    CHECK(back == v);
  }
}

TEST_CASE("HNF of a square nonsingular basis has |det| as pivot product") {
  oracle::Rng rng(16);
  for (int t = 0; t < 50; ++t) {
    const IntMatrix a = oracle::random_nonsingular(rng, 1 + t % 4, -8, 8);
    const HermiteForm h = hnf_int(a);
    Integer prod = 1;
    for (std::size_t i = 0; i < h.rank(); ++i) prod *= h.basis(i, h.pivots[i]);
    CHECK(prod == abs(oracle::det_cofactor(a)));
  }
}

TEST_CASE("primality and factorization") {
  for (long n = 0; n < 3000; ++n) {
    bool trial = n >= 2;
    for (long d = 2; d * d <= n && trial; ++d) trial = n % d != 0;
    CHECK(is_prime(Integer(n)) == trial);
  }
  CHECK(is_prime(Integer("2305843009213693951")));  // 2^61 - 1
  CHECK_FALSE(is_prime(Integer(561)));
  const Integer n("1234567890123456789");
  Integer back = 1;
  for (const auto& pp : factor_integer(n)) {
    CHECK(is_prime(pp.prime));
    for (unsigned long e = 0; e < pp.exponent; ++e) back *= pp.prime;
  }
  CHECK(back == n);
  CHECK(factor_integer(Integer(-12)) == std::vector<PrimePower>{{Integer(2), 2}, {Integer(3), 1}});
  // Two primes above the trial-division range leave a composite cofactor.
  CHECK_THROWS_AS(factor_integer(Integer("1000036000099")), DomainError);
  CHECK_THROWS_AS(factor_integer(Integer(0)), ArgumentError);
}
