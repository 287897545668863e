#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "oracles.hpp"
#include "tfag/padic/howell.hpp"

using namespace tfag;

namespace {

IntVector iv(std::initializer_list<long> xs) {
  IntVector v;
  for (long x : xs) v.push_back(Integer(x));
  return v;
}

oracle::Residues to_res(const IntVector& v) {
  oracle::Residues r;
  for (const auto& x : v) r.push_back(x.get_si());
  return r;
}

std::vector<oracle::Residues> to_res(const std::vector<IntVector>& rows) {
  std::vector<oracle::Residues> out;
  for (const auto& r : rows) out.push_back(to_res(r));
  return out;
}

std::set<oracle::Residues> enumerate(const RowModule& m) {
  return oracle::span_enumerate(to_res(m.rows()), m.ring().modulus().get_si(), m.dim());
}

std::vector<IntVector> random_rows(oracle::Rng& rng, std::size_t count, std::size_t dim, long modulus) {
  std::vector<IntVector> rows;
  for (std::size_t i = 0; i < count; ++i) {
    IntVector v = oracle::random_vector(rng, dim, 0, modulus - 1);
    // Bias toward non-units so pivots with positive valuation show up.
    if (oracle::uniform(rng, 0, 2) == 0)
      for (auto& x : v) x = oracle::mod(x * 2, Integer(modulus));
    rows.push_back(v);
  }
  return rows;
}

} // namespace

TEST_CASE("reduction examples") {
  CHECK(padic_reduce(Rational(-2), Integer(3), 2).residue() == 7);
  CHECK(padic_reduce(Rational(Integer(1), Integer(2)), Integer(3), 2).residue() == 5);
  CHECK_THROWS_AS(padic_reduce(Rational(Integer(1), Integer(3)), Integer(3), 5), DomainError);
  CHECK_THROWS_AS(PadicRing(Integer(6), 2), ArgumentError);
  CHECK_THROWS_AS(PadicRing(Integer(5), 0), ArgumentError);
}

TEST_CASE("valuation is capped at the precision and norms report truncation") {
  const PadicRing ring(Integer(3), 4);
  CHECK(ring.valuation(Integer(0)) == 4);
  CHECK(ring.valuation(Integer(27)) == 3);
  const PadicRowVec zero(ring, iv({0, 0}));
  CHECK(zero.norm().precision_limited);
  CHECK(zero.norm().token(Integer(3)) == "<=3^-4");
  CHECK(PadicRowVec(ring, iv({9, 6})).norm().token(Integer(3)) == "3^-1");
  CHECK(PadicRowVec(ring, iv({9, 5})).norm().token(Integer(3)) == "3^-0");
  CHECK(ring.inverse(Integer(2)) * 2 % 81 == 1);
  CHECK_THROWS_AS(ring.inverse(Integer(3)), DomainError);
}

TEST_CASE("norm is ultrametric") {
  oracle::Rng rng(21);
  for (int t = 0; t < 300; ++t) {
    const Integer p = t % 2 ? 2 : 5;
    const PadicRing ring(p, 6);
    const long mod = ring.modulus().get_si();
    const PadicRowVec v(ring, oracle::random_vector(rng, 3, 0, mod - 1));
    const PadicRowVec w(ring, oracle::random_vector(rng, 3, 0, mod - 1));
    // Smaller norm = larger exponent.
    CHECK((v + w).norm().exponent >= std::min(v.norm().exponent, w.norm().exponent));
  }
}

TEST_CASE("Howell examples") {
  const PadicRing ring(Integer(3), 3);
  const RowModule a = howell_form(ring, 2, {iv({3, 0}), iv({0, 3})});
  CHECK(a.rows() == std::vector<IntVector>{iv({3, 0}), iv({0, 3})});
  CHECK(a.pivot_vals() == std::vector<long>{1, 1});

  const RowModule b = howell_form(ring, 2, {iv({1, 1}), iv({0, 3})});
  CHECK(b.rows() == std::vector<IntVector>{iv({1, 1}), iv({0, 3})});
  CHECK(enumerate(b) == oracle::span_enumerate({{1, 1}, {0, 3}}, 27, 2));

  CHECK(howell_form(ring, 3, {}).rank() == 0);
}

TEST_CASE("Howell basis spans the generated module and has the Howell property") {
  oracle::Rng rng(22);
  for (int t = 0; t < 80; ++t) {
    const Integer p = t % 2 ? 2 : 3;
    const long n = 1 + t % 3;
    const PadicRing ring(p, n);
    const long mod = ring.modulus().get_si();
    const std::size_t dim = 1 + t % 3;
    if (std::pow(double(mod), double(dim)) > 800) continue;
    const auto gens = random_rows(rng, static_cast<std::size_t>(oracle::uniform(rng, 1, 4)), dim, mod);
    const RowModule h = howell_form(ring, dim, gens);
    const auto span = oracle::span_enumerate(to_res(gens), mod, dim);
    CHECK(enumerate(h) == span);
    CHECK(double(span.size()) == std::pow(double(p.get_si()), double(h.length())));
    for (std::size_t c = 0; c <= dim; ++c) {
      std::set<oracle::Residues> tail;
      for (const auto& v : span)
        if (std::all_of(v.begin(), v.begin() + c, [](long x) { return x == 0; })) tail.insert(v);
      std::vector<oracle::Residues> tail_rows;
      for (std::size_t i = 0; i < h.rank(); ++i)
        if (h.pivot_cols()[i] >= c) tail_rows.push_back(to_res(h.rows()[i]));
      CHECK(oracle::span_enumerate(tail_rows, mod, dim) == tail);
    }
  }
}

TEST_CASE("Howell form is canonical under unimodular row operations") {
  oracle::Rng rng(23);
  for (int t = 0; t < 100; ++t) {
    const Integer p = t % 3 == 0 ? 2 : (t % 3 == 1 ? 3 : 5);
    const PadicRing ring(p, 2 + t % 4);
    const long mod = ring.modulus().get_si();
    const std::size_t dim = 2 + t % 3;
    auto gens = random_rows(rng, dim + 1, dim, mod);
    auto mixed = gens;
    for (int step = 0; step < 12; ++step) {
      const std::size_t i = oracle::uniform(rng, 0, long(mixed.size()) - 1);
      const std::size_t j = oracle::uniform(rng, 0, long(mixed.size()) - 1);
      switch (oracle::uniform(rng, 0, 2)) {
      case 0: {
        const long c = oracle::uniform(rng, -5, 5);
        if (i != j)
          for (std::size_t k = 0; k < dim; ++k) mixed[i][k] += c * mixed[j][k];
        break;
      }
      case 1: {
        long u;
        do u = oracle::uniform(rng, 1, mod - 1);
        while (oracle::mod(Integer(u), p) == 0);
        for (auto& x : mixed[i]) x *= u;
        break;
      }
      default:
        std::swap(mixed[i], mixed[j]);
      }
    }
    CHECK(howell_form(ring, dim, gens) == howell_form(ring, dim, mixed));
  }
}

TEST_CASE("freeness") {
  const PadicRing ring(Integer(3), 2);
  // (3,1) spans a free summand although its echelon pivot is 3.
  const RowModule a = howell_form(ring, 2, {iv({3, 1})});
  CHECK(a.rank() == 2);
  CHECK(a.length() == 2);
  CHECK(a.is_free_of_rank(1));
  // Z/3 + Z/3 has the same size but is not free.
  const RowModule b = howell_form(ring, 2, {iv({3, 0}), iv({0, 3})});
  CHECK(b.length() == 2);
  CHECK_FALSE(b.is_free_of_rank(1));
  CHECK(howell_form(ring, 2, {}).is_free_of_rank(0));
  CHECK(howell_form(ring, 3, {iv({1, 0, 0}), iv({0, 1, 0})}).is_free_of_rank(2));
}

TEST_CASE("left kernel examples") {
  const PadicRing ring(Integer(3), 3);
  CHECK(left_kernel(PadicMatrix(ring, IntMatrix(3, 3))).rows() == IntMatrix::identity(3).to_rows());
  CHECK(left_kernel(PadicMatrix(ring, IntMatrix::identity(3))).rank() == 0);
  const RowModule k = left_kernel(PadicMatrix(ring, IntMatrix::from_rows({iv({1, 0}), iv({0, 3})})));
  CHECK(k.rows() == std::vector<IntVector>{iv({0, 9})});
  CHECK(enumerate(k) == oracle::left_kernel_enumerate({{1, 0}, {0, 3}}, 27, 2));
}

TEST_CASE("left kernel agrees with enumeration over Z/p^2") {
  oracle::Rng rng(24);
  for (int t = 0; t < 60; ++t) {
    const Integer p = t % 2 ? 2 : 3;
    const PadicRing ring(p, 2);
    const long mod = ring.modulus().get_si();
    const std::size_t r = 2 + t % 2;
    const auto rows = random_rows(rng, r, r, mod);
    const IntMatrix m = IntMatrix::from_rows(rows);
    CHECK(enumerate(left_kernel(PadicMatrix(ring, m))) == oracle::left_kernel_enumerate(to_res(rows), mod, r));
  }
}

TEST_CASE("row span and containment agree with enumeration") {
  oracle::Rng rng(25);
  for (int t = 0; t < 60; ++t) {
    const Integer p = t % 2 ? 2 : 3;
    const PadicRing ring(p, 2);
    const long mod = ring.modulus().get_si();
    const std::size_t r = 2 + t % 2;
    const auto rows = random_rows(rng, r, r, mod);
    const RowModule span = row_span(PadicMatrix(ring, IntMatrix::from_rows(rows)));
    const auto brute = oracle::span_enumerate(to_res(rows), mod, r);
    CHECK(enumerate(span) == brute);
    for (int s = 0; s < 10; ++s) {
      const IntVector w = oracle::random_vector(rng, r, 0, mod - 1);
      CHECK(span.contains(w) == (brute.count(to_res(w)) == 1));
    }
  }
}

TEST_CASE("containment examples") {
  const PadicRing ring(Integer(3), 3);
  const RowModule full = howell_form(ring, 2, {iv({1, 0}), iv({0, 1})});
  CHECK(full.contains(iv({17, 5})));
  const RowModule zero = howell_form(ring, 2, {});
  CHECK_FALSE(zero.contains(iv({0, 1})));
  CHECK(zero.contains(iv({0, 0})));
  const RowModule m = howell_form(ring, 2, {iv({3, 0}), iv({0, 3})});
  CHECK(m.contains(iv({6, 3})));
  CHECK_FALSE(m.contains(iv({1, 3})));
  CHECK(full.contains(m));
  CHECK_FALSE(m.contains(full));
}

TEST_CASE("matrix polynomial evaluation examples") {
  const PadicRing ring(Integer(5), 3);
  CHECK(matrix_poly_eval(PadicPoly{ring, iv({1, -1})}, PadicMatrix::identity(ring, 3)).is_zero());
  CHECK(matrix_poly_eval(PadicPoly{ring, iv({1, 0, 1})}, PadicMatrix(ring, IntMatrix::from_rows({iv({0, -1}), iv({1, 0})})))
            .is_zero());
  CHECK(matrix_poly_eval(PadicPoly{ring, iv({1, 0, 0})}, PadicMatrix(ring, IntMatrix::from_rows({iv({0, 0}), iv({1, 0})})))
            .is_zero());
}
