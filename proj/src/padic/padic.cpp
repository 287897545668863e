#include "tfag/padic/padic.hpp"

#include "tfag/exact/primes.hpp"

namespace tfag {

PadicRing::PadicRing(const Integer& p, long precision) : p_(p), n_(precision) {
  if (precision < 1) throw ArgumentError("precision must be at least 1");
  if (!is_prime(p)) throw ArgumentError(p.get_str() + " is not prime");
  mpz_pow_ui(modulus_.get_mpz_t(), p_.get_mpz_t(), static_cast<unsigned long>(n_));
}

PadicRing PadicRing::with_precision(long precision) const { return PadicRing(p_, precision); }

Integer PadicRing::reduce(const Integer& x) const {
  Integer r;
  mpz_fdiv_r(r.get_mpz_t(), x.get_mpz_t(), modulus_.get_mpz_t());
  return r;
}

Integer PadicRing::reduce(const Rational& x) const {
  if (x.is_integer()) return reduce(x.num());
  Integer den = reduce(x.den());
  Integer inv;
  if (mpz_invert(inv.get_mpz_t(), den.get_mpz_t(), modulus_.get_mpz_t()) == 0)
    throw DomainError(x.to_string() + " is not a " + p_.get_str() + "-adic integer");
  return reduce(x.num() * inv);
}

long PadicRing::valuation(const Integer& residue) const {
  Integer r = reduce(residue);
  if (r == 0) return n_;
  return valuation_unchecked(r, p_);
}

bool PadicRing::is_unit(const Integer& residue) const {
  return mpz_divisible_p(residue.get_mpz_t(), p_.get_mpz_t()) == 0;
}

Integer PadicRing::inverse(const Integer& residue) const {
  Integer inv;
  if (mpz_invert(inv.get_mpz_t(), residue.get_mpz_t(), modulus_.get_mpz_t()) == 0)
    throw DomainError(residue.get_str() + " is not a unit modulo " + modulus_.get_str());
  return reduce(inv);
}

Integer PadicRing::power(unsigned long e) const {
  Integer r;
  mpz_pow_ui(r.get_mpz_t(), p_.get_mpz_t(), e);
  return r;
}

std::string PadicNorm::token(const Integer& p) const {
  return (precision_limited ? "<=" : "") + p.get_str() + "^-" + std::to_string(exponent);
}

PadicNorm residue_norm(const PadicRing& ring, const IntVector& residues) {
  long best = ring.precision();
  for (const auto& x : residues) best = std::min(best, ring.valuation(x));
  return {best, best >= ring.precision()};
}

PadicScalar::PadicScalar(PadicRing ring, const Integer& value)
    : ring_(std::move(ring)), residue_(ring_.reduce(value)) {}

namespace {
void require_same_ring(const PadicRing& a, const PadicRing& b) {
  if (!(a == b)) throw ArgumentError("operands live in different residue rings");
}
} // namespace

PadicScalar operator+(const PadicScalar& a, const PadicScalar& b) {
  require_same_ring(a.ring_, b.ring_);
  return PadicScalar(a.ring_, a.residue_ + b.residue_);
}
PadicScalar operator-(const PadicScalar& a, const PadicScalar& b) {
  require_same_ring(a.ring_, b.ring_);
  return PadicScalar(a.ring_, a.residue_ - b.residue_);
}
PadicScalar operator*(const PadicScalar& a, const PadicScalar& b) {
  require_same_ring(a.ring_, b.ring_);
  return PadicScalar(a.ring_, a.residue_ * b.residue_);
}

PadicScalar padic_reduce(const Rational& x, const Integer& p, long precision) {
  PadicRing ring(p, precision);
  return PadicScalar(ring, ring.reduce(x));
}

PadicRowVec::PadicRowVec(PadicRing ring, const IntVector& values) : ring_(std::move(ring)) {
  entries_.reserve(values.size());
  for (const auto& v : values) entries_.push_back(ring_.reduce(v));
}

PadicRowVec::PadicRowVec(PadicRing ring, const RatVector& values) : ring_(std::move(ring)) {
  entries_.reserve(values.size());
  for (const auto& v : values) entries_.push_back(ring_.reduce(v));
}

bool PadicRowVec::is_zero() const {
  for (const auto& x : entries_)
    if (x != 0) return false;
  return true;
}

PadicRowVec operator+(const PadicRowVec& a, const PadicRowVec& b) {
  require_same_ring(a.ring_, b.ring_);
  if (a.dim() != b.dim()) throw DimensionError("row vector dimension mismatch");
  IntVector out(a.dim());
  for (std::size_t i = 0; i < a.dim(); ++i) out[i] = a.entries_[i] + b.entries_[i];
  return PadicRowVec(a.ring_, out);
}

PadicRowVec operator-(const PadicRowVec& a, const PadicRowVec& b) {
  require_same_ring(a.ring_, b.ring_);
  if (a.dim() != b.dim()) throw DimensionError("row vector dimension mismatch");
  IntVector out(a.dim());
  for (std::size_t i = 0; i < a.dim(); ++i) out[i] = a.entries_[i] - b.entries_[i];
  return PadicRowVec(a.ring_, out);
}

PadicRowVec operator*(const PadicScalar& s, const PadicRowVec& v) {
  require_same_ring(s.ring(), v.ring_);
  IntVector out(v.dim());
  for (std::size_t i = 0; i < v.dim(); ++i) out[i] = s.residue() * v.entries_[i];
  return PadicRowVec(v.ring_, out);
}

PadicMatrix::PadicMatrix(PadicRing ring, const IntMatrix& values)
    : ring_(std::move(ring)), entries_(values.rows(), values.cols()) {
  for (std::size_t i = 0; i < values.rows(); ++i)
    for (std::size_t j = 0; j < values.cols(); ++j) entries_(i, j) = ring_.reduce(values(i, j));
}

PadicMatrix PadicMatrix::identity(PadicRing ring, std::size_t n) {
  return PadicMatrix(std::move(ring), IntMatrix::identity(n));
}

PadicMatrix operator*(const PadicMatrix& a, const PadicMatrix& b) {
  require_same_ring(a.ring_, b.ring_);
  return PadicMatrix(a.ring_, a.entries_ * b.entries_);
}

PadicMatrix operator+(const PadicMatrix& a, const PadicMatrix& b) {
  require_same_ring(a.ring_, b.ring_);
  return PadicMatrix(a.ring_, a.entries_ + b.entries_);
}

PadicRowVec PadicMatrix::act_on_row(const PadicRowVec& w) const {
  require_same_ring(ring_, w.ring());
  if (w.dim() != rows()) throw DimensionError("row vector does not match matrix rows");
  IntVector out(cols(), Integer(0));
  for (std::size_t i = 0; i < rows(); ++i) {
    const Integer& wi = w.residues()[i];
    if (wi == 0) continue;
    for (std::size_t j = 0; j < cols(); ++j) out[j] += wi * entries_(i, j);
  }
  return PadicRowVec(ring_, out);
}

IntVector PadicMatrix::act_on_column(const IntVector& v) const {
  IntVector out = entries_.apply(v);
  for (auto& x : out) x = ring_.reduce(x);
  return out;
}

PadicMatrix matrix_poly_eval(const PadicPoly& f, const PadicMatrix& a) {
  require_same_ring(f.ring, a.ring());
  if (a.rows() != a.cols()) throw DimensionError("polynomial evaluation at a non-square matrix");
  const std::size_t n = a.rows();
  IntMatrix acc(n, n);
  for (const auto& c : f.coeffs) {
    acc = acc * a.residues();
    for (std::size_t i = 0; i < n; ++i) acc(i, i) += c;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) acc(i, j) = f.ring.reduce(acc(i, j));
  }
  return PadicMatrix(f.ring, acc);
}

} // namespace tfag
