#pragma once

#include "tfag/exact/matrix.hpp"

#include <string>
#include <vector>

namespace tfag {

/// The residue ring Z/p^N standing in for Z_p at absolute precision N.
class PadicRing {
public:
  /// Throws ArgumentError when p is not prime or N < 1.
  PadicRing(const Integer& p, long precision);

  const Integer& prime() const { return p_; }
  long precision() const { return n_; }
  const Integer& modulus() const { return modulus_; }

  /// The same prime at a different precision.
  PadicRing with_precision(long precision) const;

  Integer reduce(const Integer& x) const;
  /// Throws DomainError when p divides the denominator.
  Integer reduce(const Rational& x) const;
  /// min(v_p(x), N) for a residue x.
  long valuation(const Integer& residue) const;
  bool is_unit(const Integer& residue) const;
  /// Inverse of a unit residue; throws DomainError otherwise.
  Integer inverse(const Integer& residue) const;
  /// p^e as an Integer (not reduced).
  Integer power(unsigned long e) const;

  friend bool operator==(const PadicRing& a, const PadicRing& b) {
    return a.n_ == b.n_ && a.p_ == b.p_;
  }

private:
  Integer p_;
  long n_;
  Integer modulus_;
};

/// ||x||_p = p^(-exponent). When `precision_limited` is set the true norm is
/// only known to be <= p^(-exponent), where exponent is the working precision.
struct PadicNorm {
  long exponent = 0;
  bool precision_limited = false;

  /// "p^-j" or "<=p^-N".
  std::string token(const Integer& p) const;
  friend bool operator==(const PadicNorm&, const PadicNorm&) = default;
};

/// Norm of a residue vector: the largest entry absolute value.
PadicNorm residue_norm(const PadicRing& ring, const IntVector& residues);

class PadicScalar {
public:
  PadicScalar(PadicRing ring, const Integer& value);

  const PadicRing& ring() const { return ring_; }
  const Integer& residue() const { return residue_; }
  long valuation() const { return ring_.valuation(residue_); }
  bool is_unit() const { return ring_.is_unit(residue_); }

  friend PadicScalar operator+(const PadicScalar& a, const PadicScalar& b);
  friend PadicScalar operator-(const PadicScalar& a, const PadicScalar& b);
  friend PadicScalar operator*(const PadicScalar& a, const PadicScalar& b);
  friend bool operator==(const PadicScalar&, const PadicScalar&) = default;

private:
  PadicRing ring_;
  Integer residue_;
};

/// The residue of x modulo p^N. Throws DomainError if p | den(x).
PadicScalar padic_reduce(const Rational& x, const Integer& p, long precision);

class PadicRowVec {
public:
  PadicRowVec(PadicRing ring, const IntVector& values);
  PadicRowVec(PadicRing ring, const RatVector& values);

  const PadicRing& ring() const { return ring_; }
  std::size_t dim() const { return entries_.size(); }
  const IntVector& residues() const { return entries_; }
  PadicScalar operator[](std::size_t i) const { return PadicScalar(ring_, entries_[i]); }

  PadicNorm norm() const { return residue_norm(ring_, entries_); }
  bool is_zero() const;

  friend PadicRowVec operator+(const PadicRowVec& a, const PadicRowVec& b);
  friend PadicRowVec operator-(const PadicRowVec& a, const PadicRowVec& b);
  friend PadicRowVec operator*(const PadicScalar& s, const PadicRowVec& v);
  friend bool operator==(const PadicRowVec&, const PadicRowVec&) = default;

private:
  PadicRing ring_;
  IntVector entries_;
};

class PadicMatrix {
public:
  PadicMatrix(PadicRing ring, const IntMatrix& values);
  static PadicMatrix identity(PadicRing ring, std::size_t n);

  const PadicRing& ring() const { return ring_; }
  std::size_t rows() const { return entries_.rows(); }
  std::size_t cols() const { return entries_.cols(); }
  const IntMatrix& residues() const { return entries_; }
  bool is_zero() const { return entries_.is_zero(); }

  friend PadicMatrix operator*(const PadicMatrix& a, const PadicMatrix& b);
  friend PadicMatrix operator+(const PadicMatrix& a, const PadicMatrix& b);
  friend bool operator==(const PadicMatrix&, const PadicMatrix&) = default;

  /// Row action w·M.
  PadicRowVec act_on_row(const PadicRowVec& w) const;
  /// Column action M·v on residues.
  IntVector act_on_column(const IntVector& v) const;

private:
  PadicRing ring_;
  IntMatrix entries_;
};

/// Polynomial over Z/p^N, coefficients leading-first.
struct PadicPoly {
  PadicRing ring;
  IntVector coeffs;

  long degree() const { return static_cast<long>(coeffs.size()) - 1; }
  bool is_monic() const { return !coeffs.empty() && coeffs.front() == 1; }
  friend bool operator==(const PadicPoly&, const PadicPoly&) = default;
};

/// Horner evaluation f(A) mod p^N.
PadicMatrix matrix_poly_eval(const PadicPoly& f, const PadicMatrix& a);

} // namespace tfag
