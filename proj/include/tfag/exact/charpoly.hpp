#pragma once

#include "tfag/exact/matrix.hpp"

namespace tfag {

/// Coefficients (1, a_1, ..., a_r) of det(xI - A) = x^r + a_1 x^{r-1} + ... + a_r,
/// leading coefficient first. Berkowitz's algorithm: only ring operations, so
/// every intermediate stays integral.
IntVector charpoly(const IntMatrix& a);

/// Horner evaluation of a leading-first coefficient list at a square matrix.
IntMatrix evaluate_at(const IntVector& coeffs, const IntMatrix& a);

/// adj(A) with A·adj(A) = det(A)·I, from the characteristic polynomial
/// (integer arithmetic only).
IntMatrix adjugate(const IntMatrix& a);

} // namespace tfag
