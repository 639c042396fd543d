#pragma once

#include <cstddef>
#include <vector>

#include "ewkit/matrix.hpp"
#include "ewkit/poly.hpp"

namespace ewkit {

// Characteristic polynomial det(xI - M), monic of degree n, computed by the
// Berkowitz/Samuelson division-free recurrence. Exact for any integer matrix.
IntPoly charpoly(const IntMat& m);

// Determinant by fraction-free (Bareiss) elimination. Exact.
Int det(const IntMat& m);

// Rank over the rationals by Gaussian elimination. Works for any shape.
std::size_t rank(const IntMat& m);

// Positive semidefiniteness of a symmetric integer matrix, decided from the
// characteristic polynomial alone: all eigenvalues are >= 0 iff the
// coefficients weakly alternate in sign, (-1)^(n-i) * c_i >= 0 for every i.
// No floating point is involved. Throws input_error if m is not symmetric.
bool psd_check(const IntMat& m);

// Basis of the rational kernel of m, with each basis vector scaled to a
// primitive integer vector (content 1, first nonzero entry positive).
std::vector<Vec> kernel(const IntMat& m);

}  // namespace ewkit
