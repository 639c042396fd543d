#pragma once

#include <optional>
#include <string>

#include "ewkit/certificate.hpp"
#include "ewkit/matrix.hpp"
#include "ewkit/poly.hpp"

namespace ewkit {

// Defining identities checked exactly. Shape violations (wrong entries,
// wrong order class) raise input_error; a well-shaped matrix that fails the
// identity gets a FAIL certificate.
//
//   hadamard               +-1 matrix with H H^T = H^T H = nI
//   skew_type              +-1 matrix with X + X^T = 2I
//   ew                     +-1 matrix, n == 2 (mod 4), with both Gram
//                          products equal to (n-2)I + 2 diag(J_{n/2}, J_{n/2})
//                          in these exact block positions
//   conference             Seidel matrix with S S^T = (n-1)I
//   doubly_regular         tournament with A1 = ((n-1)/2)1 and
//                          A A^T = tJ + ((n-1)/2 - t)I, n = 4t+3
//   two_squares_necessary  2(n-1) is a sum of two integer squares
//   det_mod4               symmetric Seidel matrix with det == 1-n (mod 4)
enum class Property {
  hadamard,
  skew_type,
  ew,
  conference,
  doubly_regular,
  two_squares_necessary,
  det_mod4,
};

std::string property_name(Property p);
std::optional<Property> property_from_name(const std::string& name);

Certificate verify(Property p, const IntMat& m);

// PASS iff charpoly(M) == target.expand(), with the first mismatch reported.
Certificate spectrum_check(const IntMat& m, const FactoredPoly& target);

// Row-sum profile tests.
//   tournament mode: order 4t+1, multiset of A1 must be
//                    {2t+1 : t, 2t : 2t+1, 2t-1 : t}
//   seidel mode:     order 4t+2, multiset of S1 must be
//                    {4t+1 : 1, 1 : t, -1 : 2t+1, -3 : t}
// Orders not of that shape (with t >= 1) raise input_error.
enum class ScoreMode { tournament, seidel };
Certificate score_profile(const IntMat& m, ScoreMode mode);

}  // namespace ewkit
