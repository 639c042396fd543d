#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "ewkit/matrix.hpp"

namespace ewkit {

enum class SeidelKind { symmetric, skew };

// Zero diagonal, off-diagonal entries +-1, and S^T = S (symmetric kind) or
// S^T = -S (skew kind). Construction validates; throws input_error.
struct SeidelMatrix {
  SeidelKind kind;
  IntMat body;

  SeidelMatrix(SeidelKind k, IntMat b);
  std::size_t order() const { return body.rows(); }
};

// Detects the kind from the entries; throws input_error if the matrix is not
// a Seidel matrix of either kind (order 1 defaults to skew).
SeidelMatrix make_seidel(IntMat body);

// {0,1} matrix with A + A^T = J - I. Construction validates.
struct Tournament {
  IntMat body;

  explicit Tournament(IntMat b);
  std::size_t order() const { return body.rows(); }
};

// A signed permutation P: column j of P is signs[j] * e_{perm[j]}. These are
// exactly the integer orthogonal matrices; conjugation M -> P^T M P is the
// switching action.
struct SignedPermutation {
  std::vector<std::size_t> perm;
  std::vector<int> signs;

  static SignedPermutation identity(std::size_t n);
  std::size_t order() const { return perm.size(); }
  IntMat to_matrix() const;
  SignedPermutation inverse() const;

  // Matrix product: (a * b).to_matrix() == a.to_matrix() * b.to_matrix().
  friend SignedPermutation operator*(const SignedPermutation& a,
                                     const SignedPermutation& b);
};

// P^T M P without materializing P: entry (i,j) of the result is
// signs[i]*signs[j]*M(perm[i], perm[j]).
IntMat apply_switching(const SignedPermutation& p, const IntMat& m);

// Switch S so that every off-diagonal entry of the first row is +1 (for the
// skew kind the first column is then all -1 automatically). Pure sign
// switching; the permutation part is the identity.
std::pair<SignedPermutation, SeidelMatrix> normalize(const SeidelMatrix& s);

// S = J - I - 2A.
SeidelMatrix seidel_from_tournament(const Tournament& a);

// A = (J - I - S)/2; requires the skew kind.
Tournament tournament_from_seidel(const SeidelMatrix& s);

}  // namespace ewkit
