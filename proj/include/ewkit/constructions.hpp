#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "ewkit/certificate.hpp"
#include "ewkit/families.hpp"
#include "ewkit/matrix.hpp"
#include "ewkit/seidel.hpp"
#include "ewkit/verify.hpp"

namespace ewkit {

// C + I for a verified skew conference matrix; the result is a skew-type
// Hadamard matrix. Throws precondition_error otherwise.
IntMat hadamard_from_conference(const SeidelMatrix& c);

// Principal submatrix obtained by deleting the given rows and columns.
// Indices must be distinct, in range, and must not delete everything.
IntMat delete_principal(const IntMat& m, const std::vector<std::size_t>& idx);

// Switching normalization of a PSD {0,+-1} matrix with unit diagonal: the
// connected components of the nonzero pattern become all-ones diagonal
// blocks, ordered by decreasing size (ties by smallest original index).
// Returns the switching and the block sizes; P^T M P == diag(J_k1,...) is
// asserted exactly.
std::pair<SignedPermutation, std::vector<std::size_t>> psd_block_normalize(
    const IntMat& m);

// Stage of the square-form classification: how many indices were deleted
// from a conference matrix (by characteristic polynomial).
enum class Stage { full, minus1, minus2, minus3 };
std::string stage_name(Stage st);

// Classification of S by the square matrix M = (4t+3)I + S^2 (skew) or
// (4t+1)I - S^2 (symmetric): the switching taking M to its canonical form
//   full:   O
//   minus1: J
//   minus2: diag(2J, 2J)
//   minus3: the four-block form with diagonal blocks 3J_{t+1},3J_t,3J_t,3J_t
//           (skew; the first group has size t-1 in the symmetric case),
//           J between the first group and the rest, -J elsewhere
struct SquareFormClass {
  SeidelKind kind;
  Stage stage;
  unsigned long t;
  SignedPermutation switching;
  IntMat canonical;
};

SquareFormClass square_form(const SeidelMatrix& s);

// The four distinct rows of the canonical four-block matrix, r1 being the row
// of the first block group. r1 = r2 + r3 + r4 always holds.
struct BlockRows {
  std::vector<std::size_t> sizes;  // t+1|t-1, t, t, t
  std::vector<Vec> r;              // r[0] = r1, ..., r[3] = r4
};

// Four-block normalization used by the minus3 stage: the eigenvector for the
// simple extreme eigenvalue of M fixes the signs and the first block (its
// entries have absolute value 3 there and 1 elsewhere); the remaining indices
// split into three equal classes via the M(i,j) == 3 relation. Asserts the
// exact canonical form; for skew inputs also asserts (P^T S P) r1 = 0.
std::pair<SignedPermutation, BlockRows> normalize_four_block(
    const SeidelMatrix& s, const IntMat& m);

// Structure test for the product S*M after four-block normalization (skew
// only): X = P^T (SM) P must vanish on the first block group, have constant
// +-4J blocks in a cyclic orientation on the other three groups, and satisfy
// chi_X = x^(4t-1) (x^2 + 48 t^2).
Certificate sm_form_check(const SeidelMatrix& s, const SignedPermutation& p,
                          const BlockRows& rows);

// One completion step: borders a stage minus1/minus2/minus3 matrix with the
// vector the square form dictates, yielding a matrix one order higher whose
// characteristic polynomial is exactly the next stage's target.
//   minus1: x = 1 after the rank-one normalization (then S1 = 0)
//   minus2: x = -S1 after the two-block normalization (with S x = 1
//           for the skew kind), falling back to the finitely many
//           alternatives +S1, +-1_* when a candidate fails
//   minus3: x = +-(r1 - r_g)/2 over g = 2,3,4, first candidate whose
//           bordered matrix hits the minus2 target
SeidelMatrix complete_step(const SeidelMatrix& s);

// Iterates complete_step until the matrix verifies as a conference matrix.
SeidelMatrix complete_to_conference(const SeidelMatrix& s);

// Switching a Seidel matrix with the ew_seidel charpoly into the form T with
// T + I an EW matrix: normalizes M = S S^T - (4t-1)I (entries {0,+-2}) into
// diag(2J_{2t+1}, 2J_{2t+1}) and applies the same switching to S.
std::pair<SignedPermutation, SeidelMatrix> switching_form(
    const SeidelMatrix& s);

// Skew-type EW matrix of order 4t+2 -> tournament of order 4t+1 with the
// ew_tournament charpoly: normalize M - I, take A' = (J - M_norm)/2, and
// delete the first index (whose row is then zero).
Tournament ew_to_tournament(const IntMat& m);

// Tournament with the ew_tournament charpoly -> skew-type EW matrix of order
// 4t+2 in exact block-normal form: border S' = J - I - 2A by +1^T / -1,
// apply switching_form, return T + I.
IntMat tournament_to_ew(const Tournament& a);

// Brute-force enumeration of the 3x3 {+-1,+-3} symmetric patterns with
// diagonal 3: the PSD ones collapse into exactly four switching classes.
struct Enum33Result {
  std::vector<IntMat> classes;  // canonical representatives, 4 of them
  std::size_t raw_count;        // PSD patterns before grouping (24)
};
Enum33Result enumerate_33psd();

}  // namespace ewkit
