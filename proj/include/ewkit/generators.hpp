#pragma once

#include <cstddef>
#include <cstdint>
#include <utility>
#include <vector>

#include "ewkit/matrix.hpp"
#include "ewkit/poly.hpp"
#include "ewkit/seidel.hpp"

namespace ewkit {

// Conference matrix of order q+1 from quadratic residues modulo an odd prime
// q: skew kind for q == 3 (mod 4), symmetric for q == 1 (mod 4). The output
// is verified, not trusted; a verification failure is an internal error.
SeidelMatrix paley(unsigned long q);

struct SearchConfig {
  std::size_t order = 6;       // must be == 2 (mod 4)
  bool skew_only = false;      // restrict to X + X^T = 2I
  std::size_t limit = 1;       // stop after this many solutions
  std::uint64_t seed = 0;      // reserved; branching is fixed lexicographic
  // Safety valve for the general search at larger orders; the search stops
  // quietly when the budget runs out.
  std::uint64_t node_limit = 50'000'000;
};

// Depth-first search for EW matrices in exact block-normal form: both Gram
// products must equal (n-2)I + 2 diag(J, J) entry by entry. Rows are filled
// lexicographically (+1 before -1) with exact partial-inner-product pruning;
// skew_only fixes the diagonal to +1 and the lower triangle to the negated
// upper triangle, halving the free entries. Every emitted matrix passes
// verify(ew).
//
// No row can be pinned in advance: an all-ones row forces row-sum profiles
// that contradict the block Gram identity for every order >= 6, so the
// search keeps all rows free and relies on pruning instead.
std::vector<IntMat> search_ew(const SearchConfig& cfg);

// Seeded signed permutation applied by conjugation; deterministic per seed.
std::pair<SignedPermutation, IntMat> random_switch(const IntMat& m,
                                                   std::uint64_t seed);

// Every unordered pair oriented by a seeded coin flip.
Tournament random_tournament(std::size_t n, std::uint64_t seed);

// Test oracle: Leibniz expansion of det(xI - M) as a sum over permutations.
// Exponential; restricted to n <= 6.
IntPoly oracle_charpoly(const IntMat& m);

}  // namespace ewkit
