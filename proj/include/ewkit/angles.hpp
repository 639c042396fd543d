#pragma once

#include <utility>
#include <vector>

#include "ewkit/poly.hpp"
#include "ewkit/seidel.hpp"
#include "ewkit/spectrum.hpp"

namespace ewkit {

// 1^T S^k 1 for k = 0..kmax.
std::vector<Int> power_sums(const SeidelMatrix& s, unsigned long kmax);

// Squared main angles scaled by the order: alpha_theta = n * ||P_theta e||^2
// where P_theta projects onto the theta-eigenspace and e is the normalized
// all-ones vector. Stored per eigenvalue; Sum alpha_theta = n and
// alpha_theta = alpha_{-theta}.
struct MainAngles {
  std::vector<std::pair<Eigenvalue, Rat>> entries;

  Rat at(const Eigenvalue& ev) const;  // throws input_error if absent
  std::string str() const;
};

// Recovers the alphas from even power sums by one exact Vandermonde solve in
// theta^2: groups of eigenvalues sharing a squared value (i.e. +-theta pairs,
// or the 0 eigenvalue alone) each get one unknown, the group total; the pair
// total is then split evenly between +theta and -theta. Eigenprojections are
// never materialized. The spectrum must reproduce charpoly(S) exactly
// (precondition_error otherwise).
MainAngles main_angles(const SeidelMatrix& s, const Spectrum& spectrum);

// The main polynomial N with chi_{S+cJ} = chi_S - c*N for every scalar c.
// Computed from power sums: N_j = Sum_k chi_{j+k+1} p_k, which keeps all
// arithmetic in integers.
IntPoly main_poly(const SeidelMatrix& s);

// chi_{S+cJ}(x) = chi_S(x) (1 - c Sum_theta alpha_theta/(x-theta)), evaluated
// exactly by pairing the +-theta terms into 2x*alpha/(x^2-theta^2) so only
// rational polynomial division by exact factors of chi_S occurs.
RatPoly charpoly_shift_J(const IntPoly& chi, const MainAngles& angles,
                         const Rat& c);

// chi_A for the tournament with S = J - I - 2A, computed through the shift
// identity at c = -1 followed by the affine substitution
// chi_A(x) = (-1/2)^n chi_{S-J}(-2x-1). The result is provably integral.
IntPoly tournament_charpoly_via_conv(const SeidelMatrix& s,
                                     const MainAngles& angles);
// Same, with the main polynomial taken from power sums, so it applies to any
// skew Seidel matrix without knowing its spectrum.
IntPoly tournament_charpoly_via_conv(const SeidelMatrix& s);

}  // namespace ewkit
