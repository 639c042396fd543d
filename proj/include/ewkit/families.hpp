#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ewkit/poly.hpp"

namespace ewkit {

// The characteristic-polynomial families the library recognizes, indexed by
// the parameter t >= 1.
//
//   ew_tournament         (x^3-(2t-1)x^2-t(4t-1)) (x^2+x+t)^(2t-1)
//       tournaments of order 4t+1 equivalent to skew EW matrices
//   ew_tournament_seidel  x (x^2+8t-1) (x^2+4t-1)^(2t-1)
//       the Seidel matrix J - I - 2A of such a tournament
//   ew_seidel             (x^2+8t+1) (x^2+4t-1)^(2t)
//       the Seidel matrix M - I of a skew-type EW matrix of order 4t+2
//   skew_full             (x^2+4t+3)^(2t+2)            skew conference, 4t+4
//   skew_del1             x (x^2+4t+3)^(2t+1)          one index deleted
//   skew_del2             (x^2+1) (x^2+4t+3)^(2t)      two deleted
//   skew_del3             x (x^2+3) (x^2+4t+3)^(2t-1)  three deleted
//   sym_full              (x^2-4t-1)^(2t+1)            symmetric conf., 4t+2
//   sym_del1              x (x^2-4t-1)^(2t)
//   sym_del2              (x^2-1) (x^2-4t-1)^(2t-1)
//   sym_del3              (x-2) (x+1)^2 (x^2-4t-1)^(2t-2)
//   sym_del3_alt          (x+2) (x-1)^2 (x^2-4t-1)^(2t-2)
//
// Three-index deletions of a symmetric conference matrix realize both
// sym_del3 and sym_del3_alt (the two differ by negating the matrix), so both
// are first-class families. At t=1 the sym_del3 variants degenerate: the
// (x^2-4t-1) factor drops out entirely.
enum class Family {
  ew_tournament,
  ew_tournament_seidel,
  ew_seidel,
  skew_full,
  skew_del1,
  skew_del2,
  skew_del3,
  sym_full,
  sym_del1,
  sym_del2,
  sym_del3,
  sym_del3_alt,
};

const std::vector<Family>& all_families();
std::string family_name(Family f);
std::optional<Family> family_from_name(const std::string& name);

// Exact factored target for the family at parameter t; throws input_error
// for t < 1.
FactoredPoly target_charpoly(Family f, unsigned long t);

// Order of a matrix in the family at parameter t.
unsigned long family_order(Family f, unsigned long t);

// Finds (family, t) whose expanded target equals p, trying every family with
// the t implied by deg(p). Returns nothing if no family matches.
std::optional<std::pair<Family, unsigned long>> family_of_charpoly(
    const IntPoly& p);

}  // namespace ewkit
