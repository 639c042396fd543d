#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

namespace ewkit {

// All arithmetic in this library is exact. Int/Rat are arbitrary-precision,
// so overflow is impossible by construction and rationals are always reduced
// (mpq_class canonicalizes on assignment).
using Int = mpz_class;
using Rat = mpq_class;

using Vec = std::vector<Int>;

inline std::string to_string(const Int& v) { return v.get_str(); }

inline std::string to_string(const Rat& v) {
  Rat r = v;
  r.canonicalize();
  if (r.get_den() == 1) return r.get_num().get_str();
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

// True division check: q = a / b with a == q*b required.
Int exact_div(const Int& a, const Int& b);

// Returns the integer square root if v is a perfect square, -1 otherwise.
Int perfect_sqrt(const Int& v);

}  // namespace ewkit
