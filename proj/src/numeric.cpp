#include "ewkit/numeric.hpp"

#include "ewkit/errors.hpp"

namespace ewkit {

Int exact_div(const Int& a, const Int& b) {
  if (b == 0) throw internal_error("exact_div: division by zero");
  Int q, r;
  mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  if (r != 0) throw internal_error("exact_div: inexact division");
  return q;
}

Int perfect_sqrt(const Int& v) {
  if (v < 0) return Int(-1);
  Int s, r;
  mpz_sqrtrem(s.get_mpz_t(), r.get_mpz_t(), v.get_mpz_t());
  if (r != 0) return Int(-1);
  return s;
}

}  // namespace ewkit
