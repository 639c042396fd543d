#pragma once

#include <string>
#include <vector>

#include "ewkit/numeric.hpp"

namespace ewkit {

// Polynomials are coefficient vectors in ascending degree order with a
// nonzero leading coefficient; the zero polynomial is the empty vector.
struct IntPoly {
  std::vector<Int> c;

  IntPoly() = default;
  explicit IntPoly(std::vector<Int> coeffs);
  IntPoly(std::initializer_list<long> coeffs);

  bool zero() const { return c.empty(); }
  // Degree of the zero polynomial is -1 by convention.
  long degree() const { return static_cast<long>(c.size()) - 1; }
  Int eval(const Int& x) const;
  std::string str() const;  // ascending coefficients, space separated

  friend IntPoly operator+(const IntPoly& a, const IntPoly& b);
  friend IntPoly operator-(const IntPoly& a, const IntPoly& b);
  friend IntPoly operator*(const IntPoly& a, const IntPoly& b);
  friend bool operator==(const IntPoly& a, const IntPoly& b) {
    return a.c == b.c;
  }
  friend bool operator!=(const IntPoly& a, const IntPoly& b) {
    return !(a == b);
  }
};

IntPoly pow(const IntPoly& p, unsigned long e);

// Same representation over the rationals; used where main angles introduce
// denominators that later cancel.
struct RatPoly {
  std::vector<Rat> c;

  RatPoly() = default;
  explicit RatPoly(std::vector<Rat> coeffs);
  explicit RatPoly(const IntPoly& p);

  bool zero() const { return c.empty(); }
  long degree() const { return static_cast<long>(c.size()) - 1; }
  Rat eval(const Rat& x) const;
  std::string str() const;

  // True if every coefficient has denominator 1.
  bool integral() const;
  IntPoly to_int() const;  // throws internal_error unless integral()

  friend RatPoly operator+(const RatPoly& a, const RatPoly& b);
  friend RatPoly operator-(const RatPoly& a, const RatPoly& b);
  friend RatPoly operator*(const RatPoly& a, const RatPoly& b);
  friend bool operator==(const RatPoly& a, const RatPoly& b) {
    return a.c == b.c;
  }
};

RatPoly operator*(const Rat& s, const RatPoly& p);

// p(a*x + b), computed exactly by Horner composition.
RatPoly compose_affine(const RatPoly& p, const Rat& a, const Rat& b);

// Exact division p / d; throws precondition_error if the remainder is
// nonzero. d must have an invertible (nonzero) leading coefficient.
RatPoly exact_div(const RatPoly& p, const RatPoly& d);

// A polynomial held as a product of integer factors with multiplicities.
// Targets arrive in this factored shape and are expanded on demand, never
// recovered by factoring.
struct FactoredPoly {
  struct Term {
    IntPoly factor;
    unsigned long multiplicity;
  };
  std::vector<Term> terms;

  FactoredPoly() = default;

  // Degenerate families may hand in multiplicity 0; such terms are dropped so
  // the stored multiplicities are always positive.
  void add(IntPoly factor, unsigned long multiplicity);

  IntPoly expand() const;
  long degree() const;
  std::string str() const;  // e.g. "(0 1)^2 * (7 0 1)^1" ascending factors
};

}  // namespace ewkit
