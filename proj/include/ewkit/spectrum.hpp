#pragma once

#include <string>
#include <vector>

#include "ewkit/certificate.hpp"
#include "ewkit/numeric.hpp"
#include "ewkit/poly.hpp"

namespace ewkit {

// Exact quadratic surd: sign * sqrt(radicand), times i when imaginary is set.
// Everything these matrices need (integers, +-sqrt(d), +-i*sqrt(d)) fits this
// shape, so comparisons reduce to sign tests and integer comparisons of
// squares — no floating point anywhere.
struct Eigenvalue {
  int sign = 0;       // -1, 0, +1; sign == 0 iff radicand == 0
  Int radicand = 0;   // >= 0
  bool imaginary = false;

  static Eigenvalue zero() { return {}; }
  static Eigenvalue from_integer(const Int& v);
  static Eigenvalue real_sqrt(int sign, Int radicand);
  static Eigenvalue imaginary_sqrt(int sign, Int radicand);

  Eigenvalue negated() const;
  // theta^2 as a signed integer: radicand for real values, -radicand for
  // imaginary ones.
  Int squared() const;
  // The real eigenvalue of i*S corresponding to this eigenvalue of a skew S
  // (drops the i; used before interlacing comparisons).
  Eigenvalue realified() const;

  std::string str() const;  // "2", "-1", "sqrt(13)", "sqrt(-3)", ...

  friend bool operator==(const Eigenvalue& a, const Eigenvalue& b) {
    return a.sign == b.sign && a.radicand == b.radicand &&
           a.imaginary == b.imaginary;
  }
  // Structural order for use as a map key (not the numeric order).
  friend bool operator<(const Eigenvalue& a, const Eigenvalue& b);
};

// Numeric order for real eigenvalues; throws input_error on imaginary input.
bool numeric_less(const Eigenvalue& a, const Eigenvalue& b);

// Eigenvalues with multiplicities; total multiplicity equals the order.
struct Spectrum {
  std::vector<std::pair<Eigenvalue, unsigned long>> entries;

  unsigned long total_multiplicity() const;
  // Reconstructs the (integer) characteristic polynomial; requires surds to
  // pair up conjugately. Throws input_error otherwise.
  IntPoly charpoly() const;
  std::string str() const;
};

// Reads eigenvalues off a factored polynomial whose factors are of the shapes
// x, x - a, or x^2 + b (b != 0); other factors raise input_error.
Spectrum spectrum_from_factored(const FactoredPoly& f);

// Exact eigenvalue interlacing test: with both spectra sorted descending
// (skew spectra are first mapped to the real spectra of i*S), PASS iff
// big_i >= small_i >= big_{n-m+i} for all i. Throws input_error if the small
// spectrum is larger than the big one.
Certificate interlacing_check(const Spectrum& big, const Spectrum& small);

}  // namespace ewkit
