#pragma once

#include <iosfwd>
#include <string>

#include "ewkit/matrix.hpp"

namespace ewkit {

// Plain-text matrix format:
//   # comment lines start with '#'
//   n [kind]            kind in {seidel-skew, seidel-sym, tournament, pm1, int}
//   n rows: either n whitespace-separated integers, or one n-character token
//   over '+', '-', '0' meaning +1, -1, 0
// A written file always carries an explicit kind; on input the kind is
// detected from the entries when the header omits it, and validated against
// the entries when present.
struct MatrixDoc {
  std::string kind;
  IntMat mat;
};

extern const char* const kKindSeidelSkew;   // "seidel-skew"
extern const char* const kKindSeidelSym;    // "seidel-sym"
extern const char* const kKindTournament;   // "tournament"
extern const char* const kKindPm1;          // "pm1"
extern const char* const kKindInt;          // "int"

// Best matching kind tag for the entries of m.
std::string detect_kind(const IntMat& m);

// Throws input_error with a one-line diagnostic naming the offending line.
MatrixDoc read_matrix(std::istream& in);

// Compact rows for {0,+-1} kinds, integer rows otherwise.
void write_matrix(std::ostream& out, const MatrixDoc& doc);

}  // namespace ewkit
