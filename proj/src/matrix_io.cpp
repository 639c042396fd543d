#include "ewkit/matrix_io.hpp"

#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "ewkit/errors.hpp"

namespace ewkit {

const char* const kKindSeidelSkew = "seidel-skew";
const char* const kKindSeidelSym = "seidel-sym";
const char* const kKindTournament = "tournament";
const char* const kKindPm1 = "pm1";
const char* const kKindInt = "int";

namespace {

[[noreturn]] void bad_line(std::size_t line, const std::string& why) {
  throw input_error("line " + std::to_string(line) + ": " + why);
}

bool known_kind(const std::string& kind) {
  return kind == kKindSeidelSkew || kind == kKindSeidelSym ||
         kind == kKindTournament || kind == kKindPm1 || kind == kKindInt;
}

// next content line, skipping blanks and '#' comments
bool next_line(std::istream& in, std::string& line, std::size_t& lineno) {
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    const std::size_t pos = line.find_first_not_of(" \t");
    if (pos == std::string::npos || line[pos] == '#') continue;
    return true;
  }
  return false;
}

std::vector<std::string> split(const std::string& line) {
  std::istringstream ss(line);
  std::vector<std::string> toks;
  std::string t;
  while (ss >> t) toks.push_back(t);
  return toks;
}

bool integer_token(const std::string& t) {
  std::size_t at = t[0] == '-' ? 1 : 0;
  if (at == t.size()) return false;
  for (; at < t.size(); ++at)
    if (t[at] < '0' || t[at] > '9') return false;
  return true;
}

bool compact_token(const std::string& t, std::size_t n) {
  if (t.size() != n) return false;
  for (char c : t)
    if (c != '+' && c != '-' && c != '0') return false;
  return true;
}

bool entry_in_range(const std::string& kind, const Int& v) {
  if (kind == kKindInt || kind.empty()) return true;
  if (kind == kKindPm1) return v == 1 || v == -1;
  if (kind == kKindTournament) return v == 0 || v == 1;
  return v == 0 || v == 1 || v == -1;
}

bool seidel_like(const IntMat& m, bool skew) {
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) {
      const Int& v = m.at(i, j);
      if (i == j ? v != 0 : (v != 1 && v != -1)) return false;
      if (m.at(j, i) != (skew && i != j ? Int(-v) : v)) return false;
    }
  return true;
}

bool tournament_like(const IntMat& m) {
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) {
      const Int& v = m.at(i, j);
      if (v != 0 && v != 1) return false;
      if (i == j ? v != 0 : v + m.at(j, i) != 1) return false;
    }
  return true;
}

bool pm1_like(const IntMat& m) {
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      if (m.at(i, j) != 1 && m.at(i, j) != -1) return false;
  return true;
}

bool kind_consistent(const std::string& kind, const IntMat& m) {
  if (kind == kKindSeidelSkew) return seidel_like(m, true);
  if (kind == kKindSeidelSym) return seidel_like(m, false);
  if (kind == kKindTournament) return tournament_like(m);
  if (kind == kKindPm1) return pm1_like(m);
  return true;
}

}  // namespace

std::string detect_kind(const IntMat& m) {
  if (seidel_like(m, true)) return kKindSeidelSkew;
  if (seidel_like(m, false)) return kKindSeidelSym;
  if (tournament_like(m)) return kKindTournament;
  if (pm1_like(m)) return kKindPm1;
  return kKindInt;
}

MatrixDoc read_matrix(std::istream& in) {
  std::size_t lineno = 0;
  std::string line;
  if (!next_line(in, line, lineno))
    throw input_error("line 1: missing matrix header");
  const std::vector<std::string> head = split(line);
  if (head.size() > 2 || !integer_token(head[0]) || head[0][0] == '-' ||
      head[0] == "0")
    bad_line(lineno, "header must be 'n [kind]' with n >= 1");
  std::size_t n = 0;
  for (char c : head[0]) {
    n = n * 10 + static_cast<std::size_t>(c - '0');
    if (n > 100000) bad_line(lineno, "order is implausibly large");
  }
  std::string kind = head.size() == 2 ? head[1] : "";
  if (!kind.empty() && !known_kind(kind))
    bad_line(lineno, "unknown kind '" + kind + "'");

  IntMat m(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    if (!next_line(in, line, lineno))
      throw input_error("line " + std::to_string(lineno + 1) +
                        ": unexpected end of input");
    const std::vector<std::string> toks = split(line);
    if (toks.size() == 1 && compact_token(toks[0], n)) {
      for (std::size_t j = 0; j < n; ++j)
        m.at(i, j) = toks[0][j] == '+' ? 1 : toks[0][j] == '-' ? -1 : 0;
    } else if (toks.size() == n) {
      for (std::size_t j = 0; j < n; ++j) {
        if (!integer_token(toks[j]))
          bad_line(lineno, "'" + toks[j] + "' is not an integer");
        m.at(i, j) = Int(toks[j]);
      }
    } else {
      bad_line(lineno, "expected " + std::to_string(n) + " entries");
    }
    for (std::size_t j = 0; j < n; ++j)
      if (!entry_in_range(kind, m.at(i, j)))
        bad_line(lineno, "entry out of range for kind '" + kind + "'");
  }

  if (kind.empty())
    kind = detect_kind(m);
  else if (!kind_consistent(kind, m))
    throw input_error("matrix entries contradict kind '" + kind + "'");
  return {std::move(kind), std::move(m)};
}

void write_matrix(std::ostream& out, const MatrixDoc& doc) {
  if (!known_kind(doc.kind))
    throw input_error("unknown kind '" + doc.kind + "'");
  if (!doc.mat.square() || doc.mat.rows() == 0)
    throw input_error("only nonempty square matrices are written");
  if (!kind_consistent(doc.kind, doc.mat))
    throw input_error("matrix entries contradict kind '" + doc.kind + "'");

  const std::size_t n = doc.mat.rows();
  out << n << ' ' << doc.kind << '\n';
  for (std::size_t i = 0; i < n; ++i) {
    if (doc.kind == kKindInt) {
      for (std::size_t j = 0; j < n; ++j)
        out << (j ? " " : "") << to_string(doc.mat.at(i, j));
    } else {
      for (std::size_t j = 0; j < n; ++j) {
        const Int& v = doc.mat.at(i, j);
        out << (v == 1 ? '+' : v == -1 ? '-' : '0');
      }
    }
    out << '\n';
  }
}

}  // namespace ewkit
