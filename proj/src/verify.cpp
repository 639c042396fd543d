#include "ewkit/verify.hpp"

#include <algorithm>
#include <map>

#include "ewkit/errors.hpp"
#include "ewkit/linalg.hpp"
#include "ewkit/seidel.hpp"

namespace ewkit {

namespace {

void require_pm1(const IntMat& m) {
  if (!m.square()) throw input_error("matrix must be square");
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      if (m.at(i, j) != 1 && m.at(i, j) != -1)
        throw input_error("entries must be +1 or -1");
}

// (n-2)I + 2 diag(J_{n/2}, J_{n/2})
IntMat ew_gram_target(std::size_t n) {
  IntMat g(n, n);
  const std::size_t half = n / 2;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j)
      if ((i < half) == (j < half)) g.at(i, j) = 2;
    g.at(i, i) += Int(n) - 2;
  }
  return g;
}

Certificate verify_hadamard(const IntMat& m) {
  require_pm1(m);
  const std::size_t n = m.rows();
  IntMat target = Int(n) * IntMat::identity(n);
  Certificate c(property_name(Property::hadamard), true);
  c.add("order", std::to_string(n));
  if (m * m.transpose() != target || m.transpose() * m != target) {
    c.pass = false;
    c.add("reason", "Gram product is not nI");
  }
  return c;
}

Certificate verify_skew_type(const IntMat& m) {
  require_pm1(m);
  Certificate c(property_name(Property::skew_type), true);
  if (m + m.transpose() != Int(2) * IntMat::identity(m.rows())) {
    c.pass = false;
    c.add("reason", "X + X^T is not 2I");
  }
  return c;
}

Certificate verify_ew(const IntMat& m) {
  require_pm1(m);
  const std::size_t n = m.rows();
  if (n % 4 != 2) throw input_error("order must be 2 mod 4");
  IntMat target = ew_gram_target(n);
  Certificate c(property_name(Property::ew), true);
  c.add("order", std::to_string(n));
  if (m * m.transpose() != target) {
    c.pass = false;
    c.add("reason", "X X^T misses the block Gram form");
  } else if (m.transpose() * m != target) {
    c.pass = false;
    c.add("reason", "X^T X misses the block Gram form");
  } else {
    c.add("det", to_string(det(m)));
  }
  return c;
}

Certificate verify_conference(const IntMat& m) {
  SeidelMatrix s = make_seidel(m);
  const std::size_t n = s.order();
  Certificate c(property_name(Property::conference), true);
  c.add("order", std::to_string(n));
  c.add("kind", s.kind == SeidelKind::skew ? "skew" : "symmetric");
  if (m * m.transpose() != (Int(n) - 1) * IntMat::identity(n)) {
    c.pass = false;
    c.add("reason", "S S^T is not (n-1)I");
  }
  return c;
}

Certificate verify_doubly_regular(const IntMat& m) {
  Tournament a(m);  // shape check
  const std::size_t n = a.order();
  Certificate c(property_name(Property::doubly_regular), true);
  c.add("order", std::to_string(n));
  if (n % 4 != 3) {
    c.pass = false;
    c.add("reason", "order is not 3 mod 4");
    return c;
  }
  const unsigned long t = (n - 3) / 4;
  c.add("t", std::to_string(t));
  const Int half = Int(n - 1) / 2;
  Vec scores = m * Vec(n, Int(1));
  for (const Int& s : scores)
    if (s != half) {
      c.pass = false;
      c.add("reason", "not regular: a score differs from (n-1)/2");
      return c;
    }
  IntMat target = Int(t) * IntMat::ones(n) + (half - t) * IntMat::identity(n);
  if (m * m.transpose() != target) {
    c.pass = false;
    c.add("reason", "A A^T is not tJ + ((n-1)/2 - t)I");
  }
  return c;
}

Certificate verify_two_squares(const IntMat& m) {
  if (!m.square()) throw input_error("matrix must be square");
  const std::size_t n = m.rows();
  if (n < 1) throw input_error("order must be positive");
  Certificate c(property_name(Property::two_squares_necessary), false);
  const Int target = 2 * (Int(n) - 1);
  c.add("order", std::to_string(n));
  c.add("value", to_string(target));
  for (Int a = 0; a * a * 2 <= target; ++a) {
    Int b = perfect_sqrt(target - a * a);
    if (b >= 0) {
      c.pass = true;
      c.add("a", to_string(a));
      c.add("b", to_string(b));
      return c;
    }
  }
  c.add("reason", "2(n-1) is not a sum of two squares");
  return c;
}

Certificate verify_det_mod4(const IntMat& m) {
  SeidelMatrix s = make_seidel(m);
  if (s.kind != SeidelKind::symmetric)
    throw input_error("det-mod4 applies to symmetric Seidel matrices");
  const std::size_t n = s.order();
  Certificate c(property_name(Property::det_mod4), true);
  Int d = det(m);
  c.add("det", to_string(d));
  c.add("expected_mod4", to_string(Int((1 - Int(n)) % 4)));
  if ((d - (1 - Int(n))) % 4 != 0) {
    c.pass = false;
    c.add("reason", "det is not 1-n mod 4");
  }
  return c;
}

}  // namespace

std::string property_name(Property p) {
  switch (p) {
    case Property::hadamard: return "hadamard";
    case Property::skew_type: return "skew-type";
    case Property::ew: return "ew";
    case Property::conference: return "conference";
    case Property::doubly_regular: return "doubly-regular";
    case Property::two_squares_necessary: return "two-squares-necessary";
    case Property::det_mod4: return "det-mod4";
  }
  throw internal_error("unhandled property");
}

std::optional<Property> property_from_name(const std::string& name) {
  for (Property p :
       {Property::hadamard, Property::skew_type, Property::ew,
        Property::conference, Property::doubly_regular,
        Property::two_squares_necessary, Property::det_mod4})
    if (property_name(p) == name) return p;
  return std::nullopt;
}

Certificate verify(Property p, const IntMat& m) {
  switch (p) {
    case Property::hadamard: return verify_hadamard(m);
    case Property::skew_type: return verify_skew_type(m);
    case Property::ew: return verify_ew(m);
    case Property::conference: return verify_conference(m);
    case Property::doubly_regular: return verify_doubly_regular(m);
    case Property::two_squares_necessary: return verify_two_squares(m);
    case Property::det_mod4: return verify_det_mod4(m);
  }
  throw internal_error("unhandled property");
}

Certificate spectrum_check(const IntMat& m, const FactoredPoly& target) {
  Certificate c("spectrum", true);
  IntPoly got = charpoly(m);
  IntPoly want = target.expand();
  c.add("charpoly", got.str());
  c.add("target", want.str());
  if (got == want) return c;
  c.pass = false;
  if (got.degree() != want.degree()) {
    c.add("reason", "degree mismatch");
    return c;
  }
  for (std::size_t i = 0; i < got.c.size(); ++i)
    if (got.c[i] != want.c[i]) {
      c.add("mismatch_at", std::to_string(i));
      c.add("got", to_string(got.c[i]));
      c.add("expected", to_string(want.c[i]));
      break;
    }
  return c;
}

Certificate score_profile(const IntMat& m, ScoreMode mode) {
  std::map<Int, unsigned long> expected;
  std::size_t n;
  if (mode == ScoreMode::tournament) {
    Tournament a(m);
    n = a.order();
    if (n % 4 != 1 || n < 5)
      throw input_error("tournament score profile needs order 4t+1, t >= 1");
    const unsigned long t = (n - 1) / 4;
    expected[Int(2 * t + 1)] = t;
    expected[Int(2 * t)] = 2 * t + 1;
    expected[Int(2 * t - 1)] = t;
  } else {
    SeidelMatrix s = make_seidel(m);
    n = s.order();
    if (n % 4 != 2 || n < 6)
      throw input_error("Seidel score profile needs order 4t+2, t >= 1");
    const unsigned long t = (n - 2) / 4;
    expected[Int(4 * t + 1)] = 1;
    expected[Int(1)] = t;
    expected[Int(-1)] = 2 * t + 1;
    expected[Int(-3)] = t;
  }
  Vec sums = m * Vec(n, Int(1));
  std::map<Int, unsigned long> got;
  for (const Int& s : sums) ++got[s];

  Certificate c("score-profile", got == expected);
  c.add("mode", mode == ScoreMode::tournament ? "tournament" : "seidel");
  std::string profile;
  for (const auto& [value, count] : got) {
    if (!profile.empty()) profile += ' ';
    profile += to_string(value) + "x" + std::to_string(count);
  }
  c.add("row_sums", profile);
  if (!c.pass) c.add("reason", "row-sum multiset mismatch");
  return c;
}

}  // namespace ewkit
