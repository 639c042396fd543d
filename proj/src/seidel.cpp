#include "ewkit/seidel.hpp"

#include "ewkit/errors.hpp"

namespace ewkit {

namespace {

void check_seidel_body(SeidelKind kind, const IntMat& b) {
  if (!b.square()) throw input_error("Seidel matrix must be square");
  const std::size_t n = b.rows();
  for (std::size_t i = 0; i < n; ++i) {
    if (b.at(i, i) != 0) throw input_error("Seidel matrix needs a zero diagonal");
    for (std::size_t j = i + 1; j < n; ++j) {
      const Int& u = b.at(i, j);
      const Int& l = b.at(j, i);
      if (u != 1 && u != -1)
        throw input_error("Seidel matrix entries must be +1 or -1 off the diagonal");
      if (kind == SeidelKind::skew ? l != -u : l != u)
        throw input_error(kind == SeidelKind::skew
                              ? "matrix is not skew-symmetric"
                              : "matrix is not symmetric");
    }
  }
}

}  // namespace

SeidelMatrix::SeidelMatrix(SeidelKind k, IntMat b) : kind(k), body(std::move(b)) {
  check_seidel_body(kind, body);
}

SeidelMatrix make_seidel(IntMat body) {
  if (!body.square()) throw input_error("Seidel matrix must be square");
  if (body.rows() <= 1) return SeidelMatrix(SeidelKind::skew, std::move(body));
  // Any one off-diagonal pair fixes the kind; the constructor checks the rest.
  SeidelKind k = body.at(1, 0) == body.at(0, 1) ? SeidelKind::symmetric
                                                : SeidelKind::skew;
  return SeidelMatrix(k, std::move(body));
}

Tournament::Tournament(IntMat b) : body(std::move(b)) {
  if (!body.square()) throw input_error("tournament matrix must be square");
  const std::size_t n = body.rows();
  for (std::size_t i = 0; i < n; ++i) {
    if (body.at(i, i) != 0)
      throw input_error("tournament matrix needs a zero diagonal");
    for (std::size_t j = i + 1; j < n; ++j) {
      const Int& u = body.at(i, j);
      const Int& l = body.at(j, i);
      if ((u != 0 && u != 1) || (l != 0 && l != 1) || u + l != 1)
        throw input_error("each pair must have exactly one arc");
    }
  }
}

SignedPermutation SignedPermutation::identity(std::size_t n) {
  SignedPermutation p;
  p.perm.resize(n);
  p.signs.assign(n, 1);
  for (std::size_t j = 0; j < n; ++j) p.perm[j] = j;
  return p;
}

IntMat SignedPermutation::to_matrix() const {
  const std::size_t n = perm.size();
  IntMat m(n, n);
  for (std::size_t j = 0; j < n; ++j) m.at(perm[j], j) = signs[j];
  return m;
}

SignedPermutation SignedPermutation::inverse() const {
  const std::size_t n = perm.size();
  SignedPermutation inv;
  inv.perm.resize(n);
  inv.signs.resize(n);
  for (std::size_t j = 0; j < n; ++j) {
    inv.perm[perm[j]] = j;
    inv.signs[perm[j]] = signs[j];
  }
  return inv;
}

SignedPermutation operator*(const SignedPermutation& a,
                            const SignedPermutation& b) {
  // column j of a*b is b.signs[j] * (column b.perm[j] of a)
  const std::size_t n = a.perm.size();
  if (b.perm.size() != n) throw input_error("signed permutation size mismatch");
  SignedPermutation c;
  c.perm.resize(n);
  c.signs.resize(n);
  for (std::size_t j = 0; j < n; ++j) {
    c.perm[j] = a.perm[b.perm[j]];
    c.signs[j] = a.signs[b.perm[j]] * b.signs[j];
  }
  return c;
}

IntMat apply_switching(const SignedPermutation& p, const IntMat& m) {
  const std::size_t n = p.perm.size();
  if (m.rows() != n || m.cols() != n)
    throw input_error("switching size mismatch");
  IntMat r(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      r.at(i, j) = Int(p.signs[i] * p.signs[j]) * m.at(p.perm[i], p.perm[j]);
  return r;
}

std::pair<SignedPermutation, SeidelMatrix> normalize(const SeidelMatrix& s) {
  const std::size_t n = s.order();
  SignedPermutation p = SignedPermutation::identity(n);
  for (std::size_t j = 1; j < n; ++j)
    p.signs[j] = s.body.at(0, j) == 1 ? 1 : -1;
  return {p, SeidelMatrix(s.kind, apply_switching(p, s.body))};
}

SeidelMatrix seidel_from_tournament(const Tournament& a) {
  const std::size_t n = a.order();
  IntMat s(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (i != j) s.at(i, j) = 1 - 2 * a.body.at(i, j);
  return SeidelMatrix(SeidelKind::skew, std::move(s));
}

Tournament tournament_from_seidel(const SeidelMatrix& s) {
  if (s.kind != SeidelKind::skew)
    throw input_error("only a skew Seidel matrix encodes a tournament");
  const std::size_t n = s.order();
  IntMat a(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (i != j) a.at(i, j) = exact_div(1 - s.body.at(i, j), Int(2));
  return Tournament(std::move(a));
}

}  // namespace ewkit
