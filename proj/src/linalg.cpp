#include "ewkit/linalg.hpp"

#include <algorithm>

#include "ewkit/errors.hpp"

namespace ewkit {

// Berkowitz/Samuelson recurrence: grows the characteristic polynomial one
// leading principal submatrix at a time. The r-th step multiplies the current
// coefficient vector by a Toeplitz column built from the new row/column pair,
//   t = (1, -a_rr, -R S, -R M S, -R M^2 S, ...),
// all in integers, with no divisions anywhere.
IntPoly charpoly(const IntMat& m) {
  if (!m.square()) throw input_error("charpoly needs a square matrix");
  const std::size_t n = m.rows();
  std::vector<Int> c{Int(1)};  // descending coefficients of det(xI - M_r)
  for (std::size_t r = 1; r <= n; ++r) {
    std::vector<Int> t(r + 1, Int(0));
    t[0] = 1;
    t[1] = -m.at(r - 1, r - 1);
    if (r >= 2) {
      Vec v(r - 1);  // v = M_{r-1}^(i-2) S, advanced as i grows
      for (std::size_t i = 0; i + 1 < r; ++i) v[i] = m.at(i, r - 1);
      for (std::size_t i = 2; i <= r; ++i) {
        Int rv = 0;
        for (std::size_t k = 0; k + 1 < r; ++k) rv += m.at(r - 1, k) * v[k];
        t[i] = -rv;
        if (i < r) {
          Vec nv(r - 1, Int(0));
          for (std::size_t a = 0; a + 1 < r; ++a)
            for (std::size_t b = 0; b + 1 < r; ++b)
              nv[a] += m.at(a, b) * v[b];
          v = std::move(nv);
        }
      }
    }
    std::vector<Int> nc(r + 1, Int(0));
    for (std::size_t k = 0; k <= r; ++k)
      for (std::size_t i = 0; i <= k && i < t.size(); ++i)
        if (k - i < c.size()) nc[k] += t[i] * c[k - i];
    c = std::move(nc);
  }
  std::reverse(c.begin(), c.end());
  return IntPoly(std::move(c));
}

// Fraction-free (Bareiss) elimination: every intermediate entry is a minor of
// the original matrix, so the division by the previous pivot is exact.
Int det(const IntMat& m) {
  if (!m.square()) throw input_error("det needs a square matrix");
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  std::vector<std::vector<Int>> a(n, std::vector<Int>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) a[i][j] = m.at(i, j);
  int sign = 1;
  Int prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    std::size_t piv = k;
    while (piv < n && a[piv][k] == 0) ++piv;
    if (piv == n) return 0;
    if (piv != k) {
      std::swap(a[piv], a[k]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j)
        a[i][j] = exact_div(a[i][j] * a[k][k] - a[i][k] * a[k][j], prev);
      a[i][k] = 0;
    }
    prev = a[k][k];
  }
  return sign > 0 ? a[n - 1][n - 1] : Int(-a[n - 1][n - 1]);
}

std::size_t rank(const IntMat& m) {
  const std::size_t rows = m.rows(), cols = m.cols();
  std::vector<std::vector<Rat>> a(rows, std::vector<Rat>(cols));
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) a[i][j] = Rat(m.at(i, j));
  std::size_t r = 0;
  for (std::size_t col = 0; col < cols && r < rows; ++col) {
    std::size_t piv = r;
    while (piv < rows && a[piv][col] == 0) ++piv;
    if (piv == rows) continue;
    std::swap(a[piv], a[r]);
    for (std::size_t i = r + 1; i < rows; ++i) {
      if (a[i][col] == 0) continue;
      Rat f = a[i][col] / a[r][col];
      for (std::size_t j = col; j < cols; ++j) a[i][j] -= f * a[r][j];
    }
    ++r;
  }
  return r;
}

// A real symmetric matrix has all eigenvalues >= 0 exactly when the
// coefficients of det(xI - M) weakly alternate in sign starting from the
// monic leading term: (-1)^(n-i) c_i >= 0. (Write chi as prod (x - lambda);
// nonnegative roots force the alternation, and a negative root breaks it at
// the elementary symmetric function that sees it.)
bool psd_check(const IntMat& m) {
  if (!m.is_symmetric()) throw input_error("psd_check needs a symmetric matrix");
  IntPoly chi = charpoly(m);
  const std::size_t n = m.rows();
  for (std::size_t i = 0; i <= n; ++i) {
    const Int& ci = chi.c[i];
    if ((n - i) % 2 == 0 ? ci < 0 : ci > 0) return false;
  }
  return true;
}

std::vector<Vec> kernel(const IntMat& m) {
  const std::size_t rows = m.rows(), cols = m.cols();
  std::vector<std::vector<Rat>> a(rows, std::vector<Rat>(cols));
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) a[i][j] = Rat(m.at(i, j));

  // reduced row echelon form
  std::vector<std::size_t> pivot_col;
  std::size_t r = 0;
  for (std::size_t col = 0; col < cols && r < rows; ++col) {
    std::size_t piv = r;
    while (piv < rows && a[piv][col] == 0) ++piv;
    if (piv == rows) continue;
    std::swap(a[piv], a[r]);
    Rat lead = a[r][col];
    for (std::size_t j = col; j < cols; ++j) a[r][j] /= lead;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || a[i][col] == 0) continue;
      Rat f = a[i][col];
      for (std::size_t j = col; j < cols; ++j) a[i][j] -= f * a[r][j];
    }
    pivot_col.push_back(col);
    ++r;
  }

  std::vector<Vec> basis;
  std::size_t next_pivot = 0;
  for (std::size_t f = 0; f < cols; ++f) {
    if (next_pivot < pivot_col.size() && pivot_col[next_pivot] == f) {
      ++next_pivot;
      continue;
    }
    std::vector<Rat> x(cols, Rat(0));
    x[f] = 1;
    for (std::size_t i = 0; i < pivot_col.size(); ++i)
      x[pivot_col[i]] = -a[i][f];
    // scale to a primitive integer vector
    Int den = 1;
    for (const Rat& v : x) den = lcm(den, Int(v.get_den()));
    Vec iv(cols);
    Int content = 0;
    for (std::size_t j = 0; j < cols; ++j) {
      iv[j] = Int(x[j].get_num()) * exact_div(den, Int(x[j].get_den()));
      content = gcd(content, iv[j]);
    }
    if (content > 1)
      for (Int& v : iv) v = exact_div(v, content);
    for (const Int& v : iv) {
      if (v == 0) continue;
      if (v < 0)
        for (Int& w : iv) w = -w;
      break;
    }
    basis.push_back(std::move(iv));
  }
  return basis;
}

}  // namespace ewkit
