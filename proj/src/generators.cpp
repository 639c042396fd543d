#include "ewkit/generators.hpp"

#include <algorithm>
#include <numeric>
#include <random>

#include "ewkit/errors.hpp"
#include "ewkit/verify.hpp"

namespace ewkit {

namespace {

bool is_prime(unsigned long q) {
  if (q < 2) return false;
  for (unsigned long d = 2; d * d <= q; ++d)
    if (q % d == 0) return false;
  return true;
}

// Legendre symbol via Euler's criterion, a^((q-1)/2) mod q
int legendre(unsigned long a, unsigned long q) {
  a %= q;
  if (a == 0) return 0;
  unsigned long r = 1, base = a, e = (q - 1) / 2;
  while (e) {
    if (e & 1) r = r * base % q;
    base = base * base % q;
    e >>= 1;
  }
  return r == 1 ? 1 : -1;
}

}  // namespace

SeidelMatrix paley(unsigned long q) {
  if (!is_prime(q) || q % 2 == 0)
    throw input_error("q must be an odd prime");
  const bool skew = q % 4 == 3;

  IntMat c(q + 1, q + 1);
  for (unsigned long j = 0; j < q; ++j) {
    c.at(0, j + 1) = 1;
    c.at(j + 1, 0) = skew ? -1 : 1;
  }
  for (unsigned long i = 0; i < q; ++i)
    for (unsigned long j = 0; j < q; ++j)
      if (i != j) c.at(i + 1, j + 1) = legendre((q + j - i) % q, q);

  SeidelMatrix s(skew ? SeidelKind::skew : SeidelKind::symmetric,
                 std::move(c));
  if (!verify(Property::conference, s.body).pass)
    throw internal_error("quadratic residue construction failed verification");
  return s;
}

namespace {

struct Searcher {
  const SearchConfig& cfg;
  std::size_t n, half;
  IntMat w;
  std::vector<IntMat> found;
  std::uint64_t nodes = 0;
  bool done = false;

  explicit Searcher(const SearchConfig& c)
      : cfg(c), n(c.order), half(c.order / 2), w(c.order, c.order) {}

  Int target(std::size_t i, std::size_t j) const {
    if (i == j) return Int(n);
    return (i < half) == (j < half) ? Int(2) : Int(0);
  }

  // exact window pruning: a partial inner product of two +-1 rows can still
  // move by at most one per remaining entry
  bool row_ok(std::size_t i, std::size_t j) const {
    for (std::size_t k = 0; k < i; ++k) {
      Int partial = 0;
      for (std::size_t c = 0; c <= j; ++c) partial += w.at(i, c) * w.at(k, c);
      Int gap = partial - target(i, k);
      if (gap < 0) gap = -gap;
      if (gap > Int(n - 1 - j)) return false;
    }
    return true;
  }

  bool cols_ok(std::size_t i) const {
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = a + 1; b < n; ++b) {
        Int partial = 0;
        for (std::size_t r = 0; r <= i; ++r) partial += w.at(r, a) * w.at(r, b);
        Int gap = partial - target(a, b);
        if (gap < 0) gap = -gap;
        if (gap > Int(n - 1 - i)) return false;
      }
    return true;
  }

  void place(std::size_t i, std::size_t j, Int value) {
    if (done) return;
    if (++nodes > cfg.node_limit) {
      done = true;
      return;
    }
    w.at(i, j) = value;
    if (!row_ok(i, j)) return;
    if (j + 1 < n) {
      step(i, j + 1);
      return;
    }
    if (!cols_ok(i)) return;
    if (i + 1 < n) {
      step(i + 1, 0);
      return;
    }
    found.push_back(w);
    if (found.size() >= cfg.limit) done = true;
  }

  void step(std::size_t i, std::size_t j) {
    if (cfg.skew_only && i == j) {
      place(i, j, Int(1));
      return;
    }
    if (cfg.skew_only && i > j) {
      place(i, j, Int(-w.at(j, i)));
      return;
    }
    place(i, j, Int(1));
    if (done) return;
    place(i, j, Int(-1));
  }
};

}  // namespace

std::vector<IntMat> search_ew(const SearchConfig& cfg) {
  if (cfg.order % 4 != 2 || cfg.order < 2)
    throw input_error("search order must be 2 (mod 4)");
  Searcher s(cfg);
  if (cfg.limit > 0) s.step(0, 0);
  return std::move(s.found);
}

std::pair<SignedPermutation, IntMat> random_switch(const IntMat& m,
                                                   std::uint64_t seed) {
  if (!m.square()) throw input_error("switching needs a square matrix");
  const std::size_t n = m.rows();
  std::mt19937_64 gen(seed);

  SignedPermutation p;
  p.perm.resize(n);
  std::iota(p.perm.begin(), p.perm.end(), std::size_t{0});
  for (std::size_t i = n; i > 1; --i)
    std::swap(p.perm[i - 1], p.perm[gen() % i]);
  for (std::size_t i = 0; i < n; ++i)
    p.signs.push_back(gen() & 1 ? 1 : -1);
  IntMat switched = apply_switching(p, m);
  return {std::move(p), std::move(switched)};
}

Tournament random_tournament(std::size_t n, std::uint64_t seed) {
  std::mt19937_64 gen(seed);
  IntMat a(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      if (gen() & 1)
        a.at(i, j) = 1;
      else
        a.at(j, i) = 1;
    }
  return Tournament(std::move(a));
}

IntPoly oracle_charpoly(const IntMat& m) {
  if (!m.square()) throw input_error("characteristic polynomial needs a square matrix");
  const std::size_t n = m.rows();
  if (n > 6) throw input_error("the oracle is restricted to order <= 6");

  std::vector<std::size_t> sigma(n);
  std::iota(sigma.begin(), sigma.end(), std::size_t{0});
  IntPoly sum;
  do {
    int inversions = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j)
        if (sigma[i] > sigma[j]) ++inversions;
    IntPoly term({Int(inversions % 2 == 0 ? 1 : -1)});
    for (std::size_t i = 0; i < n; ++i) {
      if (i == sigma[i])
        term = term * IntPoly(std::vector<Int>{-m.at(i, i), Int(1)});
      else
        term = term * IntPoly(std::vector<Int>{-m.at(i, sigma[i])});
    }
    sum = sum + term;
  } while (std::next_permutation(sigma.begin(), sigma.end()));
  return sum;
}

}  // namespace ewkit
