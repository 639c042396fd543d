#include "ewkit/constructions.hpp"

#include <algorithm>

#include "ewkit/errors.hpp"
#include "ewkit/linalg.hpp"

namespace ewkit {

namespace {

// row-major lexicographic comparison, used for canonical representatives
bool lex_less(const IntMat& a, const IntMat& b) {
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) {
      if (a.at(i, j) != b.at(i, j)) return a.at(i, j) < b.at(i, j);
    }
  return false;
}

IntMat bordered(const IntMat& t, const Vec& x, SeidelKind kind) {
  const std::size_t n = t.rows();
  IntMat m(n + 1, n + 1);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) m.at(i, j) = t.at(i, j);
    m.at(i, n) = x[i];
    m.at(n, i) = kind == SeidelKind::skew ? Int(-x[i]) : x[i];
  }
  return m;
}

bool all_pm1(const Vec& x) {
  for (const Int& v : x)
    if (v != 1 && v != -1) return false;
  return true;
}

// the four-block matrix with diagonal blocks 3J, J against the first group,
// -J between the three classes
IntMat four_block_target(const std::vector<std::size_t>& sizes) {
  std::size_t n = 0;
  for (std::size_t s : sizes) n += s;
  std::vector<std::size_t> group(n);
  for (std::size_t g = 0, at = 0; g < sizes.size(); ++g)
    for (std::size_t k = 0; k < sizes[g]; ++k) group[at++] = g;
  IntMat m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (group[i] == group[j])
        m.at(i, j) = 3;
      else if (group[i] == 0 || group[j] == 0)
        m.at(i, j) = 1;
      else
        m.at(i, j) = -1;
    }
  return m;
}

IntMat square_matrix(const SeidelMatrix& s, unsigned long t) {
  const std::size_t n = s.order();
  IntMat s2 = s.body * s.body;
  if (s.kind == SeidelKind::skew)
    return Int(4 * Int(t) + 3) * IntMat::identity(n) + s2;
  return Int(4 * Int(t) + 1) * IntMat::identity(n) - s2;
}

Family stage_family(SeidelKind kind, Stage st) {
  if (kind == SeidelKind::skew) {
    switch (st) {
      case Stage::full: return Family::skew_full;
      case Stage::minus1: return Family::skew_del1;
      case Stage::minus2: return Family::skew_del2;
      case Stage::minus3: return Family::skew_del3;
    }
  } else {
    switch (st) {
      case Stage::full: return Family::sym_full;
      case Stage::minus1: return Family::sym_del1;
      case Stage::minus2: return Family::sym_del2;
      case Stage::minus3: return Family::sym_del3;
    }
  }
  throw internal_error("unhandled stage");
}

// stage and t from the order and kind; the order class determines both
std::pair<Stage, unsigned long> stage_of_order(SeidelKind kind, std::size_t n) {
  const Stage stages[] = {Stage::full, Stage::minus1, Stage::minus2,
                          Stage::minus3};
  for (Stage st : stages) {
    const std::size_t deleted = static_cast<std::size_t>(st);
    const std::size_t full_order = n + deleted;
    const std::size_t base = kind == SeidelKind::skew ? 4 : 2;
    if (full_order < base + 4 || (full_order - base) % 4 != 0) continue;
    return {st, (full_order - base) / 4};
  }
  throw precondition_error("order matches no completion stage");
}

}  // namespace

IntMat hadamard_from_conference(const SeidelMatrix& c) {
  if (c.kind != SeidelKind::skew)
    throw precondition_error("need a skew conference matrix");
  if (!verify(Property::conference, c.body).pass)
    throw precondition_error("matrix is not a conference matrix");
  return c.body + IntMat::identity(c.order());
}

IntMat delete_principal(const IntMat& m, const std::vector<std::size_t>& idx) {
  if (!m.square()) throw input_error("principal deletion needs a square matrix");
  const std::size_t n = m.rows();
  std::vector<bool> drop(n, false);
  for (std::size_t i : idx) {
    if (i >= n) throw input_error("deletion index out of range");
    if (drop[i]) throw input_error("duplicate deletion index");
    drop[i] = true;
  }
  if (idx.size() >= n) throw input_error("cannot delete every index");
  std::vector<std::size_t> keep;
  for (std::size_t i = 0; i < n; ++i)
    if (!drop[i]) keep.push_back(i);
  IntMat r(keep.size(), keep.size());
  for (std::size_t i = 0; i < keep.size(); ++i)
    for (std::size_t j = 0; j < keep.size(); ++j)
      r.at(i, j) = m.at(keep[i], keep[j]);
  return r;
}

std::pair<SignedPermutation, std::vector<std::size_t>> psd_block_normalize(
    const IntMat& m) {
  if (!m.square()) throw input_error("matrix must be square");
  const std::size_t n = m.rows();
  for (std::size_t i = 0; i < n; ++i) {
    if (m.at(i, i) != 1) throw input_error("diagonal entries must be 1");
    for (std::size_t j = 0; j < n; ++j)
      if (i != j && m.at(i, j) != 0 && m.at(i, j) != 1 && m.at(i, j) != -1)
        throw input_error("entries must be 0 or +-1");
  }

  // connected components of the nonzero pattern, signs propagated from the
  // component root
  std::vector<int> sign(n, 0);
  std::vector<std::vector<std::size_t>> comps;
  for (std::size_t root = 0; root < n; ++root) {
    if (sign[root] != 0) continue;
    std::vector<std::size_t> comp{root};
    sign[root] = 1;
    for (std::size_t head = 0; head < comp.size(); ++head) {
      std::size_t i = comp[head];
      for (std::size_t j = 0; j < n; ++j) {
        if (j == i || m.at(i, j) == 0 || sign[j] != 0) continue;
        sign[j] = m.at(i, j) == 1 ? sign[i] : -sign[i];
        comp.push_back(j);
      }
    }
    std::sort(comp.begin(), comp.end());
    // inside one block every pair must agree with the propagated signs
    for (std::size_t a = 0; a < comp.size(); ++a)
      for (std::size_t b = a + 1; b < comp.size(); ++b)
        if (m.at(comp[a], comp[b]) != sign[comp[a]] * sign[comp[b]])
          throw precondition_error(
              "matrix is not switching equivalent to all-ones blocks");
    comps.push_back(std::move(comp));
  }

  std::stable_sort(comps.begin(), comps.end(),
                   [](const std::vector<std::size_t>& a,
                      const std::vector<std::size_t>& b) {
                     if (a.size() != b.size()) return a.size() > b.size();
                     return a.front() < b.front();
                   });

  SignedPermutation p;
  std::vector<std::size_t> sizes;
  for (const auto& comp : comps) {
    sizes.push_back(comp.size());
    for (std::size_t i : comp) {
      p.perm.push_back(i);
      p.signs.push_back(sign[i]);
    }
  }
  return {p, sizes};
}

std::string stage_name(Stage st) {
  switch (st) {
    case Stage::full: return "full";
    case Stage::minus1: return "minus1";
    case Stage::minus2: return "minus2";
    case Stage::minus3: return "minus3";
  }
  throw internal_error("unhandled stage");
}

SquareFormClass square_form(const SeidelMatrix& s) {
  const std::size_t n = s.order();
  auto [stage, t] = stage_of_order(s.kind, n);
  IntPoly chi = charpoly(s.body);
  bool match = chi == target_charpoly(stage_family(s.kind, stage), t).expand();
  if (!match && s.kind == SeidelKind::symmetric && stage == Stage::minus3)
    match = chi == target_charpoly(Family::sym_del3_alt, t).expand();
  if (!match)
    throw precondition_error(
        "characteristic polynomial matches no completion stage");

  IntMat m = square_matrix(s, t);
  SquareFormClass result;
  result.kind = s.kind;
  result.stage = stage;
  result.t = t;

  switch (stage) {
    case Stage::full: {
      if (m != IntMat::zero(n)) throw internal_error("square is not -qI");
      result.switching = SignedPermutation::identity(n);
      result.canonical = std::move(m);
      break;
    }
    case Stage::minus1: {
      auto [p, sizes] = psd_block_normalize(m);
      if (sizes != std::vector<std::size_t>{n})
        throw internal_error("rank-one square did not normalize to J");
      result.switching = p;
      result.canonical = apply_switching(p, m);
      break;
    }
    case Stage::minus2: {
      IntMat half(n, n);
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
          half.at(i, j) = exact_div(m.at(i, j), Int(2));
      auto [p, sizes] = psd_block_normalize(half);
      if (sizes != std::vector<std::size_t>{n / 2, n / 2})
        throw internal_error("rank-two square did not split into equal blocks");
      result.switching = p;
      result.canonical = apply_switching(p, m);
      break;
    }
    case Stage::minus3: {
      auto [p, rows] = normalize_four_block(s, m);
      result.switching = p;
      result.canonical = apply_switching(p, m);
      if (result.canonical != four_block_target(rows.sizes))
        throw internal_error("four-block normalization is inconsistent");
      break;
    }
  }
  return result;
}

std::pair<SignedPermutation, BlockRows> normalize_four_block(
    const SeidelMatrix& s, const IntMat& m) {
  const std::size_t n = s.order();
  if (m.rows() != n || m.cols() != n)
    throw input_error("square matrix has the wrong order");
  const bool skew = s.kind == SeidelKind::skew;
  if (skew ? n % 4 != 1 : n % 4 != 3)
    throw precondition_error("order matches no four-block stage");
  const unsigned long t = skew ? (n - 1) / 4 : (n + 1) / 4;
  if (t < 1) throw precondition_error("stage parameter must be >= 1");
  const Int extreme = skew ? Int(4 * t + 3) : Int(4 * t - 3);

  std::vector<Vec> null = kernel(m - extreme * IntMat::identity(n));
  if (null.size() != 1)
    throw precondition_error("extreme eigenvalue of the square is not simple");
  const Vec& v = null[0];

  std::vector<int> sign(n);
  std::vector<std::size_t> first_group;
  std::vector<std::size_t> rest;
  for (std::size_t i = 0; i < n; ++i) {
    if (v[i] == 0 || (v[i] != 1 && v[i] != -1 && v[i] != 3 && v[i] != -3))
      throw precondition_error("eigenvector entries are not +-1, +-3");
    sign[i] = v[i] > 0 ? 1 : -1;
    if (v[i] == 3 || v[i] == -3)
      first_group.push_back(i);
    else
      rest.push_back(i);
  }
  const std::size_t expected_first = skew ? t + 1 : t - 1;
  if (first_group.size() != expected_first)
    throw precondition_error("first block has the wrong size");

  // partition the rest into the three classes joined by entries +3
  std::vector<std::vector<std::size_t>> classes;
  std::vector<bool> assigned(n, false);
  for (std::size_t i : rest) {
    if (assigned[i]) continue;
    std::vector<std::size_t> cls{i};
    assigned[i] = true;
    for (std::size_t j : rest) {
      if (assigned[j]) continue;
      if (Int(sign[i] * sign[j]) * m.at(i, j) == 3) {
        cls.push_back(j);
        assigned[j] = true;
      }
    }
    classes.push_back(std::move(cls));
  }
  if (classes.size() != 3)
    throw precondition_error("indices do not split into three classes");
  for (const auto& cls : classes)
    if (cls.size() != t) throw precondition_error("class sizes are not t");

  SignedPermutation p;
  BlockRows rows;
  rows.sizes = {expected_first, t, t, t};
  auto append = [&](const std::vector<std::size_t>& idx) {
    for (std::size_t i : idx) {
      p.perm.push_back(i);
      p.signs.push_back(sign[i]);
    }
  };
  append(first_group);
  for (const auto& cls : classes) append(cls);

  IntMat canonical = apply_switching(p, m);
  if (canonical != four_block_target(rows.sizes))
    throw precondition_error("matrix does not switch into the four-block form");

  for (std::size_t g = 0; g < 4; ++g) {
    Vec r(n);
    std::size_t at = 0;
    for (std::size_t b = 0; b < 4; ++b)
      for (std::size_t k = 0; k < rows.sizes[b]; ++k, ++at) {
        if (b == g)
          r[at] = 3;
        else if (b == 0 || g == 0)
          r[at] = 1;
        else
          r[at] = -1;
      }
    rows.r.push_back(std::move(r));
  }

  if (skew) {
    Vec sr = apply_switching(p, s.body) * rows.r[0];
    for (const Int& x : sr)
      if (x != 0)
        throw precondition_error("first block row is not a null vector of S");
  }
  return {p, rows};
}

Certificate sm_form_check(const SeidelMatrix& s, const SignedPermutation& p,
                          const BlockRows& rows) {
  if (s.kind != SeidelKind::skew)
    throw input_error("the SM product form applies to the skew kind");
  const std::size_t n = s.order();
  if (n % 4 != 1 || n < 5) throw input_error("order must be 4t+1 with t >= 1");
  const unsigned long t = (n - 1) / 4;
  if (rows.sizes != std::vector<std::size_t>{t + 1, t, t, t})
    throw input_error("block sizes do not match the order");

  IntMat m = square_matrix(s, t);
  IntMat x = apply_switching(p, s.body * m);

  Certificate cert("sm-form", true);
  cert.add("t", std::to_string(t));
  auto fail = [&cert](const std::string& why) {
    cert.pass = false;
    cert.add("reason", why);
    return cert;
  };

  // first group rows and columns vanish
  const std::size_t head = t + 1;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if ((i < head || j < head) && x.at(i, j) != 0)
        return fail("first block group does not vanish");

  // constant +-4J blocks off the diagonal, zero blocks on it
  int orient[3][3] = {};
  for (std::size_t g = 0; g < 3; ++g)
    for (std::size_t h = 0; h < 3; ++h) {
      const Int want = x.at(head + g * t, head + h * t);
      if (g == h ? want != 0 : (want != 4 && want != -4))
        return fail("block is not 0 or +-4");
      for (std::size_t a = 0; a < t; ++a)
        for (std::size_t b = 0; b < t; ++b)
          if (x.at(head + g * t + a, head + h * t + b) != want)
            return fail("block is not constant");
      if (g != h) orient[g][h] = want > 0 ? 1 : -1;
    }
  for (std::size_t g = 0; g < 3; ++g) {
    int out = 0;
    for (std::size_t h = 0; h < 3; ++h)
      if (g != h && orient[g][h] > 0) ++out;
    if (out != 1) return fail("block orientation is not cyclic");
  }

  std::vector<Int> target(4 * t + 2, Int(0));
  target[4 * t - 1] = Int(48) * Int(t) * Int(t);
  target[4 * t + 1] = 1;
  if (charpoly(x) != IntPoly(std::move(target)))
    return fail("SM charpoly mismatch");
  return cert;
}

SeidelMatrix complete_step(const SeidelMatrix& s) {
  const std::size_t n = s.order();
  SquareFormClass sf = square_form(s);
  if (sf.stage == Stage::full)
    throw precondition_error("matrix is already a conference matrix");

  const Stage next = static_cast<Stage>(static_cast<int>(sf.stage) - 1);
  const IntPoly target =
      target_charpoly(stage_family(s.kind, next), sf.t).expand();

  std::vector<Vec> candidates;
  IntMat body = apply_switching(sf.switching, s.body);

  if (sf.stage == Stage::minus1) {
    candidates.emplace_back(n, Int(1));
  } else if (sf.stage == Stage::minus2) {
    Vec s1 = body * Vec(n, Int(1));
    Vec neg(n);
    for (std::size_t i = 0; i < n; ++i) neg[i] = -s1[i];
    Vec star(n, Int(1));
    for (std::size_t i = n / 2; i < n; ++i) star[i] = -1;
    Vec nstar(n);
    for (std::size_t i = 0; i < n; ++i) nstar[i] = -star[i];
    candidates = {std::move(neg), std::move(s1), std::move(star),
                  std::move(nstar)};
  } else {
    IntMat m = square_matrix(s, sf.t);
    auto [p, rows] = normalize_four_block(s, m);
    body = apply_switching(p, s.body);
    for (std::size_t g = 1; g < 4; ++g) {
      Vec x(n), nx(n);
      for (std::size_t i = 0; i < n; ++i) {
        x[i] = exact_div(rows.r[0][i] - rows.r[g][i], Int(2));
        nx[i] = -x[i];
      }
      candidates.push_back(std::move(x));
      candidates.push_back(std::move(nx));
    }
  }

  for (const Vec& x : candidates) {
    if (!all_pm1(x)) continue;
    IntMat b = bordered(body, x, s.kind);
    if (charpoly(b) == target) return SeidelMatrix(s.kind, std::move(b));
  }
  throw internal_error("no bordering candidate hit the next stage target");
}

SeidelMatrix complete_to_conference(const SeidelMatrix& s) {
  SeidelMatrix cur = s;
  for (int step = 0; step < 4; ++step) {
    if (verify(Property::conference, cur.body).pass) return cur;
    cur = complete_step(cur);
  }
  throw internal_error("completion did not terminate");
}

std::pair<SignedPermutation, SeidelMatrix> switching_form(
    const SeidelMatrix& s) {
  const std::size_t n = s.order();
  if (s.kind != SeidelKind::skew || n % 4 != 2 || n < 6)
    throw precondition_error("matrix is not an EW Seidel matrix");
  const unsigned long t = (n - 2) / 4;
  if (charpoly(s.body) != target_charpoly(Family::ew_seidel, t).expand())
    throw precondition_error("charpoly is not the EW Seidel target");

  IntMat m = s.body * s.body.transpose() -
             Int(4 * Int(t) - 1) * IntMat::identity(n);
  IntMat half(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      half.at(i, j) = exact_div(m.at(i, j), Int(2));
  auto [p, sizes] = psd_block_normalize(half);
  if (sizes != std::vector<std::size_t>{2 * t + 1, 2 * t + 1})
    throw internal_error("Gram blocks of an EW Seidel matrix must be equal");
  return {p, SeidelMatrix(SeidelKind::skew, apply_switching(p, s.body))};
}

Tournament ew_to_tournament(const IntMat& m) {
  if (!m.square() || m.rows() % 4 != 2 || m.rows() < 6)
    throw precondition_error("EW matrix must have order 4t+2, t >= 1");
  if (!verify(Property::ew, m).pass || !verify(Property::skew_type, m).pass)
    throw precondition_error("matrix is not a skew-type EW matrix");
  const std::size_t n = m.rows();
  const unsigned long t = (n - 2) / 4;

  SeidelMatrix s = make_seidel(m - IntMat::identity(n));
  SeidelMatrix ns = normalize(s).second;
  // A' = (J - (NS + I))/2 has a zero first row; drop that index
  IntMat a =
      delete_principal(IntMat::ones(n) - IntMat::identity(n) - ns.body, {0});
  for (std::size_t i = 0; i + 1 < n; ++i)
    for (std::size_t j = 0; j + 1 < n; ++j)
      a.at(i, j) = exact_div(a.at(i, j), Int(2));
  Tournament result(std::move(a));
  if (charpoly(result.body) !=
      target_charpoly(Family::ew_tournament, t).expand())
    throw internal_error("derived tournament missed the target charpoly");
  return result;
}

IntMat tournament_to_ew(const Tournament& a) {
  const std::size_t n = a.order();
  if (n % 4 != 1 || n < 5)
    throw precondition_error("tournament must have order 4t+1, t >= 1");
  const unsigned long t = (n - 1) / 4;
  if (charpoly(a.body) != target_charpoly(Family::ew_tournament, t).expand())
    throw precondition_error("charpoly is not the EW tournament target");

  // S' = J - I - 2A, bordered by a +1 row and -1 column in front
  IntMat s(n + 1, n + 1);
  for (std::size_t j = 1; j <= n; ++j) {
    s.at(0, j) = 1;
    s.at(j, 0) = -1;
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (i != j) s.at(i + 1, j + 1) = 1 - 2 * a.body.at(i, j);
  SeidelMatrix bs(SeidelKind::skew, std::move(s));
  if (charpoly(bs.body) != target_charpoly(Family::ew_seidel, t).expand())
    throw internal_error("bordered Seidel matrix missed the target charpoly");

  IntMat result =
      switching_form(bs).second.body + IntMat::identity(n + 1);
  if (!verify(Property::ew, result).pass ||
      !verify(Property::skew_type, result).pass)
    throw internal_error("switching form did not yield an EW matrix");
  return result;
}

Enum33Result enumerate_33psd() {
  const Int values[] = {Int(-3), Int(-1), Int(1), Int(3)};

  // the full signed permutation group on three indices
  std::vector<SignedPermutation> group;
  std::vector<std::size_t> perm{0, 1, 2};
  do {
    for (int mask = 0; mask < 8; ++mask) {
      SignedPermutation p;
      p.perm = perm;
      for (std::size_t i = 0; i < 3; ++i)
        p.signs.push_back((mask >> i) & 1 ? -1 : 1);
      group.push_back(std::move(p));
    }
  } while (std::next_permutation(perm.begin(), perm.end()));

  Enum33Result result;
  result.raw_count = 0;
  for (const Int& a : values)
    for (const Int& b : values)
      for (const Int& c : values) {
        IntMat m(3, 3);
        m.at(0, 0) = m.at(1, 1) = m.at(2, 2) = 3;
        m.at(0, 1) = m.at(1, 0) = a;
        m.at(0, 2) = m.at(2, 0) = b;
        m.at(1, 2) = m.at(2, 1) = c;
        if (!psd_check(m)) continue;
        ++result.raw_count;
        IntMat canon = m;
        for (const SignedPermutation& g : group) {
          IntMat image = apply_switching(g, m);
          if (lex_less(canon, image)) canon = std::move(image);
        }
        bool seen = false;
        for (const IntMat& rep : result.classes)
          if (rep == canon) {
            seen = true;
            break;
          }
        if (!seen) result.classes.push_back(std::move(canon));
      }

  std::sort(result.classes.begin(), result.classes.end(),
            [](const IntMat& x, const IntMat& y) { return lex_less(y, x); });
  return result;
}

}  // namespace ewkit
