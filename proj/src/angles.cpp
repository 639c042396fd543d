#include "ewkit/angles.hpp"

#include "ewkit/errors.hpp"
#include "ewkit/linalg.hpp"

namespace ewkit {

std::vector<Int> power_sums(const SeidelMatrix& s, unsigned long kmax) {
  const std::size_t n = s.order();
  std::vector<Int> ps;
  ps.reserve(kmax + 1);
  ps.push_back(Int(n));
  Vec v(n, Int(1));
  for (unsigned long k = 1; k <= kmax; ++k) {
    v = s.body * v;
    Int sum = 0;
    for (const Int& x : v) sum += x;
    ps.push_back(std::move(sum));
  }
  return ps;
}

Rat MainAngles::at(const Eigenvalue& ev) const {
  for (const auto& [e, a] : entries)
    if (e == ev) return a;
  throw input_error("eigenvalue is not in the spectrum");
}

std::string MainAngles::str() const {
  std::string out;
  for (const auto& [e, a] : entries) {
    if (!out.empty()) out += ", ";
    out += "alpha(" + e.str() + ")=" + to_string(a);
  }
  return out;
}

MainAngles main_angles(const SeidelMatrix& s, const Spectrum& spectrum) {
  if (spectrum.charpoly() != charpoly(s.body))
    throw precondition_error("spectrum does not reproduce the charpoly");

  // Group the distinct eigenvalues by their squared value; each group gets
  // one unknown, its total squared projection.
  std::vector<Int> sq;
  std::vector<std::vector<std::size_t>> members;
  for (std::size_t idx = 0; idx < spectrum.entries.size(); ++idx) {
    const Int d = spectrum.entries[idx].first.squared();
    std::size_t g = 0;
    while (g < sq.size() && sq[g] != d) ++g;
    if (g == sq.size()) {
      sq.push_back(d);
      members.emplace_back();
    }
    members[g].push_back(idx);
  }
  const std::size_t G = sq.size();
  if (G == 0) return {};

  // Vandermonde system in the squared values: sum_g sq_g^k T_g = p_{2k}.
  std::vector<Int> ps = power_sums(s, 2 * (G - 1));
  std::vector<std::vector<Rat>> aug(G, std::vector<Rat>(G + 1));
  std::vector<Int> pw(G, Int(1));
  for (std::size_t k = 0; k < G; ++k) {
    for (std::size_t g = 0; g < G; ++g) {
      aug[k][g] = Rat(pw[g]);
      pw[g] *= sq[g];
    }
    aug[k][G] = Rat(ps[2 * k]);
  }
  for (std::size_t col = 0; col < G; ++col) {
    std::size_t piv = col;
    while (piv < G && aug[piv][col] == 0) ++piv;
    if (piv == G) throw internal_error("singular Vandermonde system");
    std::swap(aug[piv], aug[col]);
    for (std::size_t i = 0; i < G; ++i) {
      if (i == col || aug[i][col] == 0) continue;
      Rat f = aug[i][col] / aug[col][col];
      for (std::size_t j = col; j <= G; ++j) aug[i][j] -= f * aug[col][j];
    }
  }

  MainAngles result;
  result.entries.resize(spectrum.entries.size());
  for (std::size_t g = 0; g < G; ++g) {
    Rat total = aug[g][G] / aug[g][g];
    Rat share = total / static_cast<unsigned long>(members[g].size());
    for (std::size_t idx : members[g])
      result.entries[idx] = {spectrum.entries[idx].first, share};
  }
  return result;
}

IntPoly main_poly(const SeidelMatrix& s) {
  const std::size_t n = s.order();
  if (n == 0) return IntPoly();
  IntPoly chi = charpoly(s.body);
  std::vector<Int> ps = power_sums(s, n - 1);
  std::vector<Int> coeffs(n, Int(0));
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t k = 0; j + k + 1 <= n; ++k)
      coeffs[j] += chi.c[j + k + 1] * ps[k];
  return IntPoly(std::move(coeffs));
}

RatPoly charpoly_shift_J(const IntPoly& chi, const MainAngles& angles,
                         const Rat& c) {
  RatPoly rchi(chi);
  if (c == 0) return rchi;

  // Walk the angle entries grouped by squared value so that +-theta pairs
  // contribute 2x*alpha/(x^2 - theta^2) jointly; zero and plain integer
  // eigenvalues divide by their own linear factor.
  std::vector<bool> used(angles.entries.size(), false);
  RatPoly sum;
  for (std::size_t i = 0; i < angles.entries.size(); ++i) {
    if (used[i]) continue;
    const auto& [e, a] = angles.entries[i];
    used[i] = true;
    std::size_t partner = angles.entries.size();
    for (std::size_t j = i + 1; j < angles.entries.size(); ++j)
      if (!used[j] && angles.entries[j].first == e.negated() && e.sign != 0) {
        partner = j;
        break;
      }
    if (partner < angles.entries.size()) {
      used[partner] = true;
      Rat pair_total = a + angles.entries[partner].second;
      if (pair_total == 0) continue;
      RatPoly divisor(std::vector<Rat>{Rat(-e.squared()), Rat(0), Rat(1)});
      RatPoly numer(std::vector<Rat>{Rat(0), pair_total});
      sum = sum + exact_div(rchi, divisor) * numer;
    } else {
      if (a == 0) continue;
      if (e.imaginary)
        throw input_error("unpaired imaginary eigenvalue in the shift");
      Int root = perfect_sqrt(e.radicand);
      if (root < 0)
        throw input_error("unpaired surd eigenvalue in the shift");
      Int value = e.sign < 0 ? Int(-root) : root;
      RatPoly divisor(std::vector<Rat>{Rat(-value), Rat(1)});
      RatPoly numer(std::vector<Rat>{a});
      sum = sum + exact_div(rchi, divisor) * numer;
    }
  }
  return rchi - c * sum;
}

namespace {

IntPoly finish_tournament_conv(std::size_t n, const RatPoly& chi_s_minus_j) {
  RatPoly composed = compose_affine(chi_s_minus_j, Rat(-2), Rat(-1));
  Rat scale = 1;
  for (std::size_t i = 0; i < n; ++i) scale *= Rat(-1) / Rat(2);
  return (scale * composed).to_int();
}

}  // namespace

IntPoly tournament_charpoly_via_conv(const SeidelMatrix& s,
                                     const MainAngles& angles) {
  if (s.kind != SeidelKind::skew)
    throw input_error("tournament conversion needs a skew Seidel matrix");
  IntPoly chi = charpoly(s.body);
  return finish_tournament_conv(s.order(),
                                charpoly_shift_J(chi, angles, Rat(-1)));
}

IntPoly tournament_charpoly_via_conv(const SeidelMatrix& s) {
  if (s.kind != SeidelKind::skew)
    throw input_error("tournament conversion needs a skew Seidel matrix");
  IntPoly shifted = charpoly(s.body) + main_poly(s);  // chi_{S-J}
  return finish_tournament_conv(s.order(), RatPoly(shifted));
}

}  // namespace ewkit
