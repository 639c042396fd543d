#include "ewkit/spectrum.hpp"

#include <algorithm>
#include <map>
#include <tuple>

#include "ewkit/errors.hpp"

namespace ewkit {

Eigenvalue Eigenvalue::from_integer(const Int& v) {
  Eigenvalue e;
  e.sign = v > 0 ? 1 : v < 0 ? -1 : 0;
  e.radicand = v * v;
  return e;
}

Eigenvalue Eigenvalue::real_sqrt(int sign, Int radicand) {
  if (radicand < 0) throw input_error("radicand must be >= 0");
  if (radicand == 0) return zero();
  if (sign != 1 && sign != -1) throw input_error("sign must be +-1");
  Eigenvalue e;
  e.sign = sign;
  e.radicand = std::move(radicand);
  return e;
}

Eigenvalue Eigenvalue::imaginary_sqrt(int sign, Int radicand) {
  Eigenvalue e = real_sqrt(sign, std::move(radicand));
  if (e.sign != 0) e.imaginary = true;
  return e;
}

Eigenvalue Eigenvalue::negated() const {
  Eigenvalue e = *this;
  e.sign = -e.sign;
  return e;
}

Int Eigenvalue::squared() const {
  return imaginary ? Int(-radicand) : radicand;
}

Eigenvalue Eigenvalue::realified() const {
  Eigenvalue e = *this;
  e.imaginary = false;
  return e;
}

std::string Eigenvalue::str() const {
  if (sign == 0) return "0";
  if (!imaginary) {
    Int root = perfect_sqrt(radicand);
    if (root >= 0) return to_string(sign < 0 ? Int(-root) : root);
  }
  std::string s = sign < 0 ? "-sqrt(" : "sqrt(";
  s += to_string(imaginary ? Int(-radicand) : radicand);
  s += ')';
  return s;
}

bool operator<(const Eigenvalue& a, const Eigenvalue& b) {
  return std::tie(a.imaginary, a.sign, a.radicand) <
         std::tie(b.imaginary, b.sign, b.radicand);
}

bool numeric_less(const Eigenvalue& a, const Eigenvalue& b) {
  if (a.imaginary || b.imaginary)
    throw input_error("no numeric order on imaginary eigenvalues");
  if (a.sign != b.sign) return a.sign < b.sign;
  if (a.sign > 0) return a.radicand < b.radicand;
  if (a.sign < 0) return a.radicand > b.radicand;
  return false;
}

unsigned long Spectrum::total_multiplicity() const {
  unsigned long total = 0;
  for (const auto& [e, m] : entries) total += m;
  return total;
}

IntPoly Spectrum::charpoly() const {
  // Integer eigenvalues multiply in as linear factors; +-surd pairs must
  // carry equal multiplicities so their product (x^2 - theta^2) is an
  // integer factor.
  IntPoly result{1};
  std::map<std::pair<bool, Int>, std::pair<unsigned long, unsigned long>> surd;
  for (const auto& [e, m] : entries) {
    if (m == 0) continue;
    Int root = e.imaginary ? Int(-1) : perfect_sqrt(e.radicand);
    if (root >= 0) {
      Int value = e.sign < 0 ? Int(-root) : root;
      result = result * pow(IntPoly(std::vector<Int>{-value, 1}), m);
      continue;
    }
    auto& [plus, minus] = surd[{e.imaginary, e.radicand}];
    (e.sign > 0 ? plus : minus) += m;
  }
  for (const auto& [key, mults] : surd) {
    if (mults.first != mults.second)
      throw input_error("surd eigenvalues must pair up conjugately");
    Int theta2 = key.first ? Int(-key.second) : key.second;
    result = result * pow(IntPoly(std::vector<Int>{-theta2, 0, 1}), mults.first);
  }
  return result;
}

std::string Spectrum::str() const {
  std::string s;
  for (const auto& [e, m] : entries) {
    if (!s.empty()) s += ", ";
    s += e.str();
    s += '^';
    s += std::to_string(m);
  }
  return s;
}

Spectrum spectrum_from_factored(const FactoredPoly& f) {
  Spectrum sp;
  auto bump = [&sp](const Eigenvalue& e, unsigned long m) {
    for (auto& [e0, m0] : sp.entries)
      if (e0 == e) {
        m0 += m;
        return;
      }
    sp.entries.push_back({e, m});
  };
  for (const auto& [p, m] : f.terms) {
    if (m == 0) continue;
    if (p.degree() == 1 && p.c[1] == 1) {
      bump(Eigenvalue::from_integer(-p.c[0]), m);
    } else if (p.degree() == 2 && p.c[2] == 1 && p.c[1] == 0) {
      const Int& b = p.c[0];
      if (b == 0) {
        bump(Eigenvalue::zero(), 2 * m);
      } else if (b > 0) {
        bump(Eigenvalue::imaginary_sqrt(1, b), m);
        bump(Eigenvalue::imaginary_sqrt(-1, b), m);
      } else {
        Int d = -b;
        Int root = perfect_sqrt(d);
        if (root >= 0) {
          bump(Eigenvalue::from_integer(root), m);
          bump(Eigenvalue::from_integer(-root), m);
        } else {
          bump(Eigenvalue::real_sqrt(1, d), m);
          bump(Eigenvalue::real_sqrt(-1, d), m);
        }
      }
    } else {
      throw input_error("factor is not of shape x, x - a, or x^2 + b");
    }
  }
  return sp;
}

namespace {

// flattened, realified, sorted descending
std::vector<Eigenvalue> flatten_desc(const Spectrum& s) {
  std::vector<Eigenvalue> v;
  for (const auto& [e, m] : s.entries) {
    Eigenvalue r = e.realified();
    for (unsigned long k = 0; k < m; ++k) v.push_back(r);
  }
  std::sort(v.begin(), v.end(),
            [](const Eigenvalue& a, const Eigenvalue& b) {
              return numeric_less(b, a);
            });
  return v;
}

}  // namespace

Certificate interlacing_check(const Spectrum& big, const Spectrum& small) {
  std::vector<Eigenvalue> lam = flatten_desc(big);
  std::vector<Eigenvalue> mu = flatten_desc(small);
  const std::size_t n = lam.size(), m = mu.size();
  if (m > n)
    throw input_error("small spectrum has more eigenvalues than the big one");
  Certificate cert("interlacing", true);
  cert.add("n", std::to_string(n));
  cert.add("m", std::to_string(m));
  for (std::size_t i = 0; i < m; ++i) {
    if (numeric_less(lam[i], mu[i]) || numeric_less(mu[i], lam[n - m + i])) {
      cert.pass = false;
      cert.add("violated_at", std::to_string(i));
      cert.add("upper", lam[i].str());
      cert.add("value", mu[i].str());
      cert.add("lower", lam[n - m + i].str());
      break;
    }
  }
  return cert;
}

}  // namespace ewkit
