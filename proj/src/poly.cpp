#include "ewkit/poly.hpp"

#include <sstream>

#include "ewkit/errors.hpp"

namespace ewkit {

namespace {

template <typename C>
void trim(std::vector<C>& c) {
  while (!c.empty() && c.back() == 0) c.pop_back();
}

}  // namespace

IntPoly::IntPoly(std::vector<Int> coeffs) : c(std::move(coeffs)) { trim(c); }

IntPoly::IntPoly(std::initializer_list<long> coeffs) {
  c.assign(coeffs.begin(), coeffs.end());
  trim(c);
}

Int IntPoly::eval(const Int& x) const {
  Int v = 0;
  for (std::size_t i = c.size(); i-- > 0;) v = v * x + c[i];
  return v;
}

std::string IntPoly::str() const {
  if (c.empty()) return "0";
  std::ostringstream os;
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (i) os << " ";
    os << c[i].get_str();
  }
  return os.str();
}

IntPoly operator+(const IntPoly& a, const IntPoly& b) {
  std::vector<Int> r(std::max(a.c.size(), b.c.size()), Int(0));
  for (std::size_t i = 0; i < a.c.size(); ++i) r[i] += a.c[i];
  for (std::size_t i = 0; i < b.c.size(); ++i) r[i] += b.c[i];
  return IntPoly(std::move(r));
}

IntPoly operator-(const IntPoly& a, const IntPoly& b) {
  std::vector<Int> r(std::max(a.c.size(), b.c.size()), Int(0));
  for (std::size_t i = 0; i < a.c.size(); ++i) r[i] += a.c[i];
  for (std::size_t i = 0; i < b.c.size(); ++i) r[i] -= b.c[i];
  return IntPoly(std::move(r));
}

IntPoly operator*(const IntPoly& a, const IntPoly& b) {
  if (a.zero() || b.zero()) return IntPoly();
  std::vector<Int> r(a.c.size() + b.c.size() - 1, Int(0));
  for (std::size_t i = 0; i < a.c.size(); ++i) {
    if (a.c[i] == 0) continue;
    for (std::size_t j = 0; j < b.c.size(); ++j) r[i + j] += a.c[i] * b.c[j];
  }
  return IntPoly(std::move(r));
}

IntPoly pow(const IntPoly& p, unsigned long e) {
  IntPoly r{1};
  for (unsigned long i = 0; i < e; ++i) r = r * p;
  return r;
}

RatPoly::RatPoly(std::vector<Rat> coeffs) : c(std::move(coeffs)) { trim(c); }

RatPoly::RatPoly(const IntPoly& p) {
  c.reserve(p.c.size());
  for (const Int& v : p.c) c.emplace_back(v);
}

Rat RatPoly::eval(const Rat& x) const {
  Rat v = 0;
  for (std::size_t i = c.size(); i-- > 0;) v = v * x + c[i];
  return v;
}

std::string RatPoly::str() const {
  if (c.empty()) return "0";
  std::ostringstream os;
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (i) os << " ";
    os << to_string(c[i]);
  }
  return os.str();
}

bool RatPoly::integral() const {
  for (const Rat& v : c)
    if (v.get_den() != 1) return false;
  return true;
}

IntPoly RatPoly::to_int() const {
  std::vector<Int> r;
  r.reserve(c.size());
  for (const Rat& v : c) {
    if (v.get_den() != 1)
      throw internal_error("polynomial expected to be integral is not");
    r.push_back(v.get_num());
  }
  return IntPoly(std::move(r));
}

RatPoly operator+(const RatPoly& a, const RatPoly& b) {
  std::vector<Rat> r(std::max(a.c.size(), b.c.size()), Rat(0));
  for (std::size_t i = 0; i < a.c.size(); ++i) r[i] += a.c[i];
  for (std::size_t i = 0; i < b.c.size(); ++i) r[i] += b.c[i];
  return RatPoly(std::move(r));
}

RatPoly operator-(const RatPoly& a, const RatPoly& b) {
  std::vector<Rat> r(std::max(a.c.size(), b.c.size()), Rat(0));
  for (std::size_t i = 0; i < a.c.size(); ++i) r[i] += a.c[i];
  for (std::size_t i = 0; i < b.c.size(); ++i) r[i] -= b.c[i];
  return RatPoly(std::move(r));
}

RatPoly operator*(const RatPoly& a, const RatPoly& b) {
  if (a.zero() || b.zero()) return RatPoly();
  std::vector<Rat> r(a.c.size() + b.c.size() - 1, Rat(0));
  for (std::size_t i = 0; i < a.c.size(); ++i) {
    if (a.c[i] == 0) continue;
    for (std::size_t j = 0; j < b.c.size(); ++j) r[i + j] += a.c[i] * b.c[j];
  }
  return RatPoly(std::move(r));
}

RatPoly operator*(const Rat& s, const RatPoly& p) {
  std::vector<Rat> r(p.c);
  for (Rat& v : r) v *= s;
  return RatPoly(std::move(r));
}

RatPoly compose_affine(const RatPoly& p, const Rat& a, const Rat& b) {
  RatPoly lin(std::vector<Rat>{b, a});
  RatPoly r;
  for (std::size_t i = p.c.size(); i-- > 0;) {
    r = r * lin;
    r = r + RatPoly(std::vector<Rat>{p.c[i]});
  }
  return r;
}

RatPoly exact_div(const RatPoly& p, const RatPoly& d) {
  if (d.zero()) throw precondition_error("polynomial division by zero");
  std::vector<Rat> rem(p.c);
  std::vector<Rat> q(rem.size() > d.c.size() ? rem.size() - d.c.size() + 1 : 1,
                     Rat(0));
  const Rat& lead = d.c.back();
  while (rem.size() >= d.c.size()) {
    // drop exact zeros that appeared during elimination
    if (rem.back() == 0) {
      rem.pop_back();
      continue;
    }
    std::size_t shift = rem.size() - d.c.size();
    Rat f = rem.back() / lead;
    q[shift] = f;
    for (std::size_t i = 0; i < d.c.size(); ++i)
      rem[shift + i] -= f * d.c[i];
    rem.pop_back();  // the leading term cancelled exactly
  }
  for (const Rat& v : rem)
    if (v != 0) throw precondition_error("polynomial division is not exact");
  return RatPoly(std::move(q));
}

void FactoredPoly::add(IntPoly factor, unsigned long multiplicity) {
  if (multiplicity == 0) return;
  terms.push_back({std::move(factor), multiplicity});
}

IntPoly FactoredPoly::expand() const {
  IntPoly r{1};
  for (const Term& t : terms) r = r * pow(t.factor, t.multiplicity);
  return r;
}

long FactoredPoly::degree() const {
  long d = 0;
  for (const Term& t : terms)
    d += t.factor.degree() * static_cast<long>(t.multiplicity);
  return d;
}

std::string FactoredPoly::str() const {
  if (terms.empty()) return "1";
  std::ostringstream os;
  for (std::size_t i = 0; i < terms.size(); ++i) {
    if (i) os << " * ";
    os << "(" << terms[i].factor.str() << ")^" << terms[i].multiplicity;
  }
  return os.str();
}

}  // namespace ewkit
