#include "ewkit/families.hpp"

#include "ewkit/errors.hpp"

namespace ewkit {

namespace {

IntPoly P(std::vector<Int> coeffs) { return IntPoly(std::move(coeffs)); }

}  // namespace

const std::vector<Family>& all_families() {
  static const std::vector<Family> families = {
      Family::ew_tournament, Family::ew_tournament_seidel, Family::ew_seidel,
      Family::skew_full,     Family::skew_del1,            Family::skew_del2,
      Family::skew_del3,     Family::sym_full,             Family::sym_del1,
      Family::sym_del2,      Family::sym_del3,             Family::sym_del3_alt,
  };
  return families;
}

std::string family_name(Family f) {
  switch (f) {
    case Family::ew_tournament: return "ew-tournament";
    case Family::ew_tournament_seidel: return "ew-tournament-seidel";
    case Family::ew_seidel: return "ew-seidel";
    case Family::skew_full: return "skew-full";
    case Family::skew_del1: return "skew-del1";
    case Family::skew_del2: return "skew-del2";
    case Family::skew_del3: return "skew-del3";
    case Family::sym_full: return "sym-full";
    case Family::sym_del1: return "sym-del1";
    case Family::sym_del2: return "sym-del2";
    case Family::sym_del3: return "sym-del3";
    case Family::sym_del3_alt: return "sym-del3-alt";
  }
  throw internal_error("unhandled family");
}

std::optional<Family> family_from_name(const std::string& name) {
  for (Family f : all_families())
    if (family_name(f) == name) return f;
  return std::nullopt;
}

FactoredPoly target_charpoly(Family f, unsigned long t) {
  if (t < 1) throw input_error("family parameter t must be >= 1");
  const Int ti = t;
  FactoredPoly p;
  switch (f) {
    case Family::ew_tournament:
      p.add(P({-ti * (4 * ti - 1), 0, -(2 * ti - 1), 1}), 1);
      p.add(P({ti, 1, 1}), 2 * t - 1);
      break;
    case Family::ew_tournament_seidel:
      p.add(P({0, 1}), 1);
      p.add(P({8 * ti - 1, 0, 1}), 1);
      p.add(P({4 * ti - 1, 0, 1}), 2 * t - 1);
      break;
    case Family::ew_seidel:
      p.add(P({8 * ti + 1, 0, 1}), 1);
      p.add(P({4 * ti - 1, 0, 1}), 2 * t);
      break;
    case Family::skew_full:
      p.add(P({4 * ti + 3, 0, 1}), 2 * t + 2);
      break;
    case Family::skew_del1:
      p.add(P({0, 1}), 1);
      p.add(P({4 * ti + 3, 0, 1}), 2 * t + 1);
      break;
    case Family::skew_del2:
      p.add(P({1, 0, 1}), 1);
      p.add(P({4 * ti + 3, 0, 1}), 2 * t);
      break;
    case Family::skew_del3:
      p.add(P({0, 1}), 1);
      p.add(P({3, 0, 1}), 1);
      p.add(P({4 * ti + 3, 0, 1}), 2 * t - 1);
      break;
    case Family::sym_full:
      p.add(P({-(4 * ti + 1), 0, 1}), 2 * t + 1);
      break;
    case Family::sym_del1:
      p.add(P({0, 1}), 1);
      p.add(P({-(4 * ti + 1), 0, 1}), 2 * t);
      break;
    case Family::sym_del2:
      p.add(P({-1, 0, 1}), 1);
      p.add(P({-(4 * ti + 1), 0, 1}), 2 * t - 1);
      break;
    case Family::sym_del3:
      p.add(P({-2, 1}), 1);
      p.add(P({1, 1}), 2);
      p.add(P({-(4 * ti + 1), 0, 1}), 2 * (t - 1));
      break;
    case Family::sym_del3_alt:
      p.add(P({2, 1}), 1);
      p.add(P({-1, 1}), 2);
      p.add(P({-(4 * ti + 1), 0, 1}), 2 * (t - 1));
      break;
  }
  return p;
}

unsigned long family_order(Family f, unsigned long t) {
  switch (f) {
    case Family::ew_tournament:
    case Family::ew_tournament_seidel:
    case Family::skew_del3:
    case Family::sym_del1: return 4 * t + 1;
    case Family::ew_seidel:
    case Family::skew_del2:
    case Family::sym_full: return 4 * t + 2;
    case Family::skew_full: return 4 * t + 4;
    case Family::skew_del1: return 4 * t + 3;
    case Family::sym_del2: return 4 * t;
    case Family::sym_del3:
    case Family::sym_del3_alt: return 4 * t - 1;
  }
  throw internal_error("unhandled family");
}

std::optional<std::pair<Family, unsigned long>> family_of_charpoly(
    const IntPoly& p) {
  const long deg = p.degree();
  if (deg < 1) return std::nullopt;
  for (Family f : all_families()) {
    for (unsigned long t = 1;
         family_order(f, t) <= static_cast<unsigned long>(deg); ++t) {
      if (family_order(f, t) != static_cast<unsigned long>(deg)) continue;
      if (target_charpoly(f, t).expand() == p) return std::make_pair(f, t);
      break;
    }
  }
  return std::nullopt;
}

}  // namespace ewkit
