#include <doctest.h>

#include "ewkit/families.hpp"
#include "ewkit/linalg.hpp"
#include "ewkit/spectrum.hpp"

using namespace ewkit;

TEST_CASE("eigenvalue construction and ordering") {
  Eigenvalue two = Eigenvalue::from_integer(2);
  CHECK(two.sign == 1);
  CHECK(two.radicand == 4);
  CHECK_FALSE(two.imaginary);
  CHECK(two.str() == "2");
  CHECK(two.squared() == 4);

  Eigenvalue m3i = Eigenvalue::imaginary_sqrt(-1, 9);
  CHECK(m3i.str() == "-sqrt(-9)");
  CHECK(m3i.squared() == -9);
  CHECK(m3i.realified() == Eigenvalue::real_sqrt(-1, 9));

  CHECK(Eigenvalue::from_integer(0) == Eigenvalue::zero());

  CHECK(numeric_less(Eigenvalue::from_integer(-3), Eigenvalue::zero()));
  CHECK(numeric_less(Eigenvalue::real_sqrt(1, 3), Eigenvalue::from_integer(2)));
  CHECK(numeric_less(Eigenvalue::from_integer(-3),
                     Eigenvalue::real_sqrt(-1, 3)));
  CHECK_FALSE(numeric_less(Eigenvalue::from_integer(2),
                           Eigenvalue::from_integer(2)));
  CHECK_THROWS_AS(numeric_less(m3i, two), input_error);
}

TEST_CASE("spectrum from factored polynomials") {
  // x (x^2+3) (x^2+7): skew spectrum {0, ±i sqrt(3), ±i sqrt(7)}
  FactoredPoly f;
  f.add(IntPoly{0, 1}, 1);
  f.add(IntPoly{3, 0, 1}, 1);
  f.add(IntPoly{7, 0, 1}, 1);
  Spectrum sp = spectrum_from_factored(f);
  CHECK(sp.total_multiplicity() == 5);
  CHECK(sp.charpoly() == f.expand());

  // (x-2)(x+1)^2: integer spectrum
  FactoredPoly g;
  g.add(IntPoly{-2, 1}, 1);
  g.add(IntPoly{1, 1}, 2);
  Spectrum sg = spectrum_from_factored(g);
  CHECK(sg.total_multiplicity() == 3);
  CHECK(sg.charpoly() == g.expand());

  // (x^2-13)^4: real surds
  FactoredPoly h;
  h.add(IntPoly{-13, 0, 1}, 4);
  Spectrum sh = spectrum_from_factored(h);
  CHECK(sh.total_multiplicity() == 8);
  CHECK(sh.charpoly() == h.expand());

  // unsupported factor shape
  FactoredPoly bad;
  bad.add(IntPoly{1, 1, 1}, 1);  // x^2+x+1 has no surd roots
  CHECK_THROWS_AS(spectrum_from_factored(bad), input_error);
}

TEST_CASE("interlacing") {
  auto pm_pair = [](long rad, unsigned long mult) {
    Spectrum s;
    s.entries.push_back({Eigenvalue::imaginary_sqrt(1, rad), mult});
    s.entries.push_back({Eigenvalue::imaginary_sqrt(-1, rad), mult});
    return s;
  };

  Spectrum big = pm_pair(7, 4);
  Spectrum small = pm_pair(7, 3);
  small.entries.push_back({Eigenvalue::zero(), 1});
  CHECK(interlacing_check(big, small).pass);

  CHECK(interlacing_check(big, big).pass);

  Spectrum b2, s2;
  b2.entries.push_back({Eigenvalue::from_integer(1), 1});
  b2.entries.push_back({Eigenvalue::from_integer(-1), 1});
  s2.entries.push_back({Eigenvalue::from_integer(2), 1});
  CHECK_FALSE(interlacing_check(b2, s2).pass);

  CHECK_THROWS_AS(interlacing_check(s2, b2), input_error);
}

TEST_CASE("family targets") {
  CHECK(target_charpoly(Family::ew_tournament, 1).expand() ==
        IntPoly{-3, -3, -4, 0, 0, 1});
  CHECK(target_charpoly(Family::skew_del3, 1).expand() ==
        IntPoly{0, 21, 0, 10, 0, 1});  // x(x^2+3)(x^2+7)
  {
    // (x-2)(x+1)^2 (x^2-13)^4
    FactoredPoly f;
    f.add(IntPoly{-2, 1}, 1);
    f.add(IntPoly{1, 1}, 2);
    f.add(IntPoly{-13, 0, 1}, 4);
    CHECK(target_charpoly(Family::sym_del3, 3).expand() == f.expand());
  }

  // degenerate symmetric stage at t=1: (x-2)(x+1)^2 with no surd part
  FactoredPoly d = target_charpoly(Family::sym_del3, 1);
  CHECK(d.degree() == 3);
  CHECK(d.expand() == IntPoly{-2, -3, 0, 1});
  FactoredPoly da = target_charpoly(Family::sym_del3_alt, 1);
  CHECK(da.expand() == IntPoly{2, -3, 0, 1});

  CHECK(target_charpoly(Family::ew_seidel, 1).expand() ==
        IntPoly{81, 0, 63, 0, 15, 0, 1});  // (x^2+9)(x^2+3)^2
  CHECK(target_charpoly(Family::skew_full, 1).expand() ==
        IntPoly{2401, 0, 1372, 0, 294, 0, 28, 0, 1});

  CHECK(family_order(Family::ew_tournament, 1) == 5);
  CHECK(family_order(Family::skew_full, 2) == 12);
  CHECK(family_order(Family::sym_del3, 3) == 11);

  CHECK_THROWS_AS(target_charpoly(Family::ew_tournament, 0), input_error);

  // at t=1 the deepest skew deletion coincides with the tournament Seidel
  CHECK(target_charpoly(Family::ew_tournament_seidel, 1).expand() ==
        target_charpoly(Family::skew_del3, 1).expand());
  // but not at t=2
  CHECK(target_charpoly(Family::ew_tournament_seidel, 2).expand() !=
        target_charpoly(Family::skew_del3, 2).expand());

  for (Family f : all_families()) {
    CHECK(family_from_name(family_name(f)) == f);
    for (unsigned long t = 1; t <= 3; ++t) {
      FactoredPoly tgt = target_charpoly(f, t);
      CHECK(static_cast<unsigned long>(tgt.degree()) == family_order(f, t));
      auto found = family_of_charpoly(tgt.expand());
      REQUIRE(found.has_value());
      CHECK(found->second == t);
      // the identification is exact up to the known t=1 coincidence
      if (!(t == 1 && (f == Family::ew_tournament_seidel ||
                       f == Family::skew_del3)))
        CHECK(found->first == f);
    }
  }

  CHECK_FALSE(family_of_charpoly(IntPoly{1, 0, 1}).has_value());
}
