#include <doctest.h>

#include "ewkit/angles.hpp"
#include "ewkit/constructions.hpp"
#include "ewkit/generators.hpp"
#include "ewkit/linalg.hpp"

using namespace ewkit;

namespace {

IntMat ew6() {
  return IntMat{{1, 1, -1, 1, 1, 1},
                {-1, 1, 1, 1, 1, 1},
                {1, -1, 1, 1, 1, 1},
                {-1, -1, -1, 1, 1, -1},
                {-1, -1, -1, -1, 1, 1},
                {-1, -1, -1, 1, -1, 1}};
}

// The order-5 Seidel matrix with charpoly x(x^2+7)(x^2+3), realized from the
// order-6 fixture.
SeidelMatrix ew5_seidel() {
  Tournament a = ew_to_tournament(ew6());
  return seidel_from_tournament(a);
}

Spectrum ew5_spectrum() {
  return spectrum_from_factored(
      target_charpoly(Family::ew_tournament_seidel, 1));
}

}  // namespace

TEST_CASE("power sums") {
  SeidelMatrix c8 = paley(7);
  auto ps = power_sums(c8, 4);
  REQUIRE(ps.size() == 5);
  CHECK(ps[0] == 8);
  CHECK(ps[1] == 0);  // skew
  CHECK(ps[2] == -56);
  CHECK(ps[4] == 392);

  SeidelMatrix s5 = ew5_seidel();
  auto qs = power_sums(s5, 4);
  CHECK(qs[0] == 5);
  CHECK(qs[2] == -8);
  CHECK(qs[4] == 56);
}

TEST_CASE("main angles") {
  SUBCASE("order-6 skew ew seidel") {
    // The angles depend on the switching representative; the textbook values
    // below are for the normalized matrix (first row all +1 off-diagonal).
    SeidelMatrix s =
        normalize(make_seidel(ew6() - IntMat::identity(6))).second;
    Spectrum sp =
        spectrum_from_factored(target_charpoly(Family::ew_seidel, 1));
    MainAngles a = main_angles(s, sp);
    // alpha is the squared projection of the all-ones direction scaled by n,
    // per eigenvalue: the pair totals are 10/3 and 8/3.
    CHECK(a.at(Eigenvalue::imaginary_sqrt(1, 9)) == Rat(5, 3));
    CHECK(a.at(Eigenvalue::imaginary_sqrt(-1, 9)) == Rat(5, 3));
    CHECK(a.at(Eigenvalue::imaginary_sqrt(1, 3)) == Rat(4, 3));
    CHECK(a.at(Eigenvalue::imaginary_sqrt(-1, 3)) == Rat(4, 3));
    // per-dimension share of the squared projection for the multiplicity-2
    // eigenvalues
    CHECK(a.at(Eigenvalue::imaginary_sqrt(1, 3)) / 2 == Rat(2, 3));
    Rat sum = 0;
    for (const auto& [ev, al] : a.entries) sum += al;
    CHECK(sum == 6);
  }

  SUBCASE("skew conference order 8") {
    SeidelMatrix s = paley(7);
    Spectrum sp =
        spectrum_from_factored(target_charpoly(Family::skew_full, 1));
    MainAngles a = main_angles(s, sp);
    CHECK(a.at(Eigenvalue::imaginary_sqrt(1, 7)) == 4);
    CHECK(a.at(Eigenvalue::imaginary_sqrt(-1, 7)) == 4);
  }

  SUBCASE("order-5 seidel with a zero eigenvalue") {
    MainAngles a = main_angles(ew5_seidel(), ew5_spectrum());
    CHECK(a.at(Eigenvalue::zero()) == Rat(27, 7));
    CHECK(a.at(Eigenvalue::imaginary_sqrt(1, 7)) == Rat(4, 7));
    CHECK(a.at(Eigenvalue::imaginary_sqrt(-1, 7)) == Rat(4, 7));
    CHECK(a.at(Eigenvalue::imaginary_sqrt(1, 3)) == 0);
    CHECK_THROWS_AS(a.at(Eigenvalue::from_integer(5)), input_error);
  }

  SUBCASE("three cycle") {
    IntMat s3{{0, 1, -1}, {-1, 0, 1}, {1, -1, 0}};
    FactoredPoly f;  // x(x^2+3)
    f.add(IntPoly{0, 1}, 1);
    f.add(IntPoly{3, 0, 1}, 1);
    MainAngles a = main_angles(make_seidel(s3), spectrum_from_factored(f));
    CHECK(a.at(Eigenvalue::zero()) == 3);
    CHECK(a.at(Eigenvalue::imaginary_sqrt(1, 3)) == 0);
  }

  SUBCASE("spectrum must match") {
    FactoredPoly wrong;
    wrong.add(IntPoly{7, 0, 1}, 4);
    CHECK_THROWS_AS(main_angles(ew5_seidel(), spectrum_from_factored(wrong)),
                    precondition_error);
  }
}

TEST_CASE("main polynomial") {
  SeidelMatrix s5 = ew5_seidel();
  CHECK(main_poly(s5) == IntPoly{81, 0, 42, 0, 5});

  // bordering by a +1^T / -1 rim shifts the charpoly by exactly the main
  // polynomial: x chi(x) + N(x)
  IntPoly chi = charpoly(s5.body);
  CHECK(chi == IntPoly{0, 21, 0, 10, 0, 1});
  IntPoly bordered = IntPoly{0, 1} * chi + main_poly(s5);
  CHECK(bordered == IntPoly{81, 0, 63, 0, 15, 0, 1});
  CHECK(bordered == target_charpoly(Family::ew_seidel, 1).expand());

  CHECK(main_poly(paley(7)) ==
        IntPoly{0, 2744, 0, 1176, 0, 168, 0, 8});  // 8x(x^2+7)^3
}

TEST_CASE("charpoly under rank-one shift") {
  SeidelMatrix s5 = ew5_seidel();
  IntPoly chi = charpoly(s5.body);
  MainAngles a = main_angles(s5, ew5_spectrum());

  CHECK(charpoly_shift_J(chi, a, Rat(0)).to_int() == chi);

  // against the direct computation for integer shifts
  for (long c : {1L, -1L, 2L, -3L}) {
    IntMat shifted = s5.body + Int(c) * IntMat::ones(5);
    RatPoly via = charpoly_shift_J(chi, a, Rat(c));
    CHECK(via.to_int() == charpoly(shifted));
  }

  // and against the main polynomial: chi_{S+cJ} = chi - c N
  RatPoly via1 = charpoly_shift_J(chi, a, Rat(1));
  CHECK(via1.to_int() == chi - main_poly(s5));

  SeidelMatrix s2 = make_seidel(IntMat{{0, 1}, {-1, 0}});
  FactoredPoly f2;
  f2.add(IntPoly{1, 0, 1}, 1);
  MainAngles a2 = main_angles(s2, spectrum_from_factored(f2));
  CHECK(charpoly_shift_J(IntPoly{1, 0, 1}, a2, Rat(1)).to_int() ==
        IntPoly{1, -2, 1});
}

TEST_CASE("tournament charpoly through the conversion identity") {
  IntMat cyc{{0, 1, 0}, {0, 0, 1}, {1, 0, 0}};
  Tournament t3(cyc);
  CHECK(tournament_charpoly_via_conv(seidel_from_tournament(t3)) ==
        IntPoly{-1, 0, 0, 1});

  // the spectrum-based route on the order-5 matrix
  SeidelMatrix s5 = ew5_seidel();
  MainAngles a = main_angles(s5, ew5_spectrum());
  IntPoly expect = target_charpoly(Family::ew_tournament, 1).expand();
  CHECK(expect == IntPoly{-3, -3, -4, 0, 0, 1});
  CHECK(tournament_charpoly_via_conv(s5, a) == expect);
  CHECK(tournament_charpoly_via_conv(s5) == expect);

  // the power-sum route against the direct charpoly on random tournaments
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    std::size_t n = 2 + static_cast<std::size_t>(seed % 7);
    Tournament t = random_tournament(n, seed * 31 + 5);
    SeidelMatrix s = seidel_from_tournament(t);
    CHECK(tournament_charpoly_via_conv(s) == charpoly(t.body));
  }

  CHECK_THROWS_AS(tournament_charpoly_via_conv(paley(5)), input_error);
}
