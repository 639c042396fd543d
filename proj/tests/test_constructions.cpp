#include <doctest.h>

#include <algorithm>
#include <vector>

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

SeidelMatrix deleted(unsigned long q, const std::vector<std::size_t>& idx) {
  return make_seidel(delete_principal(paley(q).body, idx));
}

}  // namespace

TEST_CASE("hadamard from conference") {
  IntMat h4 = hadamard_from_conference(paley(3));
  CHECK(verify(Property::hadamard, h4).pass);
  CHECK(verify(Property::skew_type, h4).pass);

  IntMat h8 = hadamard_from_conference(paley(7));
  CHECK(verify(Property::hadamard, h8).pass);
  Int d = det(h8);
  CHECK((d == 4096 || d == -4096));

  // symmetric conference matrices need a different doubling; rejected here
  CHECK_THROWS_AS(hadamard_from_conference(paley(5)), precondition_error);
}

TEST_CASE("principal deletion") {
  IntMat c8 = paley(7).body;
  CHECK(charpoly(delete_principal(c8, {0})) ==
        IntPoly{0, 343, 0, 147, 0, 21, 0, 1});
  CHECK(charpoly(delete_principal(c8, {0, 1})) ==
        IntPoly{49, 0, 63, 0, 15, 0, 1});
  CHECK(charpoly(delete_principal(c8, {0, 1, 2})) ==
        IntPoly{0, 21, 0, 10, 0, 1});
  // any subset of the same size lands in the same family
  CHECK(charpoly(delete_principal(c8, {2, 5})) ==
        target_charpoly(Family::skew_del2, 1).expand());
  CHECK(charpoly(delete_principal(c8, {7, 3, 1})) ==
        target_charpoly(Family::skew_del3, 1).expand());

  // order-11 submatrices of the order-14 conference matrix: the two
  // three-deletion variants differ by the sign of the determinant
  IntMat main_var = delete_principal(paley(13).body, {0, 1, 3});
  CHECK(det(main_var) == 57122);  // 2 * 13^4
  CHECK(charpoly(main_var) == target_charpoly(Family::sym_del3, 3).expand());
  IntMat alt_var = delete_principal(paley(13).body, {0, 1, 2});
  CHECK(det(alt_var) == -57122);
  CHECK(charpoly(alt_var) ==
        target_charpoly(Family::sym_del3_alt, 3).expand());

  CHECK_THROWS_AS(delete_principal(c8, {8}), input_error);
  CHECK_THROWS_AS(delete_principal(c8, {1, 1}), input_error);
  CHECK_THROWS_AS(delete_principal(IntMat::identity(2), {0, 1}), input_error);
}

TEST_CASE("psd block normalization") {
  SUBCASE("already normal") {
    auto [p, sizes] = psd_block_normalize(IntMat::ones(4));
    CHECK(sizes == std::vector<std::size_t>{4});
    CHECK(apply_switching(p, IntMat::ones(4)) == IntMat::ones(4));
  }

  SUBCASE("rank one with signs") {
    IntMat m{{1, -1, 1}, {-1, 1, -1}, {1, -1, 1}};
    auto [p, sizes] = psd_block_normalize(m);
    CHECK(sizes == std::vector<std::size_t>{3});
    CHECK(apply_switching(p, m) == IntMat::ones(3));
  }

  SUBCASE("identity splits into singletons") {
    auto [p, sizes] = psd_block_normalize(IntMat::identity(3));
    CHECK(sizes == std::vector<std::size_t>{1, 1, 1});
  }

  SUBCASE("scrambled two-block pattern is recovered") {
    IntMat blocks(5, 5);
    auto put = [&](std::size_t i, std::size_t j) {
      blocks.at(i, j) = 1;
      blocks.at(j, i) = 1;
    };
    for (std::size_t i = 0; i < 5; ++i) blocks.at(i, i) = 1;
    put(0, 1);          // block {0,1}
    put(2, 3);          // block {2,3,4}
    put(2, 4);
    put(3, 4);
    for (std::uint64_t seed = 1; seed <= 20; ++seed) {
      auto [q, scrambled] = random_switch(blocks, seed);
      auto [p, sizes] = psd_block_normalize(scrambled);
      CHECK(sizes == std::vector<std::size_t>{3, 2});
      IntMat canon(5, 5);
      for (std::size_t i = 0; i < 5; ++i)
        for (std::size_t j = 0; j < 5; ++j)
          canon.at(i, j) = (i < 3) == (j < 3) ? 1 : 0;
      CHECK(apply_switching(p, scrambled) == canon);
    }
  }

  SUBCASE("inconsistent signs rejected") {
    IntMat bad{{1, 1, 1}, {1, 1, -1}, {1, -1, 1}};
    CHECK_THROWS_AS(psd_block_normalize(bad), precondition_error);
  }
}

TEST_CASE("square form stages") {
  SUBCASE("skew, t=1") {
    SquareFormClass full = square_form(paley(7));
    CHECK(full.stage == Stage::full);
    CHECK(full.t == 1);
    CHECK(full.kind == SeidelKind::skew);
    CHECK(full.canonical == IntMat::zero(8));

    SquareFormClass m1 = square_form(deleted(7, {0}));
    CHECK(m1.stage == Stage::minus1);
    CHECK(m1.canonical == IntMat::ones(7));

    SquareFormClass m2 = square_form(deleted(7, {0, 1}));
    CHECK(m2.stage == Stage::minus2);
    IntMat two_blocks(6, 6);
    for (std::size_t i = 0; i < 6; ++i)
      for (std::size_t j = 0; j < 6; ++j)
        two_blocks.at(i, j) = (i < 3) == (j < 3) ? 2 : 0;
    CHECK(m2.canonical == two_blocks);

    SquareFormClass m3 = square_form(deleted(7, {0, 1, 2}));
    CHECK(m3.stage == Stage::minus3);
    CHECK(m3.t == 1);
  }

  SUBCASE("skew, t=2") {
    CHECK(square_form(paley(11)).t == 2);
    SquareFormClass m3 = square_form(deleted(11, {0, 1, 2}));
    CHECK(m3.stage == Stage::minus3);
    CHECK(m3.t == 2);
  }

  SUBCASE("symmetric, including the degenerate first block") {
    CHECK(square_form(paley(5)).canonical == IntMat::zero(6));
    CHECK(square_form(deleted(5, {0})).canonical == IntMat::ones(5));

    SquareFormClass m3 = square_form(deleted(5, {0, 1, 2}));
    CHECK(m3.stage == Stage::minus3);
    CHECK(m3.t == 1);
    IntMat k3{{3, -1, -1}, {-1, 3, -1}, {-1, -1, 3}};
    CHECK(m3.canonical == k3);

    CHECK(square_form(deleted(13, {0, 1, 3})).stage == Stage::minus3);
    CHECK(square_form(deleted(13, {0, 1, 2})).stage == Stage::minus3);
  }

  SUBCASE("stage names") {
    CHECK(stage_name(Stage::full) == "full");
    CHECK(stage_name(Stage::minus3) == "minus3");
  }

  SUBCASE("unrecognized input") {
    IntMat s3{{0, 1, -1}, {-1, 0, 1}, {1, -1, 0}};
    CHECK_THROWS_AS(square_form(make_seidel(s3)), precondition_error);
  }
}

TEST_CASE("four block normalization") {
  SUBCASE("skew t=1") {
    SeidelMatrix s = deleted(7, {0, 1, 2});
    IntMat m = Int(7) * IntMat::identity(5) + s.body * s.body;
    auto [p, rows] = normalize_four_block(s, m);
    CHECK(rows.sizes == std::vector<std::size_t>{2, 1, 1, 1});
    for (std::size_t j = 0; j < 5; ++j)
      CHECK(rows.r[0][j] == rows.r[1][j] + rows.r[2][j] + rows.r[3][j]);
    Vec sr = apply_switching(p, s.body) * rows.r[0];
    for (const Int& v : sr) CHECK(v == 0);
  }

  SUBCASE("skew t=2") {
    SeidelMatrix s = deleted(11, {0, 1, 2});
    IntMat m = Int(11) * IntMat::identity(9) + s.body * s.body;
    auto [p, rows] = normalize_four_block(s, m);
    CHECK(rows.sizes == std::vector<std::size_t>{3, 2, 2, 2});
    for (std::size_t j = 0; j < 9; ++j)
      CHECK(rows.r[0][j] == rows.r[1][j] + rows.r[2][j] + rows.r[3][j]);
  }

  SUBCASE("symmetric t=3") {
    SeidelMatrix s = deleted(13, {0, 1, 3});
    IntMat m = Int(13) * IntMat::identity(11) - s.body * s.body;
    auto [p, rows] = normalize_four_block(s, m);
    CHECK(rows.sizes == std::vector<std::size_t>{2, 3, 3, 3});
    for (std::size_t j = 0; j < 11; ++j)
      CHECK(rows.r[0][j] == rows.r[1][j] + rows.r[2][j] + rows.r[3][j]);
  }
}

TEST_CASE("sm form") {
  SUBCASE("t=1") {
    SeidelMatrix s = deleted(7, {0, 1, 2});
    IntMat m = Int(7) * IntMat::identity(5) + s.body * s.body;
    auto [p, rows] = normalize_four_block(s, m);
    CHECK(sm_form_check(s, p, rows).pass);
  }
  SUBCASE("t=2, several subsets") {
    for (auto idx : std::vector<std::vector<std::size_t>>{
             {0, 1, 2}, {0, 5, 9}, {3, 7, 11}, {1, 2, 4}}) {
      SeidelMatrix s = deleted(11, idx);
      IntMat m = Int(11) * IntMat::identity(9) + s.body * s.body;
      auto [p, rows] = normalize_four_block(s, m);
      CHECK(sm_form_check(s, p, rows).pass);
    }
  }
}

TEST_CASE("completion steps") {
  SUBCASE("skew chain t=1") {
    SeidelMatrix s5 = deleted(7, {0, 1, 2});
    SeidelMatrix s6 = complete_step(s5);
    CHECK(charpoly(s6.body) == target_charpoly(Family::skew_del2, 1).expand());
    SeidelMatrix s7 = complete_step(s6);
    CHECK(charpoly(s7.body) == target_charpoly(Family::skew_del1, 1).expand());
    SeidelMatrix s8 = complete_step(s7);
    CHECK(verify(Property::conference, s8.body).pass);
    CHECK(s8.kind == SeidelKind::skew);
  }

  SUBCASE("full chains, both kinds, scrambled entry points") {
    struct Case {
      unsigned long q;
      std::vector<std::size_t> idx;
    };
    for (const Case& c : {Case{7, {0, 1, 2}}, Case{7, {1, 4, 6}},
                          Case{11, {0, 1, 2}}, Case{11, {2, 6, 10}},
                          Case{5, {0, 1, 2}}, Case{13, {0, 1, 3}},
                          Case{13, {0, 1, 2}}}) {
      SeidelMatrix start = deleted(c.q, c.idx);
      SeidelMatrix done = complete_to_conference(start);
      CHECK(verify(Property::conference, done.body).pass);
      CHECK(done.body.rows() == c.q + 1);
      CHECK(done.kind == start.kind);

      auto [p, scrambled] = random_switch(start.body, 97 * c.q + c.idx[2]);
      SeidelMatrix redone = complete_to_conference(make_seidel(scrambled));
      CHECK(verify(Property::conference, redone.body).pass);
    }
  }

  SUBCASE("partial deletions complete too") {
    for (auto idx : std::vector<std::vector<std::size_t>>{{0}, {0, 1}, {3}}) {
      SeidelMatrix done = complete_to_conference(deleted(7, idx));
      CHECK(verify(Property::conference, done.body).pass);
      SeidelMatrix sym_done = complete_to_conference(deleted(13, idx));
      CHECK(verify(Property::conference, sym_done.body).pass);
    }
  }

  SUBCASE("already complete") {
    SeidelMatrix c = paley(7);
    SeidelMatrix out = complete_to_conference(c);
    CHECK(out.body == c.body);
    CHECK_THROWS_AS(complete_step(c), precondition_error);
  }

  SUBCASE("unrecognized order") {
    IntMat s3{{0, 1, -1}, {-1, 0, 1}, {1, -1, 0}};
    CHECK_THROWS_AS(complete_to_conference(make_seidel(s3)),
                    precondition_error);
  }
}

TEST_CASE("switching form") {
  SeidelMatrix s = make_seidel(ew6() - IntMat::identity(6));
  for (std::uint64_t seed = 3; seed <= 9; seed += 3) {
    auto [q, scrambled] = random_switch(s.body, seed);
    auto [p, t] = switching_form(make_seidel(scrambled));
    CHECK(apply_switching(p, scrambled) == t.body);
    CHECK(verify(Property::ew, t.body + IntMat::identity(6)).pass);
  }

  CHECK_THROWS_AS(switching_form(paley(5)), precondition_error);
}

TEST_CASE("ew and tournament conversions") {
  IntMat x = ew6();
  Tournament a = ew_to_tournament(x);
  IntPoly chi_a = charpoly(a.body);
  CHECK(chi_a == target_charpoly(Family::ew_tournament, 1).expand());

  IntMat back = tournament_to_ew(a);
  CHECK(verify(Property::ew, back).pass);
  CHECK(verify(Property::skew_type, back).pass);
  Int d = det(back);
  CHECK((d == 160 || d == -160));

  Tournament again = ew_to_tournament(back);
  CHECK(charpoly(again.body) == chi_a);

  // inputs that do not qualify
  CHECK_THROWS_AS(ew_to_tournament(IntMat::ones(6)), precondition_error);
  IntMat transitive(5, 5);
  for (std::size_t i = 0; i < 5; ++i)
    for (std::size_t j = i + 1; j < 5; ++j) transitive.at(i, j) = 1;
  CHECK_THROWS_AS(tournament_to_ew(Tournament(transitive)),
                  precondition_error);
}

TEST_CASE("3x3 psd pattern census") {
  Enum33Result r = enumerate_33psd();
  CHECK(r.raw_count == 24);
  REQUIRE(r.classes.size() == 4);
  CHECK(r.classes[0] == IntMat{{3, 3, 3}, {3, 3, 3}, {3, 3, 3}});
  CHECK(r.classes[1] == IntMat{{3, 3, 1}, {3, 3, 1}, {1, 1, 3}});
  CHECK(r.classes[2] == IntMat{{3, 1, 1}, {1, 3, 1}, {1, 1, 3}});
  CHECK(r.classes[3] == IntMat{{3, 1, 1}, {1, 3, -1}, {1, -1, 3}});

  // the four are pairwise inequivalent under every signed permutation
  std::vector<SignedPermutation> group;
  std::vector<std::size_t> perm{0, 1, 2};
  std::sort(perm.begin(), perm.end());
  do {
    for (int mask = 0; mask < 8; ++mask) {
      SignedPermutation p = SignedPermutation::identity(3);
      p.perm = perm;
      for (std::size_t i = 0; i < 3; ++i)
        p.signs[i] = (mask >> i) & 1 ? -1 : 1;
      group.push_back(p);
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  CHECK(group.size() == 48);
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = i + 1; j < 4; ++j)
      for (const auto& g : group)
        CHECK(apply_switching(g, r.classes[i]) != r.classes[j]);

  for (const IntMat& rep : r.classes) CHECK(psd_check(rep));
}
