#include <doctest.h>

#include "ewkit/errors.hpp"
#include "ewkit/poly.hpp"

using namespace ewkit;

TEST_CASE("IntPoly normalization and arithmetic") {
  IntPoly z{0, 0, 0};
  CHECK(z.zero());
  CHECK(z.degree() == -1);

  IntPoly p{1, 2};        // 1 + 2x
  IntPoly q{-1, 0, 1};    // x^2 - 1
  CHECK((p * q) == IntPoly{-1, -2, 1, 2});
  CHECK((p + q) == IntPoly{0, 2, 1});
  CHECK((q - q).zero());
  CHECK(p.eval(3) == 7);
  CHECK(pow(IntPoly{0, 1}, 3) == IntPoly{0, 0, 0, 1});
  CHECK(pow(q, 0) == IntPoly{1});
  CHECK(IntPoly{3, 0, -2}.str() == "3 0 -2");
}

TEST_CASE("FactoredPoly expansion") {
  FactoredPoly f;
  f.add(IntPoly{0, 1}, 1);       // x
  f.add(IntPoly{7, 0, 1}, 1);    // x^2 + 7
  CHECK(f.expand() == IntPoly{0, 7, 0, 1});

  FactoredPoly g;
  g.add(IntPoly{7, 0, 1}, 4);    // (x^2+7)^4
  CHECK(g.expand() == IntPoly{2401, 0, 1372, 0, 294, 0, 28, 0, 1});

  FactoredPoly h;
  h.add(IntPoly{-3, 0, -1, 1}, 1);  // x^3 - x^2 - 3
  h.add(IntPoly{1, 1, 1}, 1);       // x^2 + x + 1
  CHECK(h.expand() == IntPoly{-3, -3, -4, 0, 0, 1});

  // multiplicativity: expand(F1 u F2) = expand(F1) * expand(F2)
  FactoredPoly fg;
  fg.add(IntPoly{0, 1}, 1);
  fg.add(IntPoly{7, 0, 1}, 5);
  CHECK(fg.expand() == f.expand() * g.expand());

  // zero multiplicities are dropped, not stored
  FactoredPoly d;
  d.add(IntPoly{-5, 0, 1}, 0);
  d.add(IntPoly{2, 1}, 1);
  CHECK(d.terms.size() == 1);
  CHECK(d.expand() == IntPoly{2, 1});
  CHECK(d.degree() == 1);
}

TEST_CASE("RatPoly helpers") {
  RatPoly p(IntPoly{1, 0, 1});  // x^2 + 1
  CHECK(p.integral());
  CHECK(p.to_int() == IntPoly{1, 0, 1});

  RatPoly half(std::vector<Rat>{Rat(1, 2)});
  CHECK_FALSE(half.integral());
  CHECK_THROWS_AS(half.to_int(), internal_error);

  // (x^2+1) composed with -2x-1: (-2x-1)^2 + 1 = 4x^2 + 4x + 2
  RatPoly comp = compose_affine(p, Rat(-2), Rat(-1));
  CHECK(comp == RatPoly(IntPoly{2, 4, 4}));

  // exact division
  RatPoly prod = RatPoly(IntPoly{-1, 0, 1}) * RatPoly(IntPoly{5, 1});
  CHECK(exact_div(prod, RatPoly(IntPoly{-1, 0, 1})) == RatPoly(IntPoly{5, 1}));
  CHECK_THROWS_AS(exact_div(RatPoly(IntPoly{1, 1}), RatPoly(IntPoly{0, 0, 1})),
                  precondition_error);
}
