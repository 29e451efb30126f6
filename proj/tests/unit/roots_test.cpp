#include <gtest/gtest.h>

#include <random>
#include <set>

#include "jacobi/error.hpp"
#include "jacobi/exact/planar.hpp"
#include "jacobi/exact/resultant.hpp"
#include "jacobi/exact/roots.hpp"
#include "jacobi/exact/interpolate.hpp"

using namespace jacobi;
using namespace jacobi::exact;

namespace {

UPoly from_roots(const std::vector<Rat>& roots) {
  UPoly p({Rat(1)});
  for (const auto& r : roots) p *= UPoly({-r, Rat(1)});
  return p;
}

const MPoly X = MPoly::variable("x"), Y = MPoly::variable("y");

}  // namespace

TEST(Sturm, Examples) {
  EXPECT_EQ(sturm_count(UPoly({Rat(-1), Rat(0), Rat(1)}), Interval(Rat(-2), Rat(2))), 2);
  EXPECT_EQ(sturm_count(UPoly({Rat(1), Rat(0), Rat(1)})), 0);
  EXPECT_EQ(sturm_count(UPoly({Rat(1), Rat(-2), Rat(1)})), 1);
}

TEST(Isolation, Examples) {
  const auto r = isolate_real_roots(UPoly({Rat(-2), Rat(0), Rat(1)}));
  ASSERT_EQ(r.size(), 2u);
  EXPECT_TRUE(Interval(Rat(-2), Rat(-1)).contains(r[0]));
  EXPECT_TRUE(Interval(Rat(1), Rat(2)).contains(r[1]));
  const auto c = isolate_real_roots(UPoly({Rat(0), Rat(0), Rat(0), Rat(1)}));
  ASSERT_EQ(c.size(), 1u);
  EXPECT_TRUE(c[0].lo < 0 && 0 < c[0].hi);
}

TEST(Isolation, KnownRootsWithMultiplicity) {
  std::mt19937_64 rng(9);
  std::uniform_int_distribution<int> num(-40, 40), den(1, 7), mult(1, 3), count(1, 8);
  for (int trial = 0; trial < 40; ++trial) {
    std::set<Rat> distinct;
    std::vector<Rat> roots;
    const int n = count(rng);
    for (int i = 0; i < n; ++i) {
      const Rat r = make_rat(num(rng), den(rng));
      distinct.insert(r);
      for (int k = mult(rng); k > 0; --k) roots.push_back(r);
    }
    // An irreducible quadratic factor adds no real roots.
    const UPoly p = from_roots(roots) * UPoly({Rat(3), Rat(1), Rat(1)});
    const auto iv = isolate_real_roots(p);
    ASSERT_EQ(iv.size(), distinct.size());
    EXPECT_EQ(sturm_count(p), static_cast<int>(distinct.size()));
    auto it = distinct.begin();
    for (std::size_t i = 0; i < iv.size(); ++i, ++it) {
      EXPECT_TRUE(iv[i].lo < *it && *it < iv[i].hi);
      if (i + 1 < iv.size()) EXPECT_LE(iv[i].hi, iv[i + 1].lo);
      EXPECT_NE(p.sign_at(iv[i].lo), 0);
      EXPECT_NE(p.sign_at(iv[i].hi), 0);
    }
    EXPECT_EQ(rational_roots(p), std::vector<Rat>(distinct.begin(), distinct.end()));
  }
}

TEST(Isolation, RefineKeepsTheRoot) {
  const UPoly p({Rat(-2), Rat(0), Rat(1)});
  const SturmSequence s(p);
  auto iv = isolate_real_roots(s).back();
  iv = refine_root(s, iv, make_rat(1, 1000000));
  EXPECT_LE(iv.width(), make_rat(1, 1000000));
  EXPECT_LT(iv.lo * iv.lo, Rat(2));
  EXPECT_GT(iv.hi * iv.hi, Rat(2));
}

TEST(Resultant, Examples) {
  const MPoly a = MPoly::variable("a"), b = MPoly::variable("b");
  EXPECT_EQ(resultant(X - a, X - b, "x"), a - b);
  EXPECT_EQ(resultant(Y * Y - X, Y - MPoly(1), "y"), MPoly(1) - X);
}

TEST(Resultant, VanishesOnCommonFactor) {
  std::mt19937_64 rng(2);
  std::uniform_int_distribution<int> c(-4, 4);
  for (int trial = 0; trial < 10; ++trial) {
    const MPoly h = X + MPoly(c(rng)) * Y + MPoly(c(rng));
    const MPoly u = X * X + MPoly(c(rng)) * Y + MPoly(1), v = X * Y + MPoly(c(rng)) * X + MPoly(c(rng) + 9);
    EXPECT_TRUE(resultant(h * u, h * v, "x").is_zero());
  }
}

TEST(Resultant, ProductOverRootsOracle) {
  // Res_x(f, g) = prod g(r_i) for monic f with roots r_i.
  std::mt19937_64 rng(4);
  std::uniform_int_distribution<int> c(-5, 5);
  for (int trial = 0; trial < 10; ++trial) {
    std::vector<Rat> roots;
    for (int i = 0; i < 3; ++i) roots.push_back(Rat(c(rng)));
    MPoly f(1);
    for (const auto& r : roots) f *= X - MPoly(r);
    const MPoly g = X * X * Y + MPoly(c(rng)) * X + Y - MPoly(c(rng));
    MPoly expected(1);
    for (const auto& r : roots) expected *= g.substitute({{"x", MPoly(r)}});
    EXPECT_EQ(resultant(f, g, "x"), expected);
  }
}

TEST(Resultant, Errors) {
  try {
    resultant(X, MPoly(3), "x");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::ZeroDegree);
  }
  try {
    resultant(X, MPoly(), "x");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::ZeroPolynomial);
  }
}

TEST(Eliminant, SampledMatchesSymbolicOnSurrogate) {
  // Surrogate map (x, y) -> (x, x y): eliminate x from x - a0 and x y - b0.
  const Rat a0 = make_rat(3, 2), b0 = make_rat(-7, 3);
  const MPoly f = X - MPoly(a0), g = X * Y - MPoly(b0);
  const UPoly symbolic = resultant(f, g, "x").to_upoly("y");
  std::vector<Sample> samples;
  for (const auto& n : interpolation_nodes(130)) samples.push_back({n, eliminant_at(f, g, "x", "y", n)});
  EXPECT_EQ(interpolate(samples, eliminant_degree_bound(f, g, "x", "y") + 5, "y"), symbolic);
  EXPECT_EQ(eliminant(f, g, "x", "y"), symbolic);
}

TEST(Eliminant, AgreesWithSymbolicResultant) {
  const MPoly f = X * X * Y - Y * Y + MPoly(3) * X - MPoly(1), g = Y * Y * X + X * X - MPoly(2) * Y;
  EXPECT_EQ(eliminant(f, g, "y", "x"), resultant(f, g, "y").to_upoly("x"));
  EXPECT_EQ(eliminant(f, g, "x", "y"), resultant(f, g, "x").to_upoly("y"));
}

TEST(Planar, CircleAndLine) {
  // x^2 + y^2 = 25 and x + y = 7: solutions (3, 4) and (4, 3).
  const MPoly f = X * X + Y * Y - MPoly(25), g = X + Y - MPoly(7);
  for (bool swap : {false, true}) {
    const auto r = solve_planar(f, g, "x", "y", {.swap_order = swap});
    EXPECT_EQ(r.certified_count, 2);
    EXPECT_TRUE(r.all_decided());
    for (const auto& s : r.solutions) {
      const bool has34 = s.box.x.contains(Rat(3)) && s.box.y.contains(Rat(4));
      const bool has43 = s.box.x.contains(Rat(4)) && s.box.y.contains(Rat(3));
      EXPECT_TRUE(has34 || has43);
    }
  }
  EXPECT_EQ(solve_planar(X * X + Y * Y + MPoly(1), X - Y, "x", "y").certified_count, 0);
}

TEST(Planar, SpuriousPairsAreRefuted) {
  // x^2 = 2, y^2 = 2, x = y: the pairs (sqrt2, -sqrt2) etc. must be refuted.
  const MPoly f = X * X - MPoly(2), g = X - Y;
  const auto r = solve_planar(f, g, "x", "y");
  EXPECT_EQ(r.certified_count, 2);
  EXPECT_EQ(r.candidate_pairs, 4);
  EXPECT_EQ(r.refuted_pairs, 2);
}

TEST(Planar, DegenerateEliminationThrows) {
  try {
    solve_planar(X * Y, X * Y * Y, "x", "y");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::DegenerateElimination);
  }
}
