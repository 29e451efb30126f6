#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "jacobi/pinchuk/pinchuk.hpp"

using namespace jacobi;
using namespace jacobi::exact;
using namespace jacobi::pinchuk;

namespace {

const PinchukMap& the_map() {
  static const PinchukMap m = build_map();
  return m;
}

std::map<std::string, Rat> at(const Rat& x, const Rat& y) { return {{"x", x}, {"y", y}}; }

}  // namespace

TEST(PinchukMap, Degrees) {
  EXPECT_EQ(the_map().P.total_degree(), 10);
  EXPECT_EQ(the_map().Q.total_degree(), 25);
  EXPECT_EQ(the_map().P.degree_in("y"), 4);
  EXPECT_EQ(the_map().Q.degree_in("y"), 10);
}

TEST(PinchukMap, ValuesAtOneOne) {
  EXPECT_EQ(the_map().P.evaluate(at(Rat(1), Rat(1))), Rat(1));
  EXPECT_EQ(the_map().Q.evaluate(at(Rat(1), Rat(1))), Rat(0));
  EXPECT_EQ(the_map().jac.evaluate(at(Rat(1), Rat(1))), Rat(170));
}

TEST(PinchukMap, JacobianMatchesPartials) {
  const auto& m = the_map();
  const MPoly jac = m.P.partial("x") * m.Q.partial("y") - m.P.partial("y") * m.Q.partial("x");
  EXPECT_EQ(jac, m.jac);
}

TEST(JacobianIdentity, ResolvedReadingHolds) {
  const auto v = verify_jacobian_identity(the_map());
  ASSERT_TRUE(v.holds);
  ASSERT_EQ(v.readings.size(), 2u);
  EXPECT_TRUE(v.residual().is_zero());
  EXPECT_EQ(v.readings[static_cast<std::size_t>(v.adopted)].formula, "t^2 + (t + f*(13 + 15*h))^2 + f^2");
  // The other parenthesisation does not hold.
  EXPECT_FALSE(v.readings[1 - static_cast<std::size_t>(v.adopted)].holds);
  EXPECT_FALSE(v.readings[1 - static_cast<std::size_t>(v.adopted)].residual.is_zero());
}

TEST(JacobianIdentity, SumOfSquaresAtRandomPoints) {
  // Oracle: evaluate t, h, f separately and form the sum of squares.
  const auto& m = the_map();
  std::mt19937_64 rng(99);
  std::uniform_int_distribution<int> n(-30, 30), d(1, 9);
  for (int i = 0; i < 50; ++i) {
    const auto p = at(make_rat(n(rng), d(rng)), make_rat(n(rng), d(rng)));
    const Rat t = m.t.evaluate(p), h = m.h.evaluate(p), f = m.f.evaluate(p);
    const Rat u = t + f * (13 + 15 * h);
    EXPECT_EQ(m.jac.evaluate(p), t * t + u * u + f * f);
  }
}

TEST(JacobianIdentity, PositiveAtSampledPoints) {
  const auto s = sample_jacobian(the_map(), 1000, 42);
  EXPECT_EQ(s.points, 1000u);
  EXPECT_EQ(s.positive, 1000u);
  EXPECT_GT(s.minimum, 0);
  // Same seed, same sample.
  EXPECT_EQ(sample_jacobian(the_map(), 1000, 42).minimum, s.minimum);
}

TEST(PinchukMap, NumericFormMatchesExact) {
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<int> n(-40, 40);
  for (int i = 0; i < 40; ++i) {
    const Rat x = make_rat(n(rng), 8), y = make_rat(n(rng), 8);
    const auto [p, q] = evaluate_numeric(to_double(x), to_double(y));
    const double pe = to_double(the_map().P.evaluate(at(x, y))), qe = to_double(the_map().Q.evaluate(at(x, y)));
    EXPECT_NEAR(p, pe, 1e-9 * (1 + std::fabs(pe)));
    EXPECT_NEAR(q, qe, 1e-9 * (1 + std::fabs(qe)));
  }
}

TEST(AsymptoticCurve, Anchors) {
  const auto c = asymptotic_curve();
  EXPECT_EQ(curve_eval(c, Rat(0)), std::make_pair(Rat(-1), make_rat(-163, 4)));
  EXPECT_EQ(curve_eval(c, Rat(1)), std::make_pair(Rat(0), Rat(0)));
  EXPECT_EQ(curve_eval(c, Rat(-1)), std::make_pair(Rat(0), Rat(208)));
  EXPECT_EQ(curve_eval(c, Rat(2)), std::make_pair(Rat(3), make_rat(-4235, 4)));
  EXPECT_EQ(c.p, UPoly({Rat(-1), Rat(0), Rat(1)}, "s"));
}

TEST(AsymptoticCurve, SingularPointAndInjectivity) {
  const auto r = curve_checks(asymptotic_curve());
  EXPECT_EQ(r.singular_params, std::vector<Rat>{Rat(0)});
  EXPECT_EQ(r.real_singular_count, 1);
  EXPECT_TRUE(r.injective);
  EXPECT_TRUE(r.certified);
}

TEST(AsymptoticCurve, CuspidalCubicControl) {
  const AsymptoticCurve cusp{UPoly({Rat(0), Rat(0), Rat(1)}, "s"), UPoly({Rat(0), Rat(0), Rat(0), Rat(1)}, "s")};
  const auto r = curve_checks(cusp);
  EXPECT_EQ(r.singular_params, std::vector<Rat>{Rat(0)});
  EXPECT_TRUE(r.injective);
}

TEST(AsymptoticCurve, NonInjectiveControl) {
  // (s^2, s^3 - s) crosses itself at s = +-1.
  const AsymptoticCurve node{UPoly({Rat(0), Rat(0), Rat(1)}, "s"), UPoly({Rat(0), Rat(-1), Rat(0), Rat(1)}, "s")};
  const auto r = curve_checks(node);
  EXPECT_FALSE(r.injective);
  EXPECT_TRUE(r.singular_params.empty());
}
