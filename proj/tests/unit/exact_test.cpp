#include <gtest/gtest.h>

#include <functional>
#include <numeric>
#include <random>

#include "jacobi/error.hpp"
#include "jacobi/exact/interpolate.hpp"
#include "jacobi/exact/linalg.hpp"
#include "jacobi/exact/mpoly.hpp"
#include "jacobi/exact/rational.hpp"
#include "jacobi/exact/upoly.hpp"

using namespace jacobi;
using namespace jacobi::exact;

namespace {

MPoly random_poly(std::mt19937_64& rng, int terms, int max_deg) {
  std::uniform_int_distribution<int> coeff(-9, 9), deg(0, max_deg);
  MPoly p;
  const MPoly x = MPoly::variable("x"), y = MPoly::variable("y"), z = MPoly::variable("z");
  for (int t = 0; t < terms; ++t)
    p += MPoly(make_rat(coeff(rng), 1 + std::abs(coeff(rng)))) * x.pow(deg(rng)) * y.pow(deg(rng)) * z.pow(deg(rng) / 2);
  return p;
}

ErrorCode code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error thrown";
  return ErrorCode::ParseError;
}

}  // namespace

TEST(Rational, ParseAndPrint) {
  EXPECT_EQ(parse_rat("-163/4"), make_rat(-163, 4));
  EXPECT_EQ(parse_rat("-0.125"), make_rat(-1, 8));
  EXPECT_EQ(parse_rat("6/4"), make_rat(3, 2));
  EXPECT_EQ(to_string(make_rat(-4235, 4)), "-4235/4");
  EXPECT_EQ(to_string(Rat(208)), "208");
  EXPECT_EQ(code_of([] { parse_rat("1/0"); }), ErrorCode::ParseError);
  EXPECT_EQ(code_of([] { parse_rat("abc"); }), ErrorCode::ParseError);
}

TEST(Rational, SimplestBetween) {
  EXPECT_EQ(simplest_between(make_rat(1, 3), make_rat(1, 2)), make_rat(1, 2));
  EXPECT_EQ(simplest_between(make_rat(31, 100), make_rat(33, 100)), make_rat(5, 16));
  EXPECT_EQ(simplest_between(make_rat(-7, 3), make_rat(-2, 1)), Rat(-2));
  EXPECT_EQ(simplest_between(make_rat(-1, 2), make_rat(1, 2)), Rat(0));
  EXPECT_EQ(from_double(0.375), make_rat(3, 8));
  EXPECT_DOUBLE_EQ(to_double(make_rat(-163, 4)), -40.75);
}

TEST(MPoly, Examples) {
  const MPoly x = MPoly::variable("x"), y = MPoly::variable("y");
  EXPECT_EQ((x + y) * (x + y), parse_mpoly("x^2 + 2*x*y + y^2"));
  EXPECT_EQ((x * x * y).partial("x"), MPoly(2) * x * y);
  const MPoly p = parse_mpoly("s^2 - 1");
  EXPECT_EQ(p.substitute({{"s", MPoly(2)}}), MPoly(3));
  EXPECT_EQ(p.evaluate({{"s", Rat(2)}}), Rat(3));
}

TEST(MPoly, RingAxiomsAndEvaluationHomomorphism) {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<int> v(-5, 5);
  for (int trial = 0; trial < 30; ++trial) {
    const MPoly a = random_poly(rng, 4, 3), b = random_poly(rng, 4, 3), c = random_poly(rng, 3, 2);
    EXPECT_EQ(a + b, b + a);
    EXPECT_EQ(a * b, b * a);
    EXPECT_EQ((a + b) * c, a * c + b * c);
    EXPECT_EQ((a * b) * c, a * (b * c));
    EXPECT_TRUE((a - a).is_zero());
    const std::map<std::string, Rat> at{{"x", make_rat(v(rng), 3)}, {"y", make_rat(v(rng), 2)}, {"z", Rat(v(rng))}};
    EXPECT_EQ((a * b + c).evaluate(at), a.evaluate(at) * b.evaluate(at) + c.evaluate(at));
    if (!b.is_zero()) EXPECT_EQ(divide_exact(a * b, b), a);
  }
}

TEST(MPoly, PrintParseRoundTrip) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 20; ++trial) {
    const MPoly a = random_poly(rng, 5, 4);
    EXPECT_EQ(parse_mpoly(to_string(a)), a) << to_string(a);
  }
  EXPECT_EQ(to_string(parse_mpoly("3*x^2*y - y + 1/2")), "3 * x^2 * y + -1 * y + 1/2");
  EXPECT_EQ(parse_mpoly("(x+1)**3"), parse_mpoly("x^3 + 3*x^2 + 3*x + 1"));
  EXPECT_EQ(code_of([] { parse_mpoly("x +"); }), ErrorCode::ParseError);
  EXPECT_EQ(code_of([] { parse_mpoly("x / y"); }), ErrorCode::ParseError);
}

TEST(MPoly, DivideExactRejectsNonDivisor) {
  const MPoly x = MPoly::variable("x"), y = MPoly::variable("y");
  EXPECT_EQ(code_of([&] { divide_exact(x * x + y, x); }), ErrorCode::NotExactDivision);
  EXPECT_EQ(code_of([&] { divide_exact(x, MPoly()); }), ErrorCode::ZeroPolynomial);
}

TEST(UPoly, GcdAndSquareFree) {
  const UPoly a({Rat(-1), Rat(0), Rat(1)});         // x^2 - 1
  const UPoly b({Rat(1), Rat(2), Rat(1)});          // (x + 1)^2
  EXPECT_EQ(gcd(a, b), UPoly({Rat(1), Rat(1)}));
  const UPoly sq = UPoly({Rat(-1), Rat(1)}) * UPoly({Rat(-1), Rat(1)}) * UPoly({Rat(2), Rat(1)});
  EXPECT_EQ(square_free_part(sq), UPoly({Rat(-2), Rat(1), Rat(1)}));
  const auto [q, r] = divmod(UPoly({Rat(1), Rat(0), Rat(0), Rat(2)}), UPoly({Rat(1), Rat(1)}));
  EXPECT_EQ(q * UPoly({Rat(1), Rat(1)}) + r, UPoly({Rat(1), Rat(0), Rat(0), Rat(2)}));
  EXPECT_LT(r.degree(), 1);
}

TEST(Interpolate, Examples) {
  EXPECT_EQ(interpolate({{Rat(0), Rat(1)}, {Rat(1), Rat(2)}, {Rat(2), Rat(5)}}, 2),
            UPoly({Rat(1), Rat(0), Rat(1)}));
  EXPECT_TRUE(interpolate({{Rat(0), Rat(0)}, {Rat(1), Rat(0)}}, 1).is_zero());
}

TEST(Interpolate, RecoversRandomPolynomials) {
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<int> c(-50, 50);
  for (int deg = 0; deg <= 12; ++deg) {
    std::vector<Rat> coeffs;
    for (int k = 0; k <= deg; ++k) coeffs.push_back(make_rat(c(rng), 1 + std::abs(c(rng))));
    const UPoly p(coeffs);
    std::vector<Sample> samples;
    for (const auto& n : interpolation_nodes(static_cast<std::size_t>(deg + 6))) samples.push_back({n, p.evaluate(n)});
    EXPECT_EQ(interpolate(samples, deg + 2), p);
  }
}

TEST(Interpolate, Errors) {
  EXPECT_EQ(code_of([] { interpolate({{Rat(0), Rat(1)}, {Rat(0), Rat(2)}}, 1); }), ErrorCode::DuplicateAbscissa);
  EXPECT_EQ(code_of([] { interpolate({{Rat(0), Rat(1)}}, 1); }), ErrorCode::InsufficientSamples);
  // x^2 sampled at 4 points does not fit degree 1.
  EXPECT_EQ(code_of([] {
              interpolate({{Rat(0), Rat(0)}, {Rat(1), Rat(1)}, {Rat(2), Rat(4)}, {Rat(3), Rat(9)}}, 1);
            }),
            ErrorCode::InsufficientDegreeBound);
}

TEST(Bareiss, MatchesCofactorExpansion) {
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<int> c(-6, 6);
  // Oracle: Leibniz formula over all permutations.
  auto leibniz = [](const Matrix<Rat>& m) {
    const std::size_t n = m.size();
    std::vector<std::size_t> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    Rat total = 0;
    do {
      Rat term = 1;
      int inversions = 0;
      for (std::size_t i = 0; i < n; ++i) {
        term *= m[i][perm[i]];
        for (std::size_t j = i + 1; j < n; ++j) inversions += perm[i] > perm[j];
      }
      total += inversions % 2 ? -term : term;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return total;
  };
  for (std::size_t n = 1; n <= 6; ++n)
    for (int trial = 0; trial < 5; ++trial) {
      Matrix<Rat> m(n, std::vector<Rat>(n));
      for (auto& row : m)
        for (auto& v : row) v = make_rat(c(rng), 1 + std::abs(c(rng)));
      EXPECT_EQ(bareiss_determinant(m), leibniz(m));
    }
}
