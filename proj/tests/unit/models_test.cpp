#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <functional>
#include <set>

#include "jacobi/error.hpp"
#include "jacobi/ihom/homology.hpp"
#include "jacobi/models/models.hpp"

using namespace jacobi;
using namespace jacobi::models;
using ihom::Support;

namespace {

ErrorCode code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error thrown";
  return ErrorCode::ParseError;
}

int vertex(const ihom::FilteredComplex& k, const std::string& name) {
  const auto& n = k.vertex_names();
  const auto it = std::find(n.begin(), n.end(), name);
  return it == n.end() ? -1 : static_cast<int>(it - n.begin());
}

std::size_t triangles_on(const ihom::FilteredComplex& k, std::size_t edge) {
  const auto& e = k.simplices(1)[edge];
  std::size_t n = 0;
  for (const auto& t : k.simplices(2))
    n += std::includes(t.begin(), t.end(), e.begin(), e.end());
  return n;
}

GluingSpec two_disks() {
  GluingSpec s;
  s.patches = {{"P", 3, 3}, {"Q", 3, 3}};
  s.arcs = {{"E", 8, true, "", ""}};
  s.gluings = {{"E", {"P", 0, 8, 1}, {"Q", 0, 8, 1}}};
  return s;
}

}  // namespace

TEST(Gluing, TwoDisksMakeASphere) {
  const auto k = gluing_build(two_disks());
  EXPECT_EQ(k.count(0), 10u);
  for (auto s : {Support::Compact, Support::Closed})
    EXPECT_EQ(ihom::ordinary_betti(k, s), (std::vector<int>{1, 0, 1}));
  EXPECT_TRUE(k.diagnostics().flagged_vertices.empty());
}

TEST(Gluing, Errors) {
  auto three = two_disks();
  three.patches.push_back({"R", 3, 3});
  three.gluings.push_back({"E", {"R", 0, 8, 1}, {"P", 0, 8, 1}});
  EXPECT_EQ(code_of([&] { gluing_build(three); }), ErrorCode::InvalidGluing);

  auto short_side = two_disks();
  short_side.gluings[0].side_b.count = 7;
  EXPECT_EQ(code_of([&] { gluing_build(short_side); }), ErrorCode::NonMatchingArcLengths);

  auto unknown = two_disks();
  unknown.gluings[0].side_a.patch = "Z";
  EXPECT_EQ(code_of([&] { gluing_build(unknown); }), ErrorCode::InvalidGluing);

  auto unused = two_disks();
  unused.arcs.push_back({"F", 2, false, "", ""});
  EXPECT_EQ(code_of([&] { gluing_build(unused); }), ErrorCode::InvalidGluing);
}

TEST(Pinchuk, ArcEdgesJoinTwoSheets) {
  const auto k = pinchuk_model();
  EXPECT_EQ(k.count(0), 84u);
  EXPECT_EQ(k.count(2), 128u);
  const std::vector<std::vector<std::string>> chains = {
      {"f1", "C1[1]", "C1[2]", "C1[3]", "L"},
      {"L", "C2[1]", "C2[2]", "C2[3]", "O"},
      {"O", "C3[1]", "C3[2]", "C3[3]", "f3"}};
  int edges = 0;
  for (const auto& c : chains)
    for (std::size_t i = 0; i + 1 < c.size(); ++i) {
      ihom::Simplex e{vertex(k, c[i]), vertex(k, c[i + 1])};
      ASSERT_GE(e[0], 0);
      ASSERT_GE(e[1], 0);
      std::sort(e.begin(), e.end());
      const long idx = k.index_of(e);
      ASSERT_GE(idx, 0);
      EXPECT_EQ(triangles_on(k, static_cast<std::size_t>(idx)), 2u);
      EXPECT_FALSE(k.ideal(1, static_cast<std::size_t>(idx)));
      ++edges;
    }
  EXPECT_EQ(edges, 12);
  for (std::size_t i = 0; i < k.count(1); ++i)
    if (k.ideal(1, i)) EXPECT_EQ(triangles_on(k, i), 1u);
  EXPECT_EQ(k.diagnostics().face_pairing.at(2), 172);
}

TEST(Pinchuk, SingularPoints) {
  const auto k = pinchuk_model();
  EXPECT_EQ(k.diagnostics().stratum_dims, (std::vector<int>{0, 2}));
  EXPECT_EQ(k.level(ihom::Simplex{vertex(k, "L")}), 0);
  EXPECT_EQ(k.level(ihom::Simplex{vertex(k, "O")}), 0);
  std::vector<std::string> flagged;
  for (int v : k.diagnostics().flagged_vertices) flagged.push_back(k.vertex_names()[static_cast<std::size_t>(v)]);
  EXPECT_EQ(flagged, (std::vector<std::string>{"O"}));
}

TEST(Pinchuk, IntersectionHomology) {
  const auto k = pinchuk_model();
  const auto zero = ihom::zero_perversity(2);
  EXPECT_EQ(ihom::ih_betti(k, zero, Support::Compact).betti, (std::vector<int>{1, 0, 0}));
  EXPECT_EQ(ihom::ih_betti(k, zero, Support::Closed).betti, (std::vector<int>{0, 0, 1}));
  const auto ks = ihom::barycentric_subdivide(k);
  EXPECT_EQ(ihom::ih_betti(ks, zero, Support::Compact).betti[1], 0);
  EXPECT_EQ(ihom::ih_betti(ks, zero, Support::Closed).betti[1], 0);
}

TEST(Pinchuk, ForgettingTheFiltrationChangesCompactH1) {
  const auto k = ihom::without_filtration(pinchuk_model());
  EXPECT_EQ(ihom::ordinary_betti(k, Support::Compact), (std::vector<int>{1, 1, 0}));
  EXPECT_EQ(ihom::ih_betti(k, ihom::zero_perversity(2), Support::Compact).betti, (std::vector<int>{1, 1, 0}));
  EXPECT_EQ(ihom::ordinary_betti(k, Support::Closed), (std::vector<int>{0, 0, 1}));
}

TEST(Pinchuk, ChainsThroughLAndOAreNotAllowable) {
  const auto k = pinchuk_model();
  const auto zero = ihom::zero_perversity(2);
  // The C2 arc from L to O.
  const std::vector<std::string> c2 = {"L", "C2[1]", "C2[2]", "C2[3]", "O"};
  ihom::Chain chain{1, {}};
  for (std::size_t i = 0; i + 1 < c2.size(); ++i) {
    int a = vertex(k, c2[i]), b = vertex(k, c2[i + 1]);
    const exact::Rat sign = a < b ? 1 : -1;
    const long idx = k.index_of(a < b ? ihom::Simplex{a, b} : ihom::Simplex{b, a});
    chain.coefficients.emplace_back(static_cast<std::size_t>(idx), sign);
  }
  std::sort(chain.coefficients.begin(), chain.coefficients.end(),
            [](const auto& x, const auto& y) { return x.first < y.first; });
  EXPECT_FALSE(ihom::is_allowable(k, chain, zero, Support::Compact));
  const int l = vertex(k, "L"), o = vertex(k, "O");
  for (const auto& c : ihom::intersection_chains(k, 1, zero, Support::Compact))
    for (const auto& [idx, coeff] : c.coefficients) {
      const auto& e = k.simplices(1)[idx];
      EXPECT_TRUE(e[0] != l && e[0] != o && e[1] != l && e[1] != o);
    }
}

TEST(Models, Parabola) {
  const auto k = parabola_model();
  const auto zero = ihom::zero_perversity(1);
  EXPECT_EQ(ihom::ih_betti(k, zero, Support::Compact).betti, (std::vector<int>{1, 0}));
  EXPECT_EQ(ihom::ih_betti(k, zero, Support::Closed).betti, (std::vector<int>{0, 1}));
}

TEST(Models, ValetteEmbedding) {
  const auto one = valette_embed(1);
  EXPECT_EQ(one.image, (std::vector<double>{1, 0.5, -0.5}));
  double prev = 1e9;
  for (int k = 1; k <= 1000; k *= 10) {
    const auto s = valette_embed(1.0 / k);
    const double n = std::hypot(s.image[0], s.image[1], s.image[2]);
    EXPECT_LT(n, prev);
    prev = n;
  }
  EXPECT_LT(prev, 2e-3);
  // Injective on a sample grid.
  std::set<std::vector<double>> seen;
  for (int i = -50; i <= 50; ++i) EXPECT_TRUE(seen.insert(valette_embed(i / 10.0).image).second);
}

TEST(Models, Registry) {
  EXPECT_EQ(model_names(),
            (std::vector<std::string>{"circle", "interval_line", "parabola", "pinched_torus", "pinchuk", "sphere", "torus"}));
  EXPECT_EQ(code_of([] { model_by_name("klein"); }), ErrorCode::UnknownModel);
}

TEST(Models, GluingSvg) {
  const auto svg = gluing_svg(pinchuk_spec());
  EXPECT_EQ(svg.rfind("<svg", 0), 0u);
  EXPECT_NE(svg.find("</svg>"), std::string::npos);
  for (const char* s : {"A1", "A2", "B1", "B2", "C1", "C2", "C3"}) EXPECT_NE(svg.find(s), std::string::npos) << s;
  EXPECT_EQ(svg, gluing_svg(pinchuk_spec()));
}
