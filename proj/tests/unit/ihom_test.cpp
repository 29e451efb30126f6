#include <gtest/gtest.h>

#include <algorithm>
#include <functional>
#include <map>
#include <set>

#include "jacobi/error.hpp"
#include "jacobi/ihom/homology.hpp"
#include "jacobi/ihom/io.hpp"
#include "jacobi/models/models.hpp"

using namespace jacobi;
using namespace jacobi::ihom;
using exact::Rat;

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

using Dense = std::vector<std::vector<Rat>>;

// Gaussian elimination on a copy; rank and a basis of the null space of the
// columns.
std::pair<std::size_t, Dense> dense_rank_kernel(Dense m, std::size_t cols) {
  const std::size_t rows = m.size();
  std::vector<long> pivot_col;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && m[p][c] == 0) ++p;
    if (p == rows) continue;
    std::swap(m[p], m[r]);
    const Rat inv = 1 / m[r][c];
    for (auto& v : m[r]) v *= inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || m[i][c] == 0) continue;
      const Rat f = m[i][c];
      for (std::size_t j = 0; j < cols; ++j) m[i][j] -= f * m[r][j];
    }
    pivot_col.push_back(static_cast<long>(c));
    ++r;
  }
  Dense kernel;
  std::set<long> pivots(pivot_col.begin(), pivot_col.end());
  for (std::size_t free = 0; free < cols; ++free) {
    if (pivots.count(static_cast<long>(free))) continue;
    std::vector<Rat> v(cols, Rat(0));
    v[free] = 1;
    for (std::size_t i = 0; i < pivot_col.size(); ++i) v[static_cast<std::size_t>(pivot_col[i])] = -m[i][free];
    kernel.push_back(v);
  }
  return {r, kernel};
}

bool allowable_by_hand(const FilteredComplex& k, int d, std::size_t i, const Perversity& p) {
  // dim(sigma cap V_{m-r}) <= d - r + p_r, with the intersection found by
  // scanning every face of sigma.
  const Simplex& s = k.simplices(d)[i];
  const int m = k.dim();
  for (int r = 1; r <= m; ++r) {
    int fd = -1;
    for (unsigned mask = 1; mask < (1u << s.size()); ++mask) {
      Simplex face;
      for (std::size_t j = 0; j < s.size(); ++j)
        if (mask & (1u << j)) face.push_back(s[j]);
      if (k.level(face) <= m - r) fd = std::max(fd, static_cast<int>(face.size()) - 1);
    }
    if (fd >= 0 && fd > d - r + p[r]) return false;
  }
  return true;
}

// Independent IH: dense matrices, allowability recomputed by hand, IC_i as
// the kernel of the non-allowable part of the boundary on allowable chains.
std::vector<int> dense_ih(const FilteredComplex& k, const Perversity& p, Support s) {
  const int m = k.dim();
  auto keep = [&](int d, std::size_t i) { return s == Support::Compact || !k.ideal(d, i); };
  std::vector<std::vector<std::size_t>> cells(static_cast<std::size_t>(m + 1)), allowed(cells.size());
  for (int d = 0; d <= m; ++d)
    for (std::size_t i = 0; i < k.count(d); ++i)
      if (keep(d, i)) {
        cells[static_cast<std::size_t>(d)].push_back(i);
        if (allowable_by_hand(k, d, i, p)) allowed[static_cast<std::size_t>(d)].push_back(i);
      }
  // Boundary of allowable d-simplices as dense columns over kept (d-1)-cells.
  auto boundary_dense = [&](int d, const std::vector<std::size_t>& cols) {
    const auto& rows = cells[static_cast<std::size_t>(d - 1)];
    std::map<std::size_t, std::size_t> row_of;
    for (std::size_t r = 0; r < rows.size(); ++r) row_of[rows[r]] = r;
    Dense mat(rows.size(), std::vector<Rat>(cols.size(), Rat(0)));
    for (std::size_t c = 0; c < cols.size(); ++c) {
      const Simplex& sg = k.simplices(d)[cols[c]];
      for (std::size_t omit = 0; omit < sg.size(); ++omit) {
        Simplex f;
        for (std::size_t j = 0; j < sg.size(); ++j)
          if (j != omit) f.push_back(sg[j]);
        const auto idx = static_cast<std::size_t>(k.index_of(f));
        auto it = row_of.find(idx);
        if (it != row_of.end()) mat[it->second][c] += omit % 2 ? -1 : 1;
      }
    }
    return mat;
  };
  // IC_d basis as dense vectors over allowed[d].
  std::vector<Dense> ic(static_cast<std::size_t>(m + 1));
  for (int d = 0; d <= m; ++d) {
    const auto& cols = allowed[static_cast<std::size_t>(d)];
    if (d == 0) {
      for (std::size_t c = 0; c < cols.size(); ++c) {
        std::vector<Rat> v(cols.size(), Rat(0));
        v[c] = 1;
        ic[0].push_back(v);
      }
      continue;
    }
    const Dense full = boundary_dense(d, cols);
    std::set<std::size_t> allowed_rows(allowed[static_cast<std::size_t>(d - 1)].begin(),
                                       allowed[static_cast<std::size_t>(d - 1)].end());
    Dense bad;
    const auto& rows = cells[static_cast<std::size_t>(d - 1)];
    for (std::size_t r = 0; r < rows.size(); ++r)
      if (!allowed_rows.count(rows[r])) bad.push_back(full[r]);
    if (bad.empty()) bad.push_back(std::vector<Rat>(cols.size(), Rat(0)));
    ic[static_cast<std::size_t>(d)] = dense_rank_kernel(bad, cols.size()).second;
  }
  // rank of the boundary restricted to IC_d
  auto rank_on_ic = [&](int d) -> std::size_t {
    if (d == 0 || ic[static_cast<std::size_t>(d)].empty()) return 0;
    const Dense full = boundary_dense(d, allowed[static_cast<std::size_t>(d)]);
    const auto& basis = ic[static_cast<std::size_t>(d)];
    Dense img(full.size(), std::vector<Rat>(basis.size(), Rat(0)));
    for (std::size_t r = 0; r < full.size(); ++r)
      for (std::size_t b = 0; b < basis.size(); ++b)
        for (std::size_t c = 0; c < basis[b].size(); ++c)
          if (basis[b][c] != 0 && full[r][c] != 0) img[r][b] += full[r][c] * basis[b][c];
    return dense_rank_kernel(img, basis.size()).first;
  };
  std::vector<int> betti;
  for (int d = 0; d <= m; ++d) {
    const std::size_t dim = ic[static_cast<std::size_t>(d)].size();
    const std::size_t out = rank_on_ic(d), in = d < m ? rank_on_ic(d + 1) : 0;
    betti.push_back(static_cast<int>(dim - out - in));
  }
  return betti;
}

}  // namespace

TEST(Perversity, Examples) {
  EXPECT_EQ(all_perversities(2).size(), 1u);
  EXPECT_EQ(all_perversities(2)[0].entries(), (std::vector<int>{0, 0, 0}));
  std::vector<std::vector<int>> m4;
  for (const auto& p : all_perversities(4)) m4.push_back(p.entries());
  EXPECT_EQ(m4, (std::vector<std::vector<int>>{{0, 0, 0, 0, 0}, {0, 0, 0, 0, 1}, {0, 0, 0, 1, 1}, {0, 0, 0, 1, 2}}));
  try {
    validate_perversity({0, 1, 0});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::InvalidPerversity);
    EXPECT_EQ(e.index(), 1);
  }
  EXPECT_EQ(parse_perversity("zero", 3).entries(), (std::vector<int>{0, 0, 0, 0}));
  EXPECT_EQ(parse_perversity("top", 4).entries(), (std::vector<int>{0, 0, 0, 1, 2}));
  EXPECT_EQ(parse_perversity("0,0,0,1", 3).entries(), (std::vector<int>{0, 0, 0, 1}));
}

TEST(Complex, Examples) {
  ComplexInput hollow;
  hollow.simplices = {{0, 1}, {1, 2}, {0, 2}};
  const auto h = build_complex(hollow);
  EXPECT_EQ(h.dim(), 1);
  EXPECT_EQ(h.count(0), 3u);

  ComplexInput solid;
  solid.simplices = {{0, 1, 2}};
  solid.levels[{0}] = 0;
  const auto s = build_complex(solid);
  EXPECT_EQ(s.diagnostics().stratum_dims, (std::vector<int>{0, 2}));

  ComplexInput bad = solid;
  bad.levels[{0, 1, 2}] = 1;
  EXPECT_EQ(code_of([&] { build_complex(bad); }), ErrorCode::DimensionViolation);

  ComplexInput unclosed = solid;
  unclosed.levels = {{{0, 1}, 1}};
  EXPECT_EQ(code_of([&] { build_complex(unclosed); }), ErrorCode::FiltrationNotClosed);
  unclosed.levels[{0}] = 1;
  unclosed.levels[{1}] = 0;
  EXPECT_NO_THROW(build_complex(unclosed));

  ComplexInput dangling;
  dangling.simplices = {{0, 1, 2}, {2, 3}};
  EXPECT_EQ(code_of([&] { build_complex(dangling); }), ErrorCode::DanglingSimplex);

  ComplexInput broken;
  broken.simplices = {{0, 0, 1}};
  EXPECT_EQ(code_of([&] { build_complex(broken); }), ErrorCode::InvalidComplex);
}

TEST(Allowability, PinchukModelEdgesAtLAndO) {
  const auto k = models::pinchuk_model();
  const auto zero = zero_perversity(2);
  const auto& names = k.vertex_names();
  int touching = 0;
  for (std::size_t i = 0; i < k.count(1); ++i) {
    const auto& e = k.simplices(1)[i];
    const bool at_singular = names[static_cast<std::size_t>(e[0])] == "L" || names[static_cast<std::size_t>(e[0])] == "O" ||
                             names[static_cast<std::size_t>(e[1])] == "L" || names[static_cast<std::size_t>(e[1])] == "O";
    if (at_singular) {
      ++touching;
      EXPECT_FALSE(is_allowable(k, 1, i, zero));
    } else {
      EXPECT_TRUE(is_allowable(k, 1, i, zero));
    }
  }
  EXPECT_GT(touching, 0);
  for (std::size_t i = 0; i < k.count(2); ++i) EXPECT_TRUE(is_allowable(k, 2, i, zero));
}

TEST(Allowability, TrivialFiltrationAllowsEverything) {
  const auto k = models::torus();
  for (int d = 0; d <= 2; ++d) EXPECT_EQ(allowable_basis(k, d, zero_perversity(2)).size(), k.count(d));
}

TEST(Homology, BettiExamples) {
  for (auto s : {Support::Compact, Support::Closed}) {
    EXPECT_EQ(ordinary_betti(models::circle(), s), (std::vector<int>{1, 1}));
    EXPECT_EQ(ordinary_betti(models::sphere(), s), (std::vector<int>{1, 0, 1}));
    EXPECT_EQ(ordinary_betti(models::torus(), s), (std::vector<int>{1, 2, 1}));
  }
  const auto pt = models::pinched_torus();
  EXPECT_EQ(ih_betti(pt, zero_perversity(2), Support::Compact).betti, (std::vector<int>{1, 0, 1}));
  EXPECT_EQ(ordinary_betti(pt, Support::Compact), (std::vector<int>{1, 1, 1}));
  const auto iv = models::interval_line();
  EXPECT_EQ(ih_betti(iv, zero_perversity(1), Support::Compact).betti, (std::vector<int>{1, 0}));
  EXPECT_EQ(ih_betti(iv, zero_perversity(1), Support::Closed).betti, (std::vector<int>{0, 1}));
}

TEST(Homology, ManifoldsAgreeWithOrdinaryForAllPerversities) {
  for (const auto& [name, k] : models::oracle_models()) {
    if (k.has_singular_strata()) continue;
    for (const auto& p : all_perversities(k.dim()))
      for (auto s : {Support::Compact, Support::Closed})
        EXPECT_EQ(ih_betti(k, p, s).betti, ordinary_betti(k, s)) << name;
  }
  // A 4-dimensional manifold with several perversities: boundary of the
  // 5-simplex.
  ComplexInput s4;
  for (int omit = 0; omit < 6; ++omit) {
    Simplex f;
    for (int v = 0; v < 6; ++v)
      if (v != omit) f.push_back(v);
    s4.simplices.push_back(f);
  }
  const auto k = build_complex(s4);
  EXPECT_EQ(ordinary_betti(k, Support::Compact), (std::vector<int>{1, 0, 0, 0, 1}));
  for (const auto& p : all_perversities(4)) EXPECT_EQ(ih_betti(k, p, Support::Compact).betti, ordinary_betti(k, Support::Compact));
}

TEST(Homology, DenseOracleAgrees) {
  std::map<std::string, FilteredComplex> ks = models::oracle_models();
  ks.emplace("pinchuk", models::pinchuk_model());
  ks.emplace("parabola", models::parabola_model());
  ks.emplace("pinched_torus_sd", barycentric_subdivide(models::pinched_torus()));
  for (const auto& [name, k] : ks)
    for (const auto& p : all_perversities(k.dim()))
      for (auto s : {Support::Compact, Support::Closed})
        EXPECT_EQ(ih_betti(k, p, s).betti, dense_ih(k, p, s)) << name << " " << to_string(s);
}

TEST(Homology, BoundaryOfBoundaryIsZero) {
  for (const auto& name : models::model_names()) {
    const auto k = models::model_by_name(name);
    for (auto s : {Support::Compact, Support::Closed})
      for (int d = 2; d <= k.dim(); ++d)
        for (std::size_t i = 0; i < k.count(d); ++i) {
          if (s == Support::Closed && k.ideal(d, i)) continue;
          const Chain c{d, {{i, Rat(1)}}};
          EXPECT_TRUE(boundary(k, boundary(k, c, s), s).coefficients.empty()) << name;
        }
  }
}

TEST(Homology, EulerCharacteristic) {
  for (const auto& name : models::model_names()) {
    const auto k = models::model_by_name(name);
    for (auto s : {Support::Compact, Support::Closed}) {
      long cells = 0, betti = 0;
      const auto b = ordinary_betti(k, s);
      for (int d = 0; d <= k.dim(); ++d) {
        long n = 0;
        for (std::size_t i = 0; i < k.count(d); ++i) n += s == Support::Compact || !k.ideal(d, i);
        cells += d % 2 ? -n : n;
        betti += d % 2 ? -b[static_cast<std::size_t>(d)] : b[static_cast<std::size_t>(d)];
      }
      EXPECT_EQ(cells, betti) << name;
    }
  }
}

TEST(Homology, WrongPerversityLengthThrows) {
  EXPECT_EQ(code_of([] { ih_betti(models::torus(), zero_perversity(3), Support::Compact); }),
            ErrorCode::InvalidPerversity);
}

TEST(Subdivision, CountsAndInvariance) {
  const auto hex = barycentric_subdivide(models::circle());
  EXPECT_EQ(hex.count(0), 6u);
  EXPECT_EQ(hex.count(1), 6u);
  EXPECT_EQ(ordinary_betti(hex, Support::Compact), (std::vector<int>{1, 1}));
  ComplexInput tri;
  tri.simplices = {{0, 1, 2}};
  EXPECT_EQ(barycentric_subdivide(build_complex(tri)).count(2), 6u);
  for (const auto& name : models::model_names()) {
    const auto k = models::model_by_name(name);
    const auto ks = barycentric_subdivide(k);
    for (const auto& p : all_perversities(k.dim()))
      for (auto s : {Support::Compact, Support::Closed})
        EXPECT_EQ(ih_betti(k, p, s).betti, ih_betti(ks, p, s).betti) << name;
  }
}

TEST(Interchange, JsonRoundTrip) {
  for (const auto& name : models::model_names()) {
    const auto k = models::model_by_name(name);
    const auto j = complex_to_json(k);
    const auto back = complex_from_json(nlohmann::json::parse(j.dump()));
    ASSERT_EQ(back.dim(), k.dim());
    for (int d = 0; d <= k.dim(); ++d) {
      ASSERT_EQ(back.simplices(d), k.simplices(d)) << name;
      for (std::size_t i = 0; i < k.count(d); ++i) {
        EXPECT_EQ(back.level(d, i), k.level(d, i));
        EXPECT_EQ(back.ideal(d, i), k.ideal(d, i));
      }
    }
    EXPECT_EQ(back.vertex_names(), k.vertex_names());
  }
  EXPECT_EQ(code_of([] { complex_from_json(nlohmann::json::parse(R"({"vertices": 3})")); }), ErrorCode::ParseError);
}
