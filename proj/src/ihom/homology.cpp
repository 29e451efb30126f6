#include "jacobi/ihom/homology.hpp"

#include <algorithm>

#include "jacobi/error.hpp"

namespace jacobi::ihom {

std::string to_string(Support s) { return s == Support::Compact ? "compact" : "closed"; }

Support parse_support(const std::string& text) {
  if (text == "c" || text == "compact") return Support::Compact;
  if (text == "cl" || text == "closed") return Support::Closed;
  throw Error(ErrorCode::ParseError, "unknown support '" + text + "' (use c or cl)");
}

namespace {

void check_perversity(const FilteredComplex& k, const Perversity& p) {
  if (p.m() != k.dim())
    throw Error(ErrorCode::InvalidPerversity,
                "perversity " + to_string(p) + " does not fit a complex of dimension " + std::to_string(k.dim()),
                static_cast<long>(p.entries().size()));
}

bool counts(const FilteredComplex& k, int d, std::size_t i, Support s) {
  return s == Support::Compact || !k.ideal(d, i);
}

SparseVec boundary_vector(const FilteredComplex& k, int d, std::size_t i, Support s) {
  SparseVec v;
  const auto f = k.facets(d, i);
  for (std::size_t j = 0; j < f.size(); ++j) {
    if (!counts(k, d - 1, f[j], s)) continue;
    v.emplace_back(f[j], Rat(j % 2 == 0 ? 1 : -1));
  }
  std::sort(v.begin(), v.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  return v;
}

// c = sum_j combo_j * column_j for a combination over listed simplices.
SparseVec expand(const SparseVec& combo, const std::vector<std::size_t>& simplices) {
  SparseVec out;
  for (const auto& [j, c] : combo) out.emplace_back(simplices[j], c);
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  return out;
}

SparseVec apply_boundary(const FilteredComplex& k, int d, const SparseVec& chain, Support s) {
  SparseVec out;
  for (const auto& [i, c] : chain) out = axpy(out, c, boundary_vector(k, d, i, s));
  return out;
}

}  // namespace

bool is_allowable(const FilteredComplex& k, int i, std::size_t index, const Perversity& p) {
  const int m = k.dim();
  for (int r = 1; r <= m; ++r) {
    const int fd = k.face_dim_in(i, index, m - r);
    if (fd < 0) continue;
    if (fd > i - r + p[r]) return false;
  }
  return true;
}

std::vector<std::size_t> allowable_basis(const FilteredComplex& k, int i, const Perversity& p) {
  check_perversity(k, p);
  std::vector<std::size_t> out;
  for (std::size_t j = 0; j < k.count(i); ++j)
    if (is_allowable(k, i, j, p)) out.push_back(j);
  return out;
}

bool is_allowable(const FilteredComplex& k, const Chain& c, const Perversity& p, Support s) {
  for (const auto& [i, v] : c.coefficients)
    if (counts(k, c.degree, i, s) && !is_allowable(k, c.degree, i, p)) return false;
  return true;
}

Chain boundary(const FilteredComplex& k, const Chain& c, Support s) {
  Chain out;
  out.degree = c.degree - 1;
  if (c.degree == 0) return out;
  SparseVec in;
  for (const auto& e : c.coefficients)
    if (counts(k, c.degree, e.first, s)) in.push_back(e);
  out.coefficients = apply_boundary(k, c.degree, in, s);
  return out;
}

std::vector<SparseVec> boundary_columns(const FilteredComplex& k, int i, Support s) {
  std::vector<SparseVec> cols;
  for (std::size_t j = 0; j < k.count(i); ++j) {
    if (!counts(k, i, j, s)) continue;
    cols.push_back(i == 0 ? SparseVec{} : boundary_vector(k, i, j, s));
  }
  return cols;
}

std::vector<Chain> intersection_chains(const FilteredComplex& k, int i, const Perversity& p, Support s) {
  check_perversity(k, p);
  std::vector<std::size_t> cols;
  for (std::size_t j = 0; j < k.count(i); ++j)
    if (counts(k, i, j, s) && is_allowable(k, i, j, p)) cols.push_back(j);

  // Keep only the rows of non-allowable faces; the kernel of that block is
  // IC_i.
  std::vector<SparseVec> restricted;
  restricted.reserve(cols.size());
  for (std::size_t j : cols) {
    SparseVec v;
    if (i > 0)
      for (const auto& e : boundary_vector(k, i, j, s))
        if (!is_allowable(k, i - 1, e.first, p)) v.push_back(e);
    restricted.push_back(std::move(v));
  }
  const Reduction red = reduce_columns(restricted, true);
  std::vector<Chain> out;
  out.reserve(red.kernel.size());
  for (const auto& combo : red.kernel) out.push_back(Chain{i, expand(combo, cols)});
  return out;
}

IHResult ih_betti(const FilteredComplex& k, const Perversity& p, Support s) {
  check_perversity(k, p);
  const int m = k.dim();
  IHResult res;
  res.perversity = p;
  res.support = s;
  std::vector<std::size_t> boundary_rank(static_cast<std::size_t>(m + 2), 0);
  for (int i = 0; i <= m; ++i) {
    const auto basis = intersection_chains(k, i, p, s);
    res.ic_dims.push_back(static_cast<int>(basis.size()));
    if (i == 0) continue;
    std::vector<SparseVec> images;
    images.reserve(basis.size());
    for (const auto& c : basis) images.push_back(apply_boundary(k, i, c.coefficients, s));
    boundary_rank[static_cast<std::size_t>(i)] = rank(images);
  }
  for (int i = 0; i <= m; ++i)
    res.betti.push_back(res.ic_dims[static_cast<std::size_t>(i)] -
                        static_cast<int>(boundary_rank[static_cast<std::size_t>(i)]) -
                        static_cast<int>(boundary_rank[static_cast<std::size_t>(i + 1)]));
  return res;
}

std::vector<int> ordinary_betti(const FilteredComplex& k, Support s) {
  const int m = k.dim();
  std::vector<std::size_t> n(static_cast<std::size_t>(m + 1)), rk(static_cast<std::size_t>(m + 2), 0);
  for (int i = 0; i <= m; ++i) {
    const auto cols = boundary_columns(k, i, s);
    n[static_cast<std::size_t>(i)] = cols.size();
    if (i > 0) rk[static_cast<std::size_t>(i)] = rank(cols);
  }
  std::vector<int> b;
  for (int i = 0; i <= m; ++i)
    b.push_back(static_cast<int>(n[static_cast<std::size_t>(i)] - rk[static_cast<std::size_t>(i)] -
                                 rk[static_cast<std::size_t>(i + 1)]));
  return b;
}

bool is_ic_boundary(const FilteredComplex& k, const Chain& c, const Perversity& p, Support s) {
  const int i = c.degree + 1;
  if (i > k.dim()) return c.coefficients.empty();
  std::vector<SparseVec> images;
  for (const auto& b : intersection_chains(k, i, p, s)) images.push_back(apply_boundary(k, i, b.coefficients, s));
  const std::size_t before = rank(images);
  SparseVec target;
  for (const auto& e : c.coefficients)
    if (counts(k, c.degree, e.first, s)) target.push_back(e);
  images.push_back(std::move(target));
  return rank(images) == before;
}

}  // namespace jacobi::ihom
