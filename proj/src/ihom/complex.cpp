#include "jacobi/ihom/complex.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>

#include "jacobi/error.hpp"

namespace jacobi::ihom {

namespace {

std::string simplex_text(const Simplex& s) {
  std::string out = "[";
  for (std::size_t i = 0; i < s.size(); ++i) out += (i ? "," : "") + std::to_string(s[i]);
  return out + "]";
}

Simplex normalized_simplex(Simplex s) {
  if (s.empty()) throw Error(ErrorCode::InvalidComplex, "empty simplex");
  std::sort(s.begin(), s.end());
  if (std::adjacent_find(s.begin(), s.end()) != s.end())
    throw Error(ErrorCode::InvalidComplex, "repeated vertex in simplex " + simplex_text(s));
  if (s.front() < 0) throw Error(ErrorCode::InvalidComplex, "negative vertex id in " + simplex_text(s));
  return s;
}

void add_faces(const Simplex& s, std::vector<std::set<Simplex>>& out) {
  const std::size_t k = s.size();
  for (unsigned long mask = 1; mask < (1ul << k); ++mask) {
    Simplex f;
    for (std::size_t i = 0; i < k; ++i)
      if (mask & (1ul << i)) f.push_back(s[i]);
    const std::size_t d = f.size() - 1;
    if (out.size() <= d) out.resize(d + 1);
    out[d].insert(std::move(f));
  }
}

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int a) {
    while (parent[static_cast<std::size_t>(a)] != a) {
      parent[static_cast<std::size_t>(a)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(a)])];
      a = parent[static_cast<std::size_t>(a)];
    }
    return a;
  }
  void unite(int a, int b) { parent[static_cast<std::size_t>(find(a))] = find(b); }
};

}  // namespace

const std::vector<Simplex>& FilteredComplex::simplices(int d) const {
  static const std::vector<Simplex> empty;
  if (d < 0 || d > dim_) return empty;
  return by_dim_[static_cast<std::size_t>(d)];
}

long FilteredComplex::index_of(const Simplex& s) const {
  const int d = static_cast<int>(s.size()) - 1;
  if (d < 0 || d > dim_) return -1;
  const auto& idx = index_[static_cast<std::size_t>(d)];
  auto it = idx.find(s);
  return it == idx.end() ? -1 : static_cast<long>(it->second);
}

int FilteredComplex::level(const Simplex& s) const {
  const long i = index_of(s);
  if (i < 0) throw Error(ErrorCode::InvalidComplex, "unknown simplex " + simplex_text(s));
  return level(static_cast<int>(s.size()) - 1, static_cast<std::size_t>(i));
}

bool FilteredComplex::ideal(const Simplex& s) const {
  const long i = index_of(s);
  if (i < 0) throw Error(ErrorCode::InvalidComplex, "unknown simplex " + simplex_text(s));
  return ideal(static_cast<int>(s.size()) - 1, static_cast<std::size_t>(i));
}

std::vector<std::size_t> FilteredComplex::facets(int d, std::size_t i) const {
  std::vector<std::size_t> out;
  if (d == 0) return out;
  const Simplex& s = simplices(d)[i];
  const auto& idx = index_[static_cast<std::size_t>(d - 1)];
  for (std::size_t k = 0; k < s.size(); ++k) {
    Simplex f;
    for (std::size_t j = 0; j < s.size(); ++j)
      if (j != k) f.push_back(s[j]);
    out.push_back(idx.at(f));
  }
  return out;
}

bool FilteredComplex::has_singular_strata() const {
  for (int d = 0; d <= dim_; ++d)
    for (int l : levels_[static_cast<std::size_t>(d)])
      if (l < dim_) return true;
  return false;
}

bool FilteredComplex::has_ideal_boundary() const {
  for (const auto& v : ideal_)
    if (std::find(v.begin(), v.end(), true) != v.end()) return true;
  return false;
}

FilteredComplex build_complex(const ComplexInput& input) {
  if (input.simplices.empty()) throw Error(ErrorCode::InvalidComplex, "complex without simplices");
  std::vector<std::set<Simplex>> faces;
  int max_vertex = -1;
  for (const auto& raw : input.simplices) {
    const Simplex s = normalized_simplex(raw);
    max_vertex = std::max(max_vertex, s.back());
    add_faces(s, faces);
  }

  FilteredComplex k;
  k.dim_ = static_cast<int>(faces.size()) - 1;
  const int m = k.dim_;
  const std::size_t nv = std::max<std::size_t>(input.vertex_names.size(), static_cast<std::size_t>(max_vertex + 1));
  if (!input.vertex_names.empty() && input.vertex_names.size() < nv)
    throw Error(ErrorCode::InvalidComplex, "vertex id " + std::to_string(max_vertex) + " has no name");
  if (faces[0].size() != nv)
    throw Error(ErrorCode::InvalidComplex, "some vertex ids below " + std::to_string(nv) + " are unused");
  k.names_ = input.vertex_names;
  if (k.names_.empty())
    for (std::size_t v = 0; v < nv; ++v) k.names_.push_back("v" + std::to_string(v));

  k.by_dim_.resize(faces.size());
  k.index_.resize(faces.size());
  k.levels_.resize(faces.size());
  k.ideal_.resize(faces.size());
  for (std::size_t d = 0; d < faces.size(); ++d) {
    k.by_dim_[d].assign(faces[d].begin(), faces[d].end());
    for (std::size_t i = 0; i < k.by_dim_[d].size(); ++i) k.index_[d].emplace(k.by_dim_[d][i], i);
    k.levels_[d].assign(k.by_dim_[d].size(), m);
    k.ideal_[d].assign(k.by_dim_[d].size(), false);
  }

  for (const auto& [raw, lvl] : input.levels) {
    const Simplex s = normalized_simplex(raw);
    const long i = k.index_of(s);
    if (i < 0) throw Error(ErrorCode::InvalidComplex, "filtration names unknown simplex " + simplex_text(s));
    if (lvl < 0 || lvl > m)
      throw Error(ErrorCode::InvalidComplex, "filtration level " + std::to_string(lvl) + " out of range");
    k.levels_[s.size() - 1][static_cast<std::size_t>(i)] = lvl;
  }

  for (int d = 0; d <= m; ++d) {
    for (std::size_t i = 0; i < k.count(d); ++i) {
      const int lvl = k.level(d, i);
      if (lvl < d)
        throw Error(ErrorCode::DimensionViolation,
                    "V_" + std::to_string(lvl) + " contains the " + std::to_string(d) + "-simplex " +
                        simplex_text(k.simplices(d)[i]),
                    static_cast<long>(lvl));
      for (std::size_t f : k.facets(d, i))
        if (k.level(d - 1, f) > lvl)
          throw Error(ErrorCode::FiltrationNotClosed,
                      "V_" + std::to_string(lvl) + " contains " + simplex_text(k.simplices(d)[i]) +
                          " but not its face " + simplex_text(k.simplices(d - 1)[f]),
                      static_cast<long>(lvl));
    }
  }

  // Density of top simplices: mark everything below an m-simplex.
  std::vector<std::vector<bool>> covered(faces.size());
  for (int d = 0; d <= m; ++d) covered[static_cast<std::size_t>(d)].assign(k.count(d), d == m);
  for (int d = m; d >= 1; --d)
    for (std::size_t i = 0; i < k.count(d); ++i)
      if (covered[static_cast<std::size_t>(d)][i])
        for (std::size_t f : k.facets(d, i)) covered[static_cast<std::size_t>(d - 1)][f] = true;
  for (int d = 0; d < m; ++d)
    for (std::size_t i = 0; i < k.count(d); ++i)
      if (!covered[static_cast<std::size_t>(d)][i])
        throw Error(ErrorCode::DanglingSimplex,
                    simplex_text(k.simplices(d)[i]) + " is not a face of any " + std::to_string(m) + "-simplex",
                    static_cast<long>(i));

  for (const auto& raw : input.ideal_boundary) {
    const Simplex s = normalized_simplex(raw);
    std::vector<std::set<Simplex>> ideal_faces;
    add_faces(s, ideal_faces);
    for (const auto& layer : ideal_faces) {
      for (const auto& f : layer) {
        const long i = k.index_of(f);
        if (i < 0) throw Error(ErrorCode::InvalidComplex, "ideal boundary names unknown simplex " + simplex_text(f));
        k.ideal_[f.size() - 1][static_cast<std::size_t>(i)] = true;
      }
    }
  }

  k.face_dim_.resize(faces.size());
  for (int d = 0; d <= m; ++d) {
    auto& fd = k.face_dim_[static_cast<std::size_t>(d)];
    fd.assign(k.count(d), std::vector<int>(static_cast<std::size_t>(m + 1), -1));
    for (std::size_t i = 0; i < k.count(d); ++i) {
      for (int j = 0; j <= m; ++j) {
        int best = k.level(d, i) <= j ? d : -1;
        if (best < 0)
          for (std::size_t f : k.facets(d, i))
            best = std::max(best, k.face_dim_[static_cast<std::size_t>(d - 1)][f][static_cast<std::size_t>(j)]);
        fd[i][static_cast<std::size_t>(j)] = best;
      }
    }
  }

  // Diagnostics.
  Diagnostics& diag = k.diagnostics_;
  std::vector<bool> stratum(static_cast<std::size_t>(m + 1), false);
  for (int d = 0; d <= m; ++d)
    for (std::size_t i = 0; i < k.count(d); ++i) stratum[static_cast<std::size_t>(k.level(d, i))] = true;
  for (int i = 0; i <= m; ++i)
    if (stratum[static_cast<std::size_t>(i)]) diag.stratum_dims.push_back(i);

  if (m >= 1) {
    std::vector<int> cofaces(k.count(m - 1), 0);
    for (std::size_t i = 0; i < k.count(m); ++i)
      for (std::size_t f : k.facets(m, i)) ++cofaces[f];
    int bad = 0;
    for (std::size_t i = 0; i < cofaces.size(); ++i) {
      if (k.ideal(m - 1, i)) {
        ++diag.ideal_face_pairing[cofaces[i]];
      } else {
        ++diag.face_pairing[cofaces[i]];
        if (cofaces[i] != 2) ++bad;
      }
    }
    if (bad)
      diag.warnings.push_back(std::to_string(bad) + " non-ideal " + std::to_string(m - 1) +
                              "-simplices are not shared by exactly two " + std::to_string(m) + "-simplices");
  }

  // Vertex links: components from the link's 1-skeleton.
  std::vector<std::set<int>> link_vertices(nv);
  std::vector<std::vector<std::pair<int, int>>> link_edges(nv);
  if (m >= 1)
    for (const auto& e : k.simplices(1)) {
      link_vertices[static_cast<std::size_t>(e[0])].insert(e[1]);
      link_vertices[static_cast<std::size_t>(e[1])].insert(e[0]);
    }
  if (m >= 2)
    for (const auto& t : k.simplices(2))
      for (std::size_t a = 0; a < 3; ++a) {
        const int v = t[a];
        int p = -1, q = -1;
        for (std::size_t b = 0; b < 3; ++b)
          if (b != a) (p < 0 ? p : q) = t[b];
        link_edges[static_cast<std::size_t>(v)].emplace_back(p, q);
      }
  for (std::size_t v = 0; v < nv; ++v) {
    VertexLink link;
    link.vertex = static_cast<int>(v);
    link.ideal = k.ideal(0, v);
    const auto& lv = link_vertices[v];
    std::map<int, int> local;
    for (int u : lv) local.emplace(u, static_cast<int>(local.size()));
    UnionFind uf(local.size());
    std::vector<int> degree(local.size(), 0);
    for (auto [p, q] : link_edges[v]) {
      uf.unite(local.at(p), local.at(q));
      ++degree[static_cast<std::size_t>(local.at(p))];
      ++degree[static_cast<std::size_t>(local.at(q))];
    }
    std::set<int> roots;
    for (std::size_t i = 0; i < local.size(); ++i) roots.insert(uf.find(static_cast<int>(i)));
    link.components = static_cast<int>(roots.size());
    if (m == 0)
      link.manifold_like = true;
    else if (m == 1)
      link.manifold_like = lv.size() == (link.ideal ? 1u : 2u);
    else if (m == 2) {
      // A circle, or for ideal vertices a single arc.
      const auto ends = std::count(degree.begin(), degree.end(), 1);
      const bool rest = std::all_of(degree.begin(), degree.end(), [](int d) { return d == 1 || d == 2; });
      link.manifold_like = link.components == 1 && rest && (ends == 0 || (link.ideal && ends == 2));
    } else
      link.manifold_like = link.components == 1;
    if (!link.manifold_like) diag.flagged_vertices.push_back(link.vertex);
    diag.links.push_back(link);
  }
  return k;
}

ComplexInput to_input(const FilteredComplex& k) {
  ComplexInput in;
  in.vertex_names = k.vertex_names();
  for (int d = 0; d <= k.dim(); ++d) {
    for (std::size_t i = 0; i < k.count(d); ++i) {
      const Simplex& s = k.simplices(d)[i];
      if (d == k.dim()) in.simplices.push_back(s);
      if (k.level(d, i) < k.dim()) in.levels.emplace(s, k.level(d, i));
      if (k.ideal(d, i)) in.ideal_boundary.push_back(s);
    }
  }
  return in;
}

FilteredComplex without_filtration(const FilteredComplex& k) {
  ComplexInput in = to_input(k);
  in.levels.clear();
  return build_complex(in);
}

FilteredComplex without_ideal_boundary(const FilteredComplex& k) {
  ComplexInput in = to_input(k);
  in.ideal_boundary.clear();
  return build_complex(in);
}

FilteredComplex barycentric_subdivide(const FilteredComplex& k) {
  // One new vertex per simplex of k; ids are assigned dimension by dimension.
  std::vector<std::size_t> offset(static_cast<std::size_t>(k.dim()) + 2, 0);
  for (int d = 0; d <= k.dim(); ++d) offset[static_cast<std::size_t>(d) + 1] = offset[static_cast<std::size_t>(d)] + k.count(d);

  ComplexInput in;
  for (int d = 0; d <= k.dim(); ++d) {
    for (const auto& s : k.simplices(d)) {
      if (d == 0) {
        in.vertex_names.push_back(k.vertex_names()[static_cast<std::size_t>(s[0])]);
        continue;
      }
      std::string name = "b(";
      for (std::size_t j = 0; j < s.size(); ++j) name += (j ? "," : "") + k.vertex_names()[static_cast<std::size_t>(s[j])];
      in.vertex_names.push_back(name + ")");
    }
  }

  // Flags ending at each simplex, memoised per simplex.
  std::vector<std::vector<std::vector<Simplex>>> memo(static_cast<std::size_t>(k.dim()) + 1);
  for (int d = 0; d <= k.dim(); ++d) memo[static_cast<std::size_t>(d)].resize(k.count(d));
  std::function<const std::vector<Simplex>&(int, std::size_t)> flags = [&](int d, std::size_t i)
      -> const std::vector<Simplex>& {
    auto& slot = memo[static_cast<std::size_t>(d)][i];
    if (!slot.empty()) return slot;
    const int self = static_cast<int>(offset[static_cast<std::size_t>(d)] + i);
    slot.push_back({self});
    // Proper faces of every dimension, reached through facets without
    // repetition.
    std::set<std::pair<int, std::size_t>> seen;
    std::vector<std::pair<int, std::size_t>> stack{{d, i}};
    while (!stack.empty()) {
      auto [fd, fi] = stack.back();
      stack.pop_back();
      for (std::size_t f : k.facets(fd, fi)) {
        if (!seen.emplace(fd - 1, f).second) continue;
        stack.emplace_back(fd - 1, f);
        for (const auto& chain : flags(fd - 1, f)) {
          Simplex c = chain;
          c.push_back(self);
          slot.push_back(std::move(c));
        }
      }
    }
    return slot;
  };

  for (int d = 0; d <= k.dim(); ++d) {
    for (std::size_t i = 0; i < k.count(d); ++i) {
      for (const auto& chain : flags(d, i)) {
        Simplex s = chain;
        std::sort(s.begin(), s.end());
        if (d == k.dim()) in.simplices.push_back(s);
        if (k.level(d, i) < k.dim()) in.levels.emplace(s, k.level(d, i));
        if (k.ideal(d, i)) in.ideal_boundary.push_back(s);
      }
    }
  }
  return build_complex(in);
}

}  // namespace jacobi::ihom
