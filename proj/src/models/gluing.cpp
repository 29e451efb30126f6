#include "jacobi/models/gluing.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <map>
#include <numeric>
#include <set>

#include "jacobi/error.hpp"

namespace jacobi::models {

namespace {

class UnionFind {
 public:
  explicit UnionFind(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }
  std::size_t find(std::size_t a) {
    while (parent_[a] != a) a = parent_[a] = parent_[parent_[a]];
    return a;
  }
  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a != b) parent_[std::max(a, b)] = std::min(a, b);
  }

 private:
  std::vector<std::size_t> parent_;
};

int perimeter(const Patch& p) { return 2 * (p.rows + p.cols) - 4; }

// (row, col) of boundary position q, 0 <= q < perimeter.
std::pair<int, int> boundary_cell(const Patch& p, int q) {
  const int r = p.rows, c = p.cols;
  if (q < c) return {0, q};
  q -= c - 1;
  if (q < r) return {q, c - 1};
  q -= r - 1;
  if (q < c) return {r - 1, c - 1 - q};
  q -= c - 1;
  return {r - 1 - q, 0};
}

struct Layout {
  std::map<std::string, std::size_t> patch_index;
  std::vector<std::size_t> patch_offset;
  std::map<std::string, std::size_t> arc_index;
  std::vector<std::size_t> arc_offset;
  std::size_t total = 0;
};

Layout make_layout(const GluingSpec& spec) {
  Layout l;
  for (const auto& p : spec.patches) {
    if (p.rows < 2 || p.cols < 2)
      throw Error(ErrorCode::InvalidGluing, "patch " + p.name + " needs at least 2 x 2 vertices");
    if (!l.patch_index.emplace(p.name, l.patch_offset.size()).second)
      throw Error(ErrorCode::InvalidGluing, "duplicate patch " + p.name);
    l.patch_offset.push_back(l.total);
    l.total += static_cast<std::size_t>(p.rows * p.cols);
  }
  for (const auto& a : spec.arcs) {
    if (a.vertex_count < (a.closed ? 3 : 2))
      throw Error(ErrorCode::InvalidGluing, "arc " + a.name + " is too short");
    if (!l.arc_index.emplace(a.name, l.arc_offset.size()).second)
      throw Error(ErrorCode::InvalidGluing, "duplicate arc " + a.name);
    l.arc_offset.push_back(l.total);
    l.total += static_cast<std::size_t>(a.vertex_count);
  }
  return l;
}

// Node ids of the vertices along a boundary path.
std::vector<std::size_t> path_nodes(const GluingSpec& spec, const Layout& l, const BoundaryPath& b) {
  auto it = l.patch_index.find(b.patch);
  if (it == l.patch_index.end()) throw Error(ErrorCode::InvalidGluing, "unknown patch " + b.patch);
  const Patch& p = spec.patches[it->second];
  const int per = perimeter(p);
  if (b.count < 2 || b.count > per + 1 || (b.direction != 1 && b.direction != -1))
    throw Error(ErrorCode::InvalidGluing, "bad boundary path on " + b.patch);
  std::vector<std::size_t> out;
  for (int k = 0; k < b.count; ++k) {
    const int q = ((b.start + b.direction * k) % per + per) % per;
    const auto [r, c] = boundary_cell(p, q);
    out.push_back(l.patch_offset[it->second] + static_cast<std::size_t>(r * p.cols + c));
  }
  return out;
}

}  // namespace

ihom::FilteredComplex gluing_build(const GluingSpec& spec) {
  const Layout l = make_layout(spec);
  UnionFind uf(l.total);

  std::vector<int> uses(spec.arcs.size(), 0);
  for (const auto& g : spec.gluings) {
    auto it = l.arc_index.find(g.arc);
    if (it == l.arc_index.end()) throw Error(ErrorCode::InvalidGluing, "unknown arc " + g.arc);
    const Arc& arc = spec.arcs[it->second];
    ++uses[it->second];
    for (const auto* side : {&g.side_a, &g.side_b}) {
      const auto nodes = path_nodes(spec, l, *side);
      if (static_cast<int>(nodes.size()) != arc.vertex_count)
        throw Error(ErrorCode::NonMatchingArcLengths,
                    "arc " + arc.name + " has " + std::to_string(arc.vertex_count) +
                        " vertices but the path on " + side->patch + " has " +
                        std::to_string(nodes.size()));
      for (std::size_t k = 0; k < nodes.size(); ++k) uf.unite(nodes[k], l.arc_offset[it->second] + k);
    }
  }
  // Endpoints sharing a label are one vertex.
  std::map<std::string, std::size_t> labelled;
  for (std::size_t a = 0; a < spec.arcs.size(); ++a) {
    const Arc& arc = spec.arcs[a];
    const std::pair<const std::string*, std::size_t> ends[] = {
        {&arc.head, l.arc_offset[a]}, {&arc.tail, l.arc_offset[a] + static_cast<std::size_t>(arc.vertex_count - 1)}};
    for (const auto& [label, node] : ends)
      if (!label->empty()) uf.unite(labelled.try_emplace(*label, node).first->second, node);
  }
  for (std::size_t a = 0; a < spec.arcs.size(); ++a)
    if (uses[a] != 1)
      throw Error(ErrorCode::InvalidGluing,
                  "arc " + spec.arcs[a].name + " appears in " + std::to_string(uses[a]) +
                      " gluings; each arc joins exactly two patch sides");

  // Quotient vertex ids in order of first appearance; names prefer endpoint
  // labels, then arc positions, then patch cells.
  std::map<std::size_t, int> quotient;
  std::vector<std::string> names;
  std::vector<int> name_rank;
  auto qid = [&](std::size_t node) {
    auto [it, inserted] = quotient.try_emplace(uf.find(node), static_cast<int>(names.size()));
    if (inserted) {
      names.emplace_back();
      name_rank.push_back(3);
    }
    return it->second;
  };
  auto offer_name = [&](std::size_t node, std::string name, int rank) {
    const int v = qid(node);
    if (rank < name_rank[static_cast<std::size_t>(v)]) {
      names[static_cast<std::size_t>(v)] = std::move(name);
      name_rank[static_cast<std::size_t>(v)] = rank;
    }
  };

  ihom::ComplexInput in;
  std::set<ihom::Simplex> seen;
  for (std::size_t pi = 0; pi < spec.patches.size(); ++pi) {
    const Patch& p = spec.patches[pi];
    auto node = [&](int r, int c) { return l.patch_offset[pi] + static_cast<std::size_t>(r * p.cols + c); };
    for (int r = 0; r < p.rows; ++r)
      for (int c = 0; c < p.cols; ++c)
        offer_name(node(r, c), p.name + "(" + std::to_string(r) + "," + std::to_string(c) + ")", 2);
    for (int i = 0; i + 1 < p.rows; ++i) {
      for (int j = 0; j + 1 < p.cols; ++j) {
        const bool lower = 2 * i < p.rows - 2;
        const bool left = 2 * j < p.cols - 2;
        std::vector<std::array<std::size_t, 3>> tris;
        if (lower == left)
          tris = {{node(i, j), node(i, j + 1), node(i + 1, j + 1)},
                  {node(i, j), node(i + 1, j), node(i + 1, j + 1)}};
        else
          tris = {{node(i, j), node(i, j + 1), node(i + 1, j)},
                  {node(i, j + 1), node(i + 1, j), node(i + 1, j + 1)}};
        for (const auto& t : tris) {
          ihom::Simplex s{qid(t[0]), qid(t[1]), qid(t[2])};
          std::sort(s.begin(), s.end());
          if (std::adjacent_find(s.begin(), s.end()) != s.end())
            throw Error(ErrorCode::InvalidGluing, "gluing collapses a triangle of " + p.name);
          if (!seen.insert(s).second)
            throw Error(ErrorCode::InvalidGluing, "gluing duplicates a triangle of " + p.name);
          in.simplices.push_back(s);
        }
      }
    }
  }
  for (std::size_t a = 0; a < spec.arcs.size(); ++a) {
    const Arc& arc = spec.arcs[a];
    for (int k = 0; k < arc.vertex_count; ++k)
      offer_name(l.arc_offset[a] + static_cast<std::size_t>(k), arc.name + "[" + std::to_string(k) + "]", 1);
    if (!arc.head.empty()) offer_name(l.arc_offset[a], arc.head, 0);
    if (!arc.tail.empty())
      offer_name(l.arc_offset[a] + static_cast<std::size_t>(arc.vertex_count - 1), arc.tail, 0);
  }

  // Distinct arcs may share only endpoint vertices.
  std::map<int, std::size_t> owner;
  for (std::size_t a = 0; a < spec.arcs.size(); ++a) {
    const Arc& arc = spec.arcs[a];
    for (int k = 0; k < arc.vertex_count; ++k) {
      const bool endpoint = !arc.closed && (k == 0 || k == arc.vertex_count - 1);
      const int v = qid(l.arc_offset[a] + static_cast<std::size_t>(k));
      auto [it, inserted] = owner.try_emplace(v, a);
      if (!inserted && it->second != a && !endpoint)
        throw Error(ErrorCode::InvalidGluing,
                    "arcs " + spec.arcs[it->second].name + " and " + arc.name + " meet away from their ends");
    }
  }

  std::map<std::string, int> by_name;
  for (std::size_t v = 0; v < names.size(); ++v)
    if (!by_name.emplace(names[v], static_cast<int>(v)).second)
      throw Error(ErrorCode::InvalidGluing, "two quotient vertices are both named " + names[v]);
  for (const auto& s : spec.singular_vertices) {
    auto it = by_name.find(s);
    if (it == by_name.end()) throw Error(ErrorCode::InvalidGluing, "unknown singular vertex " + s);
    in.levels[{it->second}] = 0;
  }

  std::map<ihom::Simplex, int> edge_use;
  for (const auto& t : in.simplices)
    for (int k = 0; k < 3; ++k) {
      ihom::Simplex e;
      for (int j = 0; j < 3; ++j)
        if (j != k) e.push_back(t[static_cast<std::size_t>(j)]);
      ++edge_use[e];
    }
  for (const auto& [e, n] : edge_use)
    if (n > 2) throw Error(ErrorCode::InvalidGluing, "an edge lies on " + std::to_string(n) + " triangles");
  for (const auto& seg : spec.ideal_segments) {
    const auto nodes = path_nodes(spec, l, seg);
    for (std::size_t k = 0; k + 1 < nodes.size(); ++k) {
      ihom::Simplex e{qid(nodes[k]), qid(nodes[k + 1])};
      std::sort(e.begin(), e.end());
      if (edge_use[e] != 1)
        throw Error(ErrorCode::InvalidGluing, "ideal segment on " + seg.patch + " crosses a glued edge");
      in.ideal_boundary.push_back(e);
    }
  }

  in.vertex_names = std::move(names);
  return ihom::build_complex(in);
}

std::string gluing_svg(const GluingSpec& spec) {
  const double size = 480, cx = 240, cy = 240, ring = 160;
  const std::size_t n = spec.patches.size();
  std::map<std::string, std::pair<double, double>> pos;
  for (std::size_t i = 0; i < n; ++i) {
    const double a = 2 * M_PI * static_cast<double>(i) / static_cast<double>(std::max<std::size_t>(n, 1)) - M_PI / 2;
    pos[spec.patches[i].name] = {cx + ring * std::cos(a), cy + ring * std::sin(a)};
  }
  char buf[256];
  std::string out;
  std::snprintf(buf, sizeof buf,
                "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"%.0f\" height=\"%.0f\" "
                "viewBox=\"0 0 %.0f %.0f\">\n<rect width=\"100%%\" height=\"100%%\" fill=\"white\"/>\n",
                size, size, size, size);
  out += buf;
  for (const auto& g : spec.gluings) {
    const auto& [x1, y1] = pos.at(g.side_a.patch);
    const auto& [x2, y2] = pos.at(g.side_b.patch);
    std::snprintf(buf, sizeof buf,
                  "<line x1=\"%.1f\" y1=\"%.1f\" x2=\"%.1f\" y2=\"%.1f\" stroke=\"black\" stroke-width=\"2\"/>\n",
                  x1, y1, x2, y2);
    out += buf;
    std::snprintf(buf, sizeof buf,
                  "<text x=\"%.1f\" y=\"%.1f\" font-family=\"sans-serif\" font-size=\"14\" fill=\"darkred\">",
                  (x1 + x2) / 2 + 6, (y1 + y2) / 2 - 6);
    out += buf + g.arc + "</text>\n";
  }
  for (const auto& p : spec.patches) {
    const auto& [x, y] = pos.at(p.name);
    std::snprintf(buf, sizeof buf,
                  "<circle cx=\"%.1f\" cy=\"%.1f\" r=\"28\" fill=\"#dde8f5\" stroke=\"black\"/>\n"
                  "<text x=\"%.1f\" y=\"%.1f\" font-family=\"sans-serif\" font-size=\"14\" "
                  "text-anchor=\"middle\">",
                  x, y, x, y + 5);
    out += buf + p.name + "</text>\n";
  }
  if (!spec.singular_vertices.empty()) {
    std::string s;
    for (const auto& v : spec.singular_vertices) s += (s.empty() ? "" : ", ") + v;
    out += "<text x=\"12\" y=\"468\" font-family=\"sans-serif\" font-size=\"13\">V0 = {" + s + "}</text>\n";
  }
  out += "</svg>\n";
  return out;
}

}  // namespace jacobi::models
