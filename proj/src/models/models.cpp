#include "jacobi/models/models.hpp"

#include <algorithm>

#include "jacobi/error.hpp"

namespace jacobi::models {

namespace {

// Boundary positions on a 5 x 5 patch: (0,0)=0, (0,4)=4, (4,4)=8, (4,0)=12.
BoundaryPath path(const std::string& patch, int start, int count) { return {patch, start, count, 1}; }

}  // namespace

GluingSpec pinchuk_spec() {
  GluingSpec s;
  for (const char* name : {"A1", "A2", "B1", "B2"}) s.patches.push_back({name, 5, 5});
  s.arcs = {{"C1", 5, false, "f1", "L"}, {"C2", 5, false, "L", "O"}, {"C3", 5, false, "O", "f3"}};
  s.gluings = {
      // A2: f1 -> L along row 0, L -> O up the last column.
      {"C1", path("A2", 0, 5), path("B1", 0, 5)},
      {"C2", path("A2", 4, 5), path("B2", 0, 5)},
      // B1 carries C1 on row 0 and C3 (O -> f3) on its last row.
      {"C3", path("A1", 0, 5), path("B1", 8, 5)},
  };
  s.singular_vertices = {"L", "O"};
  // Everything not glued lies at infinity.
  s.ideal_segments = {
      path("A2", 8, 9),
      path("B1", 4, 5),
      path("B1", 12, 5),
      path("B2", 4, 13),
      path("A1", 4, 13),
  };
  return s;
}

ihom::FilteredComplex pinchuk_model() { return gluing_build(pinchuk_spec()); }

ihom::FilteredComplex interval_line(int vertex_count) {
  if (vertex_count < 2) throw Error(ErrorCode::InvalidComplex, "an interval needs two vertices");
  ihom::ComplexInput in;
  for (int i = 0; i + 1 < vertex_count; ++i) in.simplices.push_back({i, i + 1});
  in.ideal_boundary = {{0}, {vertex_count - 1}};
  return ihom::build_complex(in);
}

ihom::FilteredComplex parabola_model() { return interval_line(5); }

EmbeddingSample valette_embed(double x) {
  const double d = 1 + x * x;
  return {x, {x * x, x / d, -x / d}};
}

ihom::FilteredComplex circle() {
  ihom::ComplexInput in;
  in.simplices = {{0, 1}, {1, 2}, {0, 2}};
  return ihom::build_complex(in);
}

ihom::FilteredComplex sphere() {
  ihom::ComplexInput in;
  in.simplices = {{0, 1, 2}, {0, 1, 3}, {0, 2, 3}, {1, 2, 3}};
  return ihom::build_complex(in);
}

ihom::FilteredComplex torus() {
  ihom::ComplexInput in;
  auto v = [](int i, int j) { return ((i % 3 + 3) % 3) * 3 + (j % 3 + 3) % 3; };
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      in.simplices.push_back({v(i, j), v(i + 1, j), v(i + 1, j + 1)});
      in.simplices.push_back({v(i, j), v(i, j + 1), v(i + 1, j + 1)});
    }
  for (auto& s : in.simplices) std::sort(s.begin(), s.end());
  return ihom::build_complex(in);
}

ihom::FilteredComplex pinched_torus(int columns, int rows) {
  if (columns < 3 || rows < 2) throw Error(ErrorCode::InvalidComplex, "pinched torus too small");
  ihom::ComplexInput in;
  auto v = [&](int i, int j) { return i * columns + (j % columns); };
  const int apex = (rows + 1) * columns;
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < columns; ++j) {
      in.simplices.push_back({v(i, j), v(i + 1, j), v(i + 1, j + 1)});
      in.simplices.push_back({v(i, j), v(i, j + 1), v(i + 1, j + 1)});
    }
  for (int j = 0; j < columns; ++j) {
    in.simplices.push_back({v(0, j), v(0, j + 1), apex});
    in.simplices.push_back({v(rows, j), v(rows, j + 1), apex});
  }
  for (auto& s : in.simplices) std::sort(s.begin(), s.end());
  in.levels[{apex}] = 0;
  for (int i = 0; i < apex; ++i) in.vertex_names.push_back("v" + std::to_string(i));
  in.vertex_names.push_back("pinch");
  return ihom::build_complex(in);
}

std::map<std::string, ihom::FilteredComplex> oracle_models() {
  return {{"circle", circle()},
          {"sphere", sphere()},
          {"torus", torus()},
          {"pinched_torus", pinched_torus()},
          {"interval_line", interval_line()}};
}

std::vector<std::string> model_names() {
  return {"circle", "interval_line", "parabola", "pinched_torus", "pinchuk", "sphere", "torus"};
}

ihom::FilteredComplex model_by_name(const std::string& name) {
  if (name == "pinchuk") return pinchuk_model();
  if (name == "parabola") return parabola_model();
  if (name == "circle") return circle();
  if (name == "sphere") return sphere();
  if (name == "torus") return torus();
  if (name == "pinched_torus") return pinched_torus();
  if (name == "interval_line") return interval_line();
  throw Error(ErrorCode::UnknownModel, "no model named " + name);
}

}  // namespace jacobi::models
