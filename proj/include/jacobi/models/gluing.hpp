#pragma once

#include <string>
#include <vector>

#include "jacobi/ihom/complex.hpp"

namespace jacobi::models {

// A rows x cols grid of vertices, each square split along one diagonal.
// Boundary positions run counterclockwise from (0, 0): along row 0, up the
// last column, back along the last row and down column 0, so there are
// 2 (rows + cols) - 4 of them.
struct Patch {
  std::string name;
  int rows = 3;
  int cols = 3;
};

// `count` consecutive boundary vertices of a patch starting at position
// `start`, walking counterclockwise (direction +1) or clockwise (-1).
struct BoundaryPath {
  std::string patch;
  int start = 0;
  int count = 2;
  int direction = 1;
};

struct Arc {
  std::string name;
  int vertex_count = 2;
  // A closed arc is a cycle: its last vertex is followed by the first.
  bool closed = false;
  // Optional names of the first and last vertex in the quotient.
  std::string head;
  std::string tail;
};

// Both sides are identified with the arc, vertex by vertex.
struct Gluing {
  std::string arc;
  BoundaryPath side_a;
  BoundaryPath side_b;
};

struct GluingSpec {
  std::vector<Patch> patches;
  std::vector<Arc> arcs;
  std::vector<Gluing> gluings;
  // Quotient vertex names forming V_0.
  std::vector<std::string> singular_vertices;
  std::vector<BoundaryPath> ideal_segments;
};

// Quotient complex of the patches, filtered by V_0 = singular_vertices and
// with the ideal segments as ideal boundary. Throws NonMatchingArcLengths
// when a side's vertex count differs from its arc, InvalidGluing for an arc
// glued other than once (to exactly two patch sides), for unknown names or
// when the quotient collapses or duplicates a triangle, and propagates
// build_complex errors.
ihom::FilteredComplex gluing_build(const GluingSpec& spec);

// Self-contained SVG of the patch adjacency graph: one node per patch, one
// labelled edge per gluing.
std::string gluing_svg(const GluingSpec& spec);

}  // namespace jacobi::models
