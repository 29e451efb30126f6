#pragma once

#include <vector>

#include "jacobi/exact/interval.hpp"
#include "jacobi/properness/planar_map.hpp"

namespace jacobi::properness {

struct FiberReport {
  Target target;
  int count = 0;
  // One isolating box per certified real solution.
  std::vector<exact::Box> boxes;
  // False when some candidate box could not be decided; count is then a
  // lower bound.
  bool certified = false;
  int eliminant_x_degree = -1;
  int eliminant_y_degree = -1;
  int candidate_pairs = 0;
};

struct FiberOptions {
  bool swap_order = false;
  int max_refinements = 400;
};

// Real solutions of P = a, Q = b, counted by elimination in both directions
// and certified box by box. Throws DegenerateElimination.
FiberReport fiber_count(const PlanarMap& map, const Target& target, const FiberOptions& options = {});

}  // namespace jacobi::properness
