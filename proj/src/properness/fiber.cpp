#include "jacobi/properness/fiber.hpp"

#include "jacobi/exact/planar.hpp"

namespace jacobi::properness {

PlanarMap planar_map(const pinchuk::PinchukMap& m) { return PlanarMap{m.P, m.Q, "x", "y"}; }

PlanarMap identity_map() { return PlanarMap{MPoly::variable("x"), MPoly::variable("y"), "x", "y"}; }

FiberReport fiber_count(const PlanarMap& map, const Target& target, const FiberOptions& options) {
  exact::PlanarOptions po;
  po.swap_order = options.swap_order;
  po.max_refinements = options.max_refinements;
  const auto r = exact::solve_planar(map.P - MPoly(target.a), map.Q - MPoly(target.b), map.x, map.y, po);
  FiberReport report;
  report.target = target;
  for (const auto& s : r.solutions)
    if (s.certified) report.boxes.push_back(s.box);
  report.count = r.certified_count;
  report.certified = r.all_decided();
  report.eliminant_x_degree = r.x_eliminant.degree();
  report.eliminant_y_degree = r.y_eliminant.degree();
  report.candidate_pairs = r.candidate_pairs;
  return report;
}

}  // namespace jacobi::properness
