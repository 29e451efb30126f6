#pragma once

#include <cstdint>

#include "jacobi/properness/planar_map.hpp"

namespace jacobi::properness {

enum class Direction { X, Y };

struct ProbeResult {
  Direction direction = Direction::X;
  // Coefficient of the eliminant at the generic degree; zero means a root
  // escapes to infinity in this coordinate.
  Rat coefficient;
  int generic_degree = -1;
  int degree = -1;  // degree of the eliminant at this target
  int degree_bound = -1;
};

// Leading-coefficient test for non-properness. For direction X the
// eliminant is r(x) = Res_y(P - a, Q - b), for Y it is Res_x. The generic
// degree is the largest eliminant degree over a few seeded random targets,
// found once per direction. Throws InsufficientDegreeBound when the check
// nodes disagree with the interpolant.
class LeadingCoeffProbe {
 public:
  explicit LeadingCoeffProbe(PlanarMap map, std::uint64_t seed = 1, int generic_trials = 3);

  ProbeResult probe(const Target& target, Direction direction);
  int generic_degree(Direction direction);
  int degree_bound(Direction direction) const;

 private:
  exact::UPoly eliminant(const Target& target, Direction direction) const;

  PlanarMap map_;
  std::uint64_t seed_;
  int trials_;
  int generic_[2] = {-1, -1};
};

ProbeResult leading_coeff_probe(const PlanarMap& map, const Target& target, Direction direction);

}  // namespace jacobi::properness
