#pragma once

#include <string>

#include "jacobi/exact/mpoly.hpp"
#include "jacobi/pinchuk/pinchuk.hpp"

namespace jacobi::properness {

using exact::MPoly;
using exact::Rat;

// A polynomial map (x, y) -> (P, Q).
struct PlanarMap {
  MPoly P;
  MPoly Q;
  std::string x = "x";
  std::string y = "y";
};

PlanarMap planar_map(const pinchuk::PinchukMap& m);
PlanarMap identity_map();

struct Target {
  Rat a;
  Rat b;
};

}  // namespace jacobi::properness
