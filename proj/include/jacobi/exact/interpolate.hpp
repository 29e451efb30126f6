#pragma once

#include <utility>
#include <vector>

#include "jacobi/exact/rational.hpp"
#include "jacobi/exact/upoly.hpp"

namespace jacobi::exact {

using Sample = std::pair<Rat, Rat>;

// Polynomial of degree <= degree_bound through the first degree_bound + 1
// samples (Newton divided differences). Any further samples act as checks:
// a mismatch throws InsufficientDegreeBound. Also throws DuplicateAbscissa
// and InsufficientSamples.
UPoly interpolate(const std::vector<Sample>& samples, int degree_bound, const std::string& variable = "x");

// 0, 1, -1, 2, -2, ...
std::vector<Rat> interpolation_nodes(std::size_t count);

}  // namespace jacobi::exact
