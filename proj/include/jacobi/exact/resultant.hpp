#pragma once

#include <optional>
#include <string>

#include "jacobi/exact/mpoly.hpp"
#include "jacobi/exact/upoly.hpp"

namespace jacobi::exact {

// Res_var(f, g): Bareiss determinant of the Sylvester matrix, rows of f
// first. Throws ZeroPolynomial if f or g is 0 and ZeroDegree if either has
// degree 0 in var.
MPoly resultant(const MPoly& f, const MPoly& g, const std::string& var);

// deg_elim(g) * deg_keep(f) + deg_elim(f) * deg_keep(g).
int eliminant_degree_bound(const MPoly& f, const MPoly& g, const std::string& elim, const std::string& keep);

struct EliminantOptions {
  // Defaults to eliminant_degree_bound + pad.
  std::optional<int> degree_bound;
  int pad = 5;
  int check_nodes = 4;
};

// Res_elim(f, g) as a polynomial in `keep`, for f and g in the two
// variables keep and elim. Each node specialises keep, then takes an exact
// rational determinant of the Sylvester matrix built on the formal degrees
// in elim, so every sample is a value of the symbolic resultant. Samples
// run in parallel. One input may be free of elim; ZeroDegree only when both
// are.
UPoly eliminant(const MPoly& f, const MPoly& g, const std::string& elim, const std::string& keep,
                const EliminantOptions& options = {});

// One value of the above at keep = value.
Rat eliminant_at(const MPoly& f, const MPoly& g, const std::string& elim, const std::string& keep,
                 const Rat& value);

}  // namespace jacobi::exact
