#pragma once

#include <map>
#include <string>
#include <vector>

#include "jacobi/ihom/complex.hpp"
#include "jacobi/models/gluing.hpp"

namespace jacobi::models {

// Four 5 x 5 patches A1, A2, B1, B2 glued along C1 (f1 - L), C2 (L - O)
// and C3 (O - f3); every other boundary edge is ideal; V_0 = {L, O}.
GluingSpec pinchuk_spec();
ihom::FilteredComplex pinchuk_model();

// Segment with both ends ideal; vertex_count >= 2.
ihom::FilteredComplex interval_line(int vertex_count = 5);
ihom::FilteredComplex parabola_model();

struct EmbeddingSample {
  double x = 0;
  std::vector<double> image;
};

// (x^2, x / (1 + x^2), -x / (1 + x^2))
EmbeddingSample valette_embed(double x);

ihom::FilteredComplex circle();
ihom::FilteredComplex sphere();
ihom::FilteredComplex torus();
// Cylinder with `columns` >= 3 around and rows 0..rows (rows >= 2), both end
// circles coned to one vertex v; V_0 = {v}.
ihom::FilteredComplex pinched_torus(int columns = 4, int rows = 3);

std::map<std::string, ihom::FilteredComplex> oracle_models();

// Every bundled model by name: the oracles plus "pinchuk" and "parabola".
std::vector<std::string> model_names();
// Throws UnknownModel.
ihom::FilteredComplex model_by_name(const std::string& name);

}  // namespace jacobi::models
