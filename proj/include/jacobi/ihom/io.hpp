#pragma once

#include <string>

#include <json.hpp>

#include "jacobi/ihom/complex.hpp"

namespace jacobi::ihom {

// {"dimension", "vertices": [names], "maximal_simplices": [[ids]],
//  "filtration": [{"simplex": [ids], "level": l}] for simplices below level m,
//  "ideal_boundary": [[ids]] maximal ideal simplices}
nlohmann::json complex_to_json(const FilteredComplex& k);

// Throws ParseError on malformed documents and the build_complex errors on
// invalid content.
FilteredComplex complex_from_json(const nlohmann::json& j);
FilteredComplex complex_from_file(const std::string& path);

}  // namespace jacobi::ihom
