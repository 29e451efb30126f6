#include "jacobi/ihom/io.hpp"

#include <algorithm>
#include <fstream>

#include "jacobi/error.hpp"

namespace jacobi::ihom {

namespace {

bool is_face(const Simplex& a, const Simplex& b) {
  return a.size() < b.size() && std::includes(b.begin(), b.end(), a.begin(), a.end());
}

// Simplices of the list not contained in another member.
std::vector<Simplex> maximal(const std::vector<Simplex>& all) {
  std::vector<Simplex> out;
  for (const auto& s : all)
    if (std::none_of(all.begin(), all.end(), [&](const Simplex& t) { return is_face(s, t); }))
      out.push_back(s);
  return out;
}

}  // namespace

nlohmann::json complex_to_json(const FilteredComplex& k) {
  nlohmann::json j;
  j["dimension"] = k.dim();
  j["vertices"] = k.vertex_names();
  std::vector<Simplex> all, ideal;
  auto filtration = nlohmann::json::array();
  for (int d = 0; d <= k.dim(); ++d)
    for (std::size_t i = 0; i < k.count(d); ++i) {
      const Simplex& s = k.simplices(d)[i];
      all.push_back(s);
      if (k.ideal(d, i)) ideal.push_back(s);
      if (k.level(d, i) < k.dim()) filtration.push_back({{"simplex", s}, {"level", k.level(d, i)}});
    }
  j["maximal_simplices"] = maximal(all);
  j["filtration"] = filtration;
  j["ideal_boundary"] = maximal(ideal);
  return j;
}

FilteredComplex complex_from_json(const nlohmann::json& j) {
  ComplexInput in;
  try {
    if (j.contains("vertices")) in.vertex_names = j.at("vertices").get<std::vector<std::string>>();
    in.simplices = j.at("maximal_simplices").get<std::vector<Simplex>>();
    if (j.contains("filtration"))
      for (const auto& f : j.at("filtration")) {
        Simplex s = f.at("simplex").get<Simplex>();
        std::sort(s.begin(), s.end());
        in.levels[s] = f.at("level").get<int>();
      }
    if (j.contains("ideal_boundary")) in.ideal_boundary = j.at("ideal_boundary").get<std::vector<Simplex>>();
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::ParseError, std::string("complex document: ") + e.what());
  }
  for (auto& s : in.simplices) std::sort(s.begin(), s.end());
  for (auto& s : in.ideal_boundary) std::sort(s.begin(), s.end());
  FilteredComplex k = build_complex(in);
  if (j.contains("dimension") && j.at("dimension") != k.dim())
    throw Error(ErrorCode::InvalidComplex, "declared dimension does not match the simplices");
  return k;
}

FilteredComplex complex_from_file(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw Error(ErrorCode::ParseError, "cannot read " + path);
  nlohmann::json j;
  try {
    f >> j;
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::ParseError, path + ": " + e.what());
  }
  return complex_from_json(j);
}

}  // namespace jacobi::ihom
