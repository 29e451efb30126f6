#include "jacobi/exact/resultant.hpp"

#include "jacobi/error.hpp"
#include "jacobi/exact/interpolate.hpp"
#include "jacobi/exact/linalg.hpp"
#include "jacobi/parallel.hpp"

namespace jacobi::exact {

namespace {

void check_inputs(const MPoly& f, const MPoly& g, const std::string& var) {
  if (f.is_zero() || g.is_zero()) throw Error(ErrorCode::ZeroPolynomial, "resultant of the zero polynomial");
  if (f.degree_in(var) == 0 || g.degree_in(var) == 0)
    throw Error(ErrorCode::ZeroDegree, "resultant input has degree 0 in " + var);
}

// Eliminants also accept one input free of var: the Sylvester matrix then
// reduces to a power of that input.
void check_eliminant_inputs(const MPoly& f, const MPoly& g, const std::string& var) {
  if (f.is_zero() || g.is_zero()) throw Error(ErrorCode::ZeroPolynomial, "resultant of the zero polynomial");
  if (f.degree_in(var) == 0 && g.degree_in(var) == 0)
    throw Error(ErrorCode::ZeroDegree, "both inputs have degree 0 in " + var);
}

// Coefficients in var padded to the formal degree.
std::vector<Rat> rat_coefficients(const MPoly& p, const std::string& var, int formal_degree) {
  std::vector<Rat> out(static_cast<std::size_t>(formal_degree) + 1);
  const auto layers = p.coefficients_in(var);
  for (std::size_t k = 0; k < layers.size(); ++k) out[k] = layers[k].constant_term();
  return out;
}

}  // namespace

MPoly resultant(const MPoly& f, const MPoly& g, const std::string& var) {
  check_inputs(f, g, var);
  auto fc = f.coefficients_in(var);
  auto gc = g.coefficients_in(var);
  MPoly r = bareiss_determinant(sylvester_matrix(fc, gc));
  return r.compacted();
}

int eliminant_degree_bound(const MPoly& f, const MPoly& g, const std::string& elim, const std::string& keep) {
  return g.degree_in(elim) * f.degree_in(keep) + f.degree_in(elim) * g.degree_in(keep);
}

Rat eliminant_at(const MPoly& f, const MPoly& g, const std::string& elim, const std::string& keep,
                 const Rat& value) {
  check_eliminant_inputs(f, g, elim);
  const int df = f.degree_in(elim), dg = g.degree_in(elim);
  const MPoly fs = f.specialize({{keep, value}});
  const MPoly gs = g.specialize({{keep, value}});
  return bareiss_determinant(sylvester_matrix(rat_coefficients(fs, elim, df), rat_coefficients(gs, elim, dg)));
}

UPoly eliminant(const MPoly& f, const MPoly& g, const std::string& elim, const std::string& keep,
                const EliminantOptions& options) {
  check_eliminant_inputs(f, g, elim);
  for (const auto& p : {f, g})
    for (const auto& v : p.variables())
      if (v != elim && v != keep && p.mentions(v))
        throw Error(ErrorCode::ParseError, "eliminant input mentions a third variable " + v);
  const int bound = options.degree_bound.value_or(eliminant_degree_bound(f, g, elim, keep) + options.pad);
  const auto nodes = interpolation_nodes(static_cast<std::size_t>(bound + 1 + options.check_nodes));
  std::vector<Sample> samples(nodes.size());
  parallel_for(nodes.size(), [&](std::size_t i) {
    samples[i] = {nodes[i], eliminant_at(f, g, elim, keep, nodes[i])};
  });
  return interpolate(samples, bound, keep);
}

}  // namespace jacobi::exact
