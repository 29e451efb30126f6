#pragma once

#include <string>
#include <vector>

#include "jacobi/exact/interval.hpp"
#include "jacobi/exact/mpoly.hpp"
#include "jacobi/exact/roots.hpp"
#include "jacobi/exact/upoly.hpp"

namespace jacobi::exact {

// Nested Horner form of a polynomial in two named variables, for exact and
// interval evaluation.
class BivariateForm {
 public:
  BivariateForm() = default;
  BivariateForm(const MPoly& p, const std::string& x, const std::string& y);

  Rat evaluate(const Rat& x, const Rat& y) const;
  Interval evaluate(const Box& box) const;

 private:
  std::vector<UPoly> layers_;  // coefficient of y^k as a polynomial in x
};

// An isolated real root of an eliminant together with its Sturm sequence,
// so the interval can be narrowed on demand.
struct IsolatedRoot {
  const SturmSequence* sturm = nullptr;
  Interval interval;

  void bisect() { interval = bisect_root(*sturm, interval); }
};

enum class BoxVerdict { Refuted, Certified, Undecided };

// Decides whether the box x-root x y-root holds a common zero of f and g.
// Uniqueness inside the box is automatic because each side isolates one root
// of an eliminant, so certification only needs existence, which the
// Krawczyk test K(X) within X provides. Refutation uses the natural and the
// mean-value interval extensions.
class BoxDecider {
 public:
  BoxDecider(const MPoly& f, const MPoly& g, const std::string& x, const std::string& y);

  BoxVerdict test(const Box& box) const;
  // Tests, bisecting both roots between attempts, at most max_steps times.
  BoxVerdict decide(IsolatedRoot& xr, IsolatedRoot& yr, int max_steps) const;

 private:
  BivariateForm f_, g_, fx_, fy_, gx_, gy_;
};

struct PlanarOptions {
  // Solve with the two variables exchanged (x eliminated first, Horner
  // nesting flipped); the answer must not depend on it.
  bool swap_order = false;
  int max_refinements = 400;
};

struct PlanarSolution {
  Box box;
  bool certified = false;
};

struct PlanarResult {
  // Certified solutions, then any undecided candidate boxes.
  std::vector<PlanarSolution> solutions;
  int certified_count = 0;
  int undecided_count = 0;
  int candidate_pairs = 0;
  int refuted_pairs = 0;
  UPoly x_eliminant;  // Res_y(f, g)
  UPoly y_eliminant;  // Res_x(f, g)
  bool all_decided() const { return undecided_count == 0; }
};

// Real solutions of f = g = 0 in the plane (x, y). Throws
// DegenerateElimination if either eliminant is identically zero.
PlanarResult solve_planar(const MPoly& f, const MPoly& g, const std::string& x, const std::string& y,
                          const PlanarOptions& options = {});

}  // namespace jacobi::exact
