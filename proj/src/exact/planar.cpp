#include "jacobi/exact/planar.hpp"

#include <array>
#include <cmath>
#include <utility>

#include "jacobi/error.hpp"
#include "jacobi/exact/resultant.hpp"
#include "jacobi/parallel.hpp"

namespace jacobi::exact {

BivariateForm::BivariateForm(const MPoly& p, const std::string& x, const std::string& y) {
  for (const auto& layer : p.coefficients_in(y)) layers_.push_back(layer.to_upoly(x));
}

Rat BivariateForm::evaluate(const Rat& x, const Rat& y) const {
  Rat acc = 0;
  for (auto it = layers_.rbegin(); it != layers_.rend(); ++it) acc = acc * y + it->evaluate(x);
  return acc;
}

namespace {

Interval horner(const UPoly& p, const Interval& x) {
  Interval acc = Interval::point(Rat(0));
  for (int k = p.degree(); k >= 0; --k) acc = acc * x + p.coeff(k);
  return acc;
}

}  // namespace

Interval BivariateForm::evaluate(const Box& box) const {
  Interval acc = Interval::point(Rat(0));
  for (auto it = layers_.rbegin(); it != layers_.rend(); ++it) acc = acc * box.y + horner(*it, box.x);
  return acc;
}

BoxDecider::BoxDecider(const MPoly& f, const MPoly& g, const std::string& x, const std::string& y)
    : f_(f, x, y),
      g_(g, x, y),
      fx_(f.partial(x), x, y),
      fy_(f.partial(y), x, y),
      gx_(g.partial(x), x, y),
      gy_(g.partial(y), x, y) {}

namespace {

// Nearest-double inverse of a 2x2 matrix, returned as exact dyadics; falls
// back to the exact inverse when doubles overflow.
std::array<Rat, 4> approximate_inverse(const std::array<Rat, 4>& m) {
  const double a = to_double(m[0]), b = to_double(m[1]), c = to_double(m[2]), d = to_double(m[3]);
  const double det = a * d - b * c;
  if (std::isfinite(det) && det != 0) {
    const std::array<double, 4> inv{d / det, -b / det, -c / det, a / det};
    if (std::isfinite(inv[0]) && std::isfinite(inv[1]) && std::isfinite(inv[2]) && std::isfinite(inv[3]))
      return {from_double(inv[0]), from_double(inv[1]), from_double(inv[2]), from_double(inv[3])};
  }
  const Rat det_exact = m[0] * m[3] - m[1] * m[2];
  if (det_exact == 0) return {Rat(0), Rat(0), Rat(0), Rat(0)};
  return {m[3] / det_exact, -m[1] / det_exact, -m[2] / det_exact, m[0] / det_exact};
}

}  // namespace

BoxVerdict BoxDecider::test(const Box& box) const {
  const Interval F = f_.evaluate(box), G = g_.evaluate(box);
  if (!F.contains_zero() || !G.contains_zero()) return BoxVerdict::Refuted;

  const Rat mx = box.x.mid(), my = box.y.mid();
  const Rat fm = f_.evaluate(mx, my), gm = g_.evaluate(mx, my);
  const Interval dx = box.x + Rat(-mx), dy = box.y + Rat(-my);
  const Interval Fx = fx_.evaluate(box), Fy = fy_.evaluate(box);
  const Interval Gx = gx_.evaluate(box), Gy = gy_.evaluate(box);

  const Interval F_mv = Fx * dx + Fy * dy + fm;
  const Interval G_mv = Gx * dx + Gy * dy + gm;
  if (!F_mv.contains_zero() || !G_mv.contains_zero()) return BoxVerdict::Refuted;

  const std::array<Rat, 4> jm{fx_.evaluate(mx, my), fy_.evaluate(mx, my), gx_.evaluate(mx, my),
                              gy_.evaluate(mx, my)};
  const auto Y = approximate_inverse(jm);
  if (Y[0] == 0 && Y[1] == 0 && Y[2] == 0 && Y[3] == 0) return BoxVerdict::Undecided;

  // K = m - Y F(m) + (I - Y J(X)) (X - m)
  const Rat kx0 = mx - (Y[0] * fm + Y[1] * gm);
  const Rat ky0 = my - (Y[2] * fm + Y[3] * gm);
  const Interval one = Interval::point(Rat(1));
  const Interval a11 = one - (Y[0] * Fx + Y[1] * Gx);
  const Interval a12 = -(Y[0] * Fy + Y[1] * Gy);
  const Interval a21 = -(Y[2] * Fx + Y[3] * Gx);
  const Interval a22 = one - (Y[2] * Fy + Y[3] * Gy);
  const Interval kx = a11 * dx + a12 * dy + kx0;
  const Interval ky = a21 * dx + a22 * dy + ky0;
  if (box.x.contains(kx) && box.y.contains(ky)) return BoxVerdict::Certified;
  // A Krawczyk image disjoint from the box also rules out any zero.
  if (!box.x.intersects(kx) || !box.y.intersects(ky)) return BoxVerdict::Refuted;
  return BoxVerdict::Undecided;
}

BoxVerdict BoxDecider::decide(IsolatedRoot& xr, IsolatedRoot& yr, int max_steps) const {
  for (int step = 0;; ++step) {
    const BoxVerdict v = test(Box{xr.interval, yr.interval});
    if (v != BoxVerdict::Undecided || step >= max_steps) return v;
    xr.bisect();
    yr.bisect();
  }
}

namespace {

PlanarResult solve_ordered(const MPoly& f, const MPoly& g, const std::string& x, const std::string& y,
                           const PlanarOptions& options) {
  PlanarResult result;
  result.x_eliminant = eliminant(f, g, y, x);
  result.y_eliminant = eliminant(f, g, x, y);
  if (result.x_eliminant.is_zero() || result.y_eliminant.is_zero())
    throw Error(ErrorCode::DegenerateElimination, "an eliminant vanishes identically (common component)");

  const SturmSequence sx(result.x_eliminant), sy(result.y_eliminant);
  std::vector<IsolatedRoot> xs, ys;
  for (const auto& iv : isolate_real_roots(sx)) xs.push_back({&sx, iv});
  for (const auto& iv : isolate_real_roots(sy)) ys.push_back({&sy, iv});

  const BoxDecider decider(f, g, x, y);
  result.candidate_pairs = static_cast<int>(xs.size() * ys.size());
  // Each pair works on private copies of its two roots, so pairs can run
  // concurrently and the outcome does not depend on the order.
  std::vector<BoxVerdict> verdicts(xs.size() * ys.size());
  std::vector<Box> boxes(verdicts.size());
  parallel_for(verdicts.size(), [&](std::size_t k) {
    IsolatedRoot xr = xs[k / ys.size()], yr = ys[k % ys.size()];
    verdicts[k] = decider.decide(xr, yr, options.max_refinements);
    boxes[k] = Box{xr.interval, yr.interval};
  });

  std::vector<PlanarSolution> undecided;
  for (std::size_t k = 0; k < verdicts.size(); ++k) {
    switch (verdicts[k]) {
      case BoxVerdict::Refuted:
        ++result.refuted_pairs;
        break;
      case BoxVerdict::Certified:
        result.solutions.push_back({boxes[k], true});
        ++result.certified_count;
        break;
      case BoxVerdict::Undecided:
        undecided.push_back({boxes[k], false});
        ++result.undecided_count;
        break;
    }
  }
  result.solutions.insert(result.solutions.end(), undecided.begin(), undecided.end());
  return result;
}

}  // namespace

PlanarResult solve_planar(const MPoly& f, const MPoly& g, const std::string& x, const std::string& y,
                          const PlanarOptions& options) {
  if (!options.swap_order) return solve_ordered(f, g, x, y, options);
  // Run with the roles of the variables exchanged, then swap back.
  PlanarResult r = solve_ordered(f, g, y, x, options);
  std::swap(r.x_eliminant, r.y_eliminant);
  for (auto& s : r.solutions) std::swap(s.box.x, s.box.y);
  return r;
}

}  // namespace jacobi::exact
