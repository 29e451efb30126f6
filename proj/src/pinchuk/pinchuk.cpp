#include "jacobi/pinchuk/pinchuk.hpp"

#include <random>

#include "jacobi/exact/planar.hpp"
#include "jacobi/exact/resultant.hpp"
#include "jacobi/exact/roots.hpp"
#include "jacobi/parallel.hpp"

namespace jacobi::pinchuk {

using exact::make_rat;

PinchukMap build_map() {
  const MPoly x = MPoly::variable("x"), y = MPoly::variable("y"), one(1);
  PinchukMap m;
  m.t = x * y - one;
  const MPoly e = x * m.t + one;  // xt + 1
  m.h = m.t * e;
  m.f = e * e * (m.t * m.t + y);
  m.P = m.f + m.h;
  const MPoly& t = m.t;
  const MPoly& h = m.h;
  const MPoly& f = m.f;
  const MPoly h2 = h * h, h3 = h2 * h;
  m.Q = -(t * t) - Rat(6) * t * h * (h + one) - Rat(170) * f * h - Rat(91) * h2 - Rat(195) * f * h2 -
        Rat(69) * h3 - Rat(75) * f * h3 - make_rat(75, 4) * h3 * h;
  m.jac = m.P.partial("x") * m.Q.partial("y") - m.P.partial("y") * m.Q.partial("x");
  return m;
}

JacobianVerification verify_jacobian_identity(const PinchukMap& m) {
  const MPoly& t = m.t;
  const MPoly& h = m.h;
  const MPoly& f = m.f;
  const MPoly inner_a = t + f * (MPoly(13) + Rat(15) * h);
  const MPoly inner_b = t + Rat(13) * f + Rat(15) * h;
  JacobianVerification v;
  const std::pair<std::string, MPoly> candidates[] = {
      {"t^2 + (t + f*(13 + 15*h))^2 + f^2", t * t + inner_a * inner_a + f * f},
      {"t^2 + (t + 13*f + 15*h)^2 + f^2", t * t + inner_b * inner_b + f * f},
  };
  for (const auto& [formula, rhs] : candidates) {
    JacobianReading r;
    r.formula = formula;
    r.residual = m.jac - rhs;
    r.holds = r.residual.is_zero();
    if (r.holds && v.adopted < 0) v.adopted = static_cast<int>(v.readings.size());
    v.readings.push_back(std::move(r));
  }
  v.holds = v.adopted >= 0;
  return v;
}

PositivitySample sample_jacobian(const PinchukMap& m, std::size_t count, std::uint64_t seed, long range) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long> num(-range, range), den(1, range);
  std::vector<std::pair<Rat, Rat>> pts(count);
  for (auto& p : pts) {
    p.first = make_rat(num(rng), den(rng));
    p.second = make_rat(num(rng), den(rng));
  }
  // jac's variables are (x, y) in sorted order.
  const MPoly jac = m.jac.with_variables({"x", "y"});
  std::vector<Rat> values(count);
  parallel_for(count, [&](std::size_t i) {
    const Rat xy[2] = {pts[i].first, pts[i].second};
    values[i] = jac.evaluate(std::span<const Rat>(xy, 2));
  });
  PositivitySample s;
  s.points = count;
  for (std::size_t i = 0; i < count; ++i) {
    if (values[i] > 0) ++s.positive;
    if (i == 0 || values[i] < s.minimum) s.minimum = values[i];
  }
  return s;
}

std::pair<double, double> evaluate_numeric(double x, double y) {
  const double t = x * y - 1;
  const double e = x * t + 1;
  const double h = t * e;
  const double f = e * e * (t * t + y);
  const double h2 = h * h, h3 = h2 * h;
  const double P = f + h;
  const double Q = -t * t - 6 * t * h * (h + 1) - 170 * f * h - 91 * h2 - 195 * f * h2 - 69 * h3 - 75 * f * h3 -
                   18.75 * h3 * h;
  return {P, Q};
}

AsymptoticCurve asymptotic_curve() {
  AsymptoticCurve c;
  c.p = UPoly({Rat(-1), Rat(0), Rat(1)}, "s");
  c.q = UPoly({make_rat(-163, 4), Rat(0), make_rat(117, 2), Rat(-29), make_rat(345, 4), Rat(-75)}, "s");
  return c;
}

std::pair<Rat, Rat> curve_eval(const AsymptoticCurve& c, const Rat& s) { return {c.p.evaluate(s), c.q.evaluate(s)}; }

namespace {

// (r(s) - r(u)) / (s - u) as a polynomial in s and u.
MPoly divided_difference(const UPoly& r) {
  const MPoly s = MPoly::variable("s"), u = MPoly::variable("u");
  const MPoly rs = MPoly::from_upoly(r).substitute({{r.variable(), s}});
  const MPoly ru = MPoly::from_upoly(r).substitute({{r.variable(), u}});
  return exact::divide_exact(rs - ru, s - u);
}

}  // namespace

CurveReport curve_checks(const AsymptoticCurve& c) {
  CurveReport report;

  const UPoly dp = c.p.derivative(), dq = c.q.derivative();
  if (dp.is_zero() && dq.is_zero()) {
    // Constant parametrization: every parameter is singular.
    report.real_singular_count = -1;
    report.injective = false;
    return report;
  }
  const UPoly g = exact::gcd(dp, dq);
  if (g.degree() > 0) {
    report.singular_params = exact::rational_roots(g);
    report.real_singular_count = exact::sturm_count(g);
  }

  const MPoly Dp = divided_difference(c.p), Dq = divided_difference(c.q);
  if ((Dp.is_constant() && !Dp.is_zero()) || (Dq.is_constant() && !Dq.is_zero())) {
    report.injective = true;
    return report;
  }
  if (Dp.is_zero() || Dq.is_zero()) {
    report.injective = false;
    return report;
  }
  // One divided difference may be free of u (p linear, say) but not both.
  const MPoly& a = Dp.mentions("u") ? Dp : Dq;
  const MPoly& b = Dp.mentions("u") ? Dq : Dp;
  if (!b.mentions("u")) {
    // b depends on s alone and, by symmetry, on u alone: it is a constant.
    report.injective = true;
    return report;
  }
  // Dp and Dq are symmetric in (s, u), so Res_s equals Res_u with the
  // variable renamed and one root list serves both coordinates. A pair of
  // equal indices can only hold points of the diagonal s = u.
  const UPoly R = exact::eliminant(a, b, "u", "s");
  if (R.is_zero()) {
    report.injective = false;
    return report;
  }
  const exact::SturmSequence sturm(R);
  std::vector<exact::IsolatedRoot> roots;
  for (const auto& iv : exact::isolate_real_roots(sturm)) roots.push_back({&sturm, iv});
  const exact::BoxDecider decider(a, b, "s", "u");
  report.injective = true;
  for (std::size_t i = 0; i < roots.size(); ++i) {
    for (std::size_t j = 0; j < roots.size(); ++j) {
      if (i == j) continue;
      ++report.candidate_pairs;
      exact::IsolatedRoot si = roots[i], uj = roots[j];
      const auto verdict = decider.decide(si, uj, 400);
      if (verdict == exact::BoxVerdict::Certified) report.injective = false;
      if (verdict == exact::BoxVerdict::Undecided) report.certified = false;
    }
  }
  if (!report.certified) report.injective = false;
  return report;
}

}  // namespace jacobi::pinchuk
