#include "jacobi/report/acceptance.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <sstream>
#include <stdexcept>

#include "jacobi/ihom/homology.hpp"
#include "jacobi/models/models.hpp"
#include "jacobi/pinchuk/pinchuk.hpp"
#include "jacobi/properness/fiber.hpp"
#include "jacobi/properness/probe.hpp"
#include "jacobi/properness/trace.hpp"

namespace jacobi::report {

namespace {

using exact::make_rat;
using exact::Rat;
using nlohmann::json;

class Stopwatch {
 public:
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

std::string rat(const Rat& r) { return exact::to_string(r); }

std::string join(const std::vector<int>& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + std::to_string(v[i]);
  return s + ")";
}

std::string fmt(double x) {
  std::ostringstream o;
  o.precision(3);
  o << x;
  return o.str();
}

CriterionResult jacobian_identity(const AcceptanceConfig& cfg) {
  CriterionResult r{1, "Jacobian identity", false, "", json::object(), 0, 10};
  Stopwatch clock;
  const auto map = pinchuk::build_map();
  const auto v = pinchuk::verify_jacobian_identity(map);
  const double identity_seconds = clock.seconds();
  const auto sample = pinchuk::sample_jacobian(map, 1000, cfg.seed);
  r.seconds = identity_seconds;
  auto readings = json::array();
  for (const auto& reading : v.readings)
    readings.push_back({{"formula", reading.formula},
                        {"residual_terms", reading.residual.term_count()},
                        {"holds", reading.holds}});
  r.data = {{"readings", readings},
            {"adopted", v.adopted},
            {"sample_points", sample.points},
            {"sample_positive", sample.positive},
            {"sample_minimum", rat(sample.minimum)}};
  r.pass = v.holds && v.residual().is_zero() && sample.points == 1000 && sample.positive == 1000 &&
           identity_seconds < r.limit_seconds;
  r.detail = std::string("residual ") + (v.residual().is_zero() ? "0" : "nonzero") + " for " +
             (v.adopted >= 0 ? v.readings[static_cast<std::size_t>(v.adopted)].formula : "no reading") +
             "; jac > 0 at " + std::to_string(sample.positive) + "/" + std::to_string(sample.points) +
             " points (min " + fmt(exact::to_double(sample.minimum)) + ")";
  return r;
}

CriterionResult degrees(const AcceptanceConfig&) {
  CriterionResult r{2, "Degrees of P and Q", false, "", json::object(), 0, 0};
  Stopwatch clock;
  const auto map = pinchuk::build_map();
  const int dp = map.P.total_degree(), dq = map.Q.total_degree();
  r.seconds = clock.seconds();
  r.data = {{"deg_P", dp}, {"deg_Q", dq}, {"terms_P", map.P.term_count()}, {"terms_Q", map.Q.term_count()}};
  r.pass = dp == 10 && dq == 25;
  r.detail = "deg P = " + std::to_string(dp) + ", deg Q = " + std::to_string(dq);
  return r;
}

CriterionResult curve_anchors(const AcceptanceConfig&) {
  CriterionResult r{3, "Asymptotic curve anchors", false, "", json::object(), 0, 0};
  Stopwatch clock;
  const auto curve = pinchuk::asymptotic_curve();
  const std::pair<Rat, std::pair<Rat, Rat>> anchors[] = {
      {Rat(0), {Rat(-1), make_rat(-163, 4)}},
      {Rat(1), {Rat(0), Rat(0)}},
      {Rat(-1), {Rat(0), Rat(208)}},
  };
  bool ok = true;
  auto rows = json::array();
  for (const auto& [s, expected] : anchors) {
    const auto got = pinchuk::curve_eval(curve, s);
    ok = ok && got == expected;
    rows.push_back({{"s", rat(s)}, {"p", rat(got.first)}, {"q", rat(got.second)}});
  }
  const auto checks = pinchuk::curve_checks(curve);
  std::vector<std::string> singular;
  for (const auto& s : checks.singular_params) singular.push_back(rat(s));
  r.seconds = clock.seconds();
  r.data = {{"anchors", rows},
            {"singular_params", singular},
            {"injective", checks.injective},
            {"certified", checks.certified}};
  r.pass = ok && checks.singular_params == std::vector<Rat>{Rat(0)} && checks.injective && checks.certified;
  r.detail = std::string("anchors ") + (ok ? "exact" : "wrong") + ", singular params {" +
             (singular.empty() ? "" : singular.front()) + (singular.size() > 1 ? ", ..." : "") +
             "}, injective " + (checks.injective ? "true" : "false");
  return r;
}

CriterionResult fibers(const AcceptanceConfig&) {
  CriterionResult r{4, "Fiber counts", false, "", json::object(), 0, 120};
  const auto pmap = properness::planar_map(pinchuk::build_map());
  const auto curve = pinchuk::asymptotic_curve();
  std::vector<std::pair<properness::Target, int>> cases = {
      {{Rat(0), Rat(0)}, 0},
      {{Rat(-1), make_rat(-163, 4)}, 0},
  };
  for (const Rat& s : {Rat(2), make_rat(1, 2), Rat(-2)}) {
    const auto [a, b] = pinchuk::curve_eval(curve, s);
    cases.push_back({{a, b}, 1});
  }
  bool ok = true;
  double worst = 0;
  auto rows = json::array();
  std::string counts;
  for (const auto& [target, expected] : cases) {
    Stopwatch clock;
    const auto fx = properness::fiber_count(pmap, target);
    const auto fy = properness::fiber_count(pmap, target, {.swap_order = true});
    worst = std::max(worst, clock.seconds());
    const bool row_ok = fx.certified && fy.certified && fx.count == expected && fy.count == expected;
    ok = ok && row_ok;
    rows.push_back({{"a", rat(target.a)},
                    {"b", rat(target.b)},
                    {"count", fx.count},
                    {"count_swapped", fy.count},
                    {"expected", expected},
                    {"certified", fx.certified && fy.certified},
                    {"eliminant_x_degree", fx.eliminant_x_degree},
                    {"eliminant_y_degree", fx.eliminant_y_degree}});
    counts += (counts.empty() ? "" : " ") + std::to_string(fx.count);
  }
  r.seconds = worst;
  r.data = {{"targets", rows}};
  r.pass = ok && worst <= r.limit_seconds;
  r.detail = "counts " + counts + " (expected 0 0 1 1 1), both elimination orders";
  return r;
}

CriterionResult probe(const AcceptanceConfig& cfg) {
  CriterionResult r{5, "Leading-coefficient probe", false, "", json::object(), 0, 900};
  Stopwatch clock;
  properness::LeadingCoeffProbe prober(properness::planar_map(pinchuk::build_map()), cfg.seed);
  const auto curve = pinchuk::asymptotic_curve();
  auto rows = json::array();
  int vanish = 0, nonzero = 0;
  auto run = [&](const properness::Target& t, const std::string& label) {
    const auto px = prober.probe(t, properness::Direction::X);
    const auto py = prober.probe(t, properness::Direction::Y);
    rows.push_back({{"point", label},
                    {"a", rat(t.a)},
                    {"b", rat(t.b)},
                    {"coefficient_x", rat(px.coefficient)},
                    {"coefficient_y", rat(py.coefficient)},
                    {"degree_x", px.degree},
                    {"degree_y", py.degree},
                    {"generic_degree_x", px.generic_degree},
                    {"generic_degree_y", py.generic_degree}});
    return std::pair{px.coefficient == 0, py.coefficient == 0};
  };
  for (const Rat& s : {Rat(0), Rat(1), Rat(2), Rat(-1), make_rat(1, 2)}) {
    const auto [a, b] = pinchuk::curve_eval(curve, s);
    const auto [zx, zy] = run({a, b}, "curve s=" + rat(s));
    vanish += zx || zy;
  }
  const std::pair<Rat, Rat> off[] = {{Rat(1), Rat(1)}, {Rat(2), Rat(-3)}, {Rat(-2), Rat(5)}};
  for (const auto& [a, b] : off) {
    const auto [zx, zy] = run({a, b}, "off-curve");
    nonzero += !zx && !zy;
  }
  r.seconds = clock.seconds();
  r.data = {{"probes", rows}};
  r.pass = vanish == 5 && nonzero == 3 && r.seconds <= r.limit_seconds;
  r.detail = "vanishes at " + std::to_string(vanish) + "/5 curve points, nonzero at " +
             std::to_string(nonzero) + "/3 off-curve points";
  return r;
}

CriterionResult tracer(const AcceptanceConfig&) {
  CriterionResult r{6, "Numeric tracer", false, "", json::object(), 0, 0};
  Stopwatch clock;
  const auto curve = pinchuk::asymptotic_curve();
  properness::TraceOptions po;  // radii 62.5, 250, 1000; bound 1e4
  const auto pc = properness::trace_asymptotic(properness::pinchuk_numeric_map(), po);
  double worst_p = 0;
  auto pts = json::array();
  for (const auto& p : pc.points) {
    const double d = properness::scaled_distance_to_curve(curve, p[0], p[1]);
    worst_p = std::max(worst_p, d);
    pts.push_back({{"alpha", p[0]}, {"beta", p[1]}, {"scaled_distance", d}});
  }
  // Raw channel images at the last radius, before extrapolation.
  double worst_raw = 0;
  if (!pc.channels_by_radius.empty())
    for (const auto& track : pc.tracks) {
      const auto& ch = pc.channels_by_radius.back()[track.back()];
      for (const auto& ray : ch.images)
        for (const auto& img : ray)
          worst_raw = std::max(worst_raw, properness::scaled_distance_to_curve(curve, img[0], img[1]));
    }

  properness::TraceOptions co;
  co.radii = {1e3, 1e4, 1e5};
  co.bound = 10;
  const auto cc = properness::trace_asymptotic(properness::cylinder_map(), co);
  double worst_c = 0;
  auto cpts = json::array();
  for (const auto& p : cc.points) {
    worst_c = std::max(worst_c, std::hypot(p[0], p[1]));
    cpts.push_back({{"alpha", p[0]}, {"beta", p[1]}, {"gamma", p[2]}});
  }
  r.seconds = clock.seconds();
  const bool p_ok = pc.status == properness::TraceStatus::Ok && !pc.points.empty() && worst_p <= 1e-2;
  const bool c_ok = cc.status == properness::TraceStatus::Ok && !cc.points.empty() && worst_c <= 1e-6;
  r.data = {{"pinchuk", {{"radii", po.radii},
                         {"bound", po.bound},
                         {"points", pts},
                         {"tracks", pc.tracks.size()},
                         {"worst_scaled_distance", worst_p},
                         {"worst_raw_image_distance", worst_raw}}},
            {"cylinder", {{"radii", co.radii}, {"bound", co.bound}, {"points", cpts}, {"worst_alpha_beta", worst_c}}}};
  r.pass = p_ok && c_ok;
  r.detail = "Pinchuk: " + std::to_string(pc.points.size()) + " cluster points, worst scaled distance " +
             fmt(worst_p) + " (tol 1e-2); cylinder: " + std::to_string(cc.points.size()) +
             " points, worst |(alpha, beta)| " + fmt(worst_c) + " (tol 1e-6)";
  return r;
}

struct Betti {
  std::vector<int> ordinary_c, ordinary_cl, ih_c, ih_cl;
  bool operator==(const Betti&) const = default;
};

Betti betti(const ihom::FilteredComplex& k) {
  const auto p = ihom::zero_perversity(k.dim());
  return {ihom::ordinary_betti(k, ihom::Support::Compact), ihom::ordinary_betti(k, ihom::Support::Closed),
          ihom::ih_betti(k, p, ihom::Support::Compact).betti, ihom::ih_betti(k, p, ihom::Support::Closed).betti};
}

json betti_json(const Betti& b) {
  return {{"ordinary_compact", b.ordinary_c},
          {"ordinary_closed", b.ordinary_cl},
          {"ih_compact", b.ih_c},
          {"ih_closed", b.ih_cl}};
}

CriterionResult ih_calibration(const AcceptanceConfig&) {
  CriterionResult r{7, "IH engine calibration", false, "", json::object(), 0, 60};
  Stopwatch clock;
  bool manifold_ok = true, subdivision_ok = true;
  json models = json::object();
  for (const auto& [name, k] : models::oracle_models()) {
    const Betti b = betti(k);
    const Betti bs = betti(ihom::barycentric_subdivide(k));
    subdivision_ok = subdivision_ok && b == bs;
    if (!k.has_singular_strata())
      for (const auto& p : ihom::all_perversities(k.dim()))
        for (auto s : {ihom::Support::Compact, ihom::Support::Closed})
          manifold_ok = manifold_ok && ihom::ih_betti(k, p, s).betti == ihom::ordinary_betti(k, s);
    models[name] = betti_json(b);
    models[name]["subdivision_invariant"] = b == bs;
  }
  const Betti pt = betti(models::pinched_torus());
  const Betti iv = betti(models::interval_line());
  const bool pinched_ok = pt.ih_c[1] == 0 && pt.ordinary_c[1] == 1;
  const bool interval_ok = iv.ih_c == std::vector<int>{1, 0} && iv.ih_cl == std::vector<int>{0, 1};
  r.seconds = clock.seconds();
  r.data = {{"models", models},
            {"manifold_ih_equals_ordinary", manifold_ok},
            {"pinched_torus_separates", pinched_ok},
            {"interval_borel_moore", interval_ok},
            {"subdivision_invariant", subdivision_ok}};
  r.pass = manifold_ok && pinched_ok && interval_ok && subdivision_ok && r.seconds < r.limit_seconds;
  r.detail = "pinched torus IH " + join(pt.ih_c) + " vs ordinary " + join(pt.ordinary_c) + "; interval compact " +
             join(iv.ih_c) + " closed " + join(iv.ih_cl) + "; manifolds " + (manifold_ok ? "agree" : "DIFFER") +
             "; subdivision " + (subdivision_ok ? "invariant" : "CHANGES betti");
  return r;
}

CriterionResult main_theorem(const AcceptanceConfig&) {
  CriterionResult r{8, "IH_1 of the Pinchuk model", false, "", json::object(), 0, 120};
  Stopwatch clock;
  const auto k = models::pinchuk_model();
  const auto ks = ihom::barycentric_subdivide(k);
  const auto zero = ihom::zero_perversity(2);
  const auto c = ihom::ih_betti(k, zero, ihom::Support::Compact);
  const auto cl = ihom::ih_betti(k, zero, ihom::Support::Closed);
  const auto cs = ihom::ih_betti(ks, zero, ihom::Support::Compact);
  const auto cls = ihom::ih_betti(ks, zero, ihom::Support::Closed);
  r.seconds = clock.seconds();
  r.data = {{"vertices", k.vertex_count()},
            {"triangles", k.count(2)},
            {"ih_compact", c.betti},
            {"ih_closed", cl.betti},
            {"subdivided_ih_compact", cs.betti},
            {"subdivided_ih_closed", cls.betti},
            {"ordinary_compact", ihom::ordinary_betti(k, ihom::Support::Compact)}};
  r.pass = c.betti[1] == 0 && cl.betti[1] == 0 && cs.betti[1] == 0 && cls.betti[1] == 0 &&
           r.seconds < r.limit_seconds;
  r.detail = "IH compact " + join(c.betti) + ", closed " + join(cl.betti) + "; subdivided " + join(cs.betti) +
             ", " + join(cls.betti);
  return r;
}

}  // namespace

CriterionResult run_criterion(int id, const AcceptanceConfig& config) {
  switch (id) {
    case 1: return jacobian_identity(config);
    case 2: return degrees(config);
    case 3: return curve_anchors(config);
    case 4: return fibers(config);
    case 5: return probe(config);
    case 6: return tracer(config);
    case 7: return ih_calibration(config);
    case 8: return main_theorem(config);
    default: throw std::invalid_argument("no acceptance criterion " + std::to_string(id));
  }
}

std::vector<CriterionResult> run_acceptance(const AcceptanceConfig& config) {
  std::vector<int> ids = config.only;
  if (ids.empty()) ids = {1, 2, 3, 4, 5, 6, 7, 8};
  std::vector<CriterionResult> out;
  for (int id : ids) out.push_back(run_criterion(id, config));
  return out;
}

json report_json(const std::vector<CriterionResult>& results, const AcceptanceConfig& config) {
  json rows = json::array();
  bool all = true;
  for (const auto& r : results) {
    rows.push_back({{"id", r.id}, {"name", r.name}, {"pass", r.pass}, {"detail", r.detail}, {"data", r.data}});
    all = all && r.pass;
  }
  return {{"seed", config.seed}, {"all_pass", all}, {"criteria", rows}};
}

std::string report_table(const std::vector<CriterionResult>& results, bool timings) {
  std::string out;
  for (const auto& r : results) {
    out += std::string(r.pass ? "PASS" : "FAIL") + "  [" + std::to_string(r.id) + "] " + r.name + ": " + r.detail;
    if (timings) {
      out += "  (" + fmt(r.seconds) + " s";
      if (r.limit_seconds > 0) out += ", limit " + fmt(r.limit_seconds) + " s";
      out += ")";
    }
    out += "\n";
  }
  return out;
}

}  // namespace jacobi::report
