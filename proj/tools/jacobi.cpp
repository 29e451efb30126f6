// Command-line front end: jacobi <subcommand> [options]
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <set>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "jacobi/error.hpp"
#include "jacobi/ihom/homology.hpp"
#include "jacobi/ihom/io.hpp"
#include "jacobi/models/models.hpp"
#include "jacobi/pinchuk/pinchuk.hpp"
#include "jacobi/properness/fiber.hpp"
#include "jacobi/properness/probe.hpp"
#include "jacobi/properness/trace.hpp"
#include "jacobi/report/acceptance.hpp"
#include "svg_plot.hpp"

namespace {

using jacobi::exact::Rat;
using nlohmann::json;
namespace ex = jacobi::exact;
namespace pk = jacobi::pinchuk;
namespace pr = jacobi::properness;
namespace ih = jacobi::ihom;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

Rat rat_arg(const std::string& name, const std::string& text) {
  try {
    return ex::parse_rat(text);
  } catch (const jacobi::Error&) {
    throw UsageError("--" + name + ": not a rational number: " + text);
  }
}

std::string rs(const Rat& r) { return ex::to_string(r); }

std::string g17(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

double squash(double v) { return v / (1 + std::fabs(v)); }

void write_file(const std::string& path, const std::string& text) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw UsageError("cannot write " + path);
  f << text;
}

void emit(const json& j) { std::cout << j.dump(2) << "\n"; }

// --- verify-jacobian -------------------------------------------------------

struct JacobianArgs {
  std::size_t samples = 1000;
  std::uint64_t seed = 42;
};

int cmd_verify(const JacobianArgs& a) {
  const auto map = pk::build_map();
  const auto v = pk::verify_jacobian_identity(map);
  auto readings = json::array();
  for (const auto& r : v.readings)
    readings.push_back({{"formula", r.formula},
                        {"holds", r.holds},
                        {"residual_terms", r.residual.term_count()},
                        {"residual", r.residual.term_count() <= 20 ? ex::to_string(r.residual) : "(large)"}});
  json out = {{"holds", v.holds},
              {"adopted", v.adopted < 0 ? json(nullptr) : json(v.readings[static_cast<std::size_t>(v.adopted)].formula)},
              {"residual", ex::to_string(v.residual())},
              {"readings", readings},
              {"deg_P", map.P.total_degree()},
              {"deg_Q", map.Q.total_degree()}};
  if (a.samples > 0) {
    const auto s = pk::sample_jacobian(map, a.samples, a.seed);
    out["samples"] = {{"seed", a.seed}, {"points", s.points}, {"positive", s.positive}, {"minimum", rs(s.minimum)}};
  }
  emit(out);
  return v.holds ? 0 : 1;
}

// --- eval ------------------------------------------------------------------

int cmd_eval(const std::string& xs, const std::string& ys) {
  const Rat x = rat_arg("x", xs), y = rat_arg("y", ys);
  const auto map = pk::build_map();
  const std::map<std::string, Rat> at{{"x", x}, {"y", y}};
  emit({{"x", rs(x)},
        {"y", rs(y)},
        {"P", rs(map.P.evaluate(at))},
        {"Q", rs(map.Q.evaluate(at))},
        {"jac", rs(map.jac.evaluate(at))}});
  return 0;
}

// --- curve -----------------------------------------------------------------

struct CurveArgs {
  int samples = 100;
  std::string from = "-3", to = "3";
  std::string format = "json";
  std::string csv, svg;
};

int cmd_curve(const CurveArgs& a) {
  if (a.samples < 2) throw UsageError("--samples must be at least 2");
  const Rat lo = rat_arg("from", a.from), hi = rat_arg("to", a.to);
  if (!(lo < hi)) throw UsageError("--from must be below --to");
  const auto curve = pk::asymptotic_curve();
  std::set<Rat> params{Rat(0), Rat(1), Rat(-1)};
  for (int k = 0; k < a.samples; ++k) params.insert(lo + (hi - lo) * Rat(k) / Rat(a.samples - 1));

  std::string csv = "s,p,q,anchor\n";
  std::vector<std::pair<double, double>> line, anchors;
  auto anchor_rows = json::array();
  for (const auto& s : params) {
    const auto [p, q] = pk::curve_eval(curve, s);
    const bool anchor = s == 0 || s == 1 || s == -1;
    csv += g17(ex::to_double(s)) + "," + g17(ex::to_double(p)) + "," + g17(ex::to_double(q)) + "," +
           (anchor ? "1" : "0") + "\n";
    line.push_back({ex::to_double(p), squash(ex::to_double(q))});
    if (anchor) {
      anchors.push_back(line.back());
      anchor_rows.push_back({{"s", rs(s)}, {"p", rs(p)}, {"q", rs(q)}});
    }
  }
  if (!a.csv.empty()) write_file(a.csv, csv);
  if (!a.svg.empty()) {
    SvgPlot plot("asymptotic curve (p(s), q(s))", "alpha = p(s)", "beta / (1 + |beta|)");
    plot.polyline(line, "steelblue");
    plot.points(anchors, "darkred", 4);
    for (std::size_t i = 0; i < anchors.size(); ++i)
      plot.label(anchors[i].first, anchors[i].second, "s=" + anchor_rows[i]["s"].get<std::string>());
    write_file(a.svg, plot.render());
  }
  if (a.format == "csv") {
    std::cout << csv;
    return 0;
  }
  const auto checks = pk::curve_checks(curve);
  std::vector<std::string> singular;
  for (const auto& s : checks.singular_params) singular.push_back(rs(s));
  const auto map = pk::build_map();
  const auto v = pk::verify_jacobian_identity(map);
  emit({{"p", ex::to_string(curve.p)},
        {"q", ex::to_string(curve.q)},
        {"deg_P", map.P.total_degree()},
        {"deg_Q", map.Q.total_degree()},
        {"jacobian_residual_zero", v.holds},
        {"anchors", anchor_rows},
        {"singular_params", singular},
        {"injective", checks.injective},
        {"certified", checks.certified},
        {"samples", params.size()}});
  return 0;
}

// --- fiber / probe ---------------------------------------------------------

json interval_json(const ex::Interval& iv) { return {rs(iv.lo), rs(iv.hi)}; }

int cmd_fiber(const std::string& as, const std::string& bs, bool swap) {
  const pr::Target t{rat_arg("a", as), rat_arg("b", bs)};
  const auto r = pr::fiber_count(pr::planar_map(pk::build_map()), t, {.swap_order = swap});
  auto boxes = json::array();
  for (const auto& b : r.boxes) boxes.push_back({{"x", interval_json(b.x)}, {"y", interval_json(b.y)}});
  emit({{"a", rs(t.a)},
        {"b", rs(t.b)},
        {"count", r.count},
        {"certified", r.certified},
        {"boxes", boxes},
        {"eliminant_x_degree", r.eliminant_x_degree},
        {"eliminant_y_degree", r.eliminant_y_degree},
        {"candidate_pairs", r.candidate_pairs}});
  return r.certified ? 0 : 1;
}

struct ProbeArgs {
  std::string s, a, b, direction = "both";
  std::uint64_t seed = 1;
};

int cmd_probe(const ProbeArgs& p) {
  pr::Target t;
  json out;
  if (!p.s.empty()) {
    if (!p.a.empty() || !p.b.empty()) throw UsageError("give either --s or --a/--b");
    const Rat s = rat_arg("s", p.s);
    const auto [a, b] = pk::curve_eval(pk::asymptotic_curve(), s);
    t = {a, b};
    out["s"] = rs(s);
  } else {
    if (p.a.empty() || p.b.empty()) throw UsageError("give --s or both --a and --b");
    t = {rat_arg("a", p.a), rat_arg("b", p.b)};
  }
  if (p.direction != "x" && p.direction != "y" && p.direction != "both")
    throw UsageError("--direction must be x, y or both");
  out["a"] = rs(t.a);
  out["b"] = rs(t.b);
  pr::LeadingCoeffProbe prober(pr::planar_map(pk::build_map()), p.seed);
  bool vanishes = false;
  for (auto [name, dir] : {std::pair{"x", pr::Direction::X}, std::pair{"y", pr::Direction::Y}}) {
    if (p.direction != "both" && p.direction != name) continue;
    const auto r = prober.probe(t, dir);
    out[name] = {{"coefficient", rs(r.coefficient)},
                 {"vanishes", r.coefficient == 0},
                 {"degree", r.degree},
                 {"generic_degree", r.generic_degree},
                 {"degree_bound", r.degree_bound}};
    vanishes = vanishes || r.coefficient == 0;
  }
  out["vanishes"] = vanishes;
  emit(out);
  return 0;
}

// --- trace -----------------------------------------------------------------

struct TraceArgs {
  std::string map = "pinchuk";
  std::vector<double> radii;
  double bound = 0;
  std::size_t samples = 4096;
  std::uint64_t seed = 1;
  std::string format = "json";
  std::string csv, svg;
};

json point_json(const pr::Point& p) {
  json j = json::array();
  for (double v : p) j.push_back(v);
  return j;
}

int cmd_trace(const TraceArgs& a) {
  pr::NumericMap map;
  pr::TraceOptions opt;
  opt.samples_per_radius = a.samples;
  opt.seed = a.seed;
  if (a.map == "pinchuk") {
    map = pr::pinchuk_numeric_map();
  } else if (a.map == "cylinder") {
    map = pr::cylinder_map();
    opt.radii = {1e3, 1e4, 1e5};
    opt.bound = 10;
  } else if (a.map == "identity") {
    map = pr::identity_numeric_map(2);
    opt.radii = {1e2, 1e3};
    opt.bound = 10;
  } else {
    throw UsageError("--map must be pinchuk, cylinder or identity");
  }
  if (!a.radii.empty()) opt.radii = a.radii;
  if (a.bound > 0) opt.bound = a.bound;
  for (double r : opt.radii)
    if (!(r > 0)) throw UsageError("--radii must be positive");

  const auto cloud = pr::trace_asymptotic(map, opt);
  const bool pinchuk = a.map == "pinchuk";
  const auto curve = pk::asymptotic_curve();

  std::string csv = "kind";
  for (std::size_t i = 0; i < map.target_dim; ++i) csv += ",c" + std::to_string(i);
  csv += "\n";
  auto rows = [&](const std::vector<pr::Point>& pts, const char* kind) {
    for (const auto& p : pts) {
      csv += kind;
      for (double v : p) csv += "," + g17(v);
      csv += "\n";
    }
  };
  rows(cloud.points, "cluster");
  rows(cloud.candidates, "candidate");
  if (!a.csv.empty()) write_file(a.csv, csv);

  if (!a.svg.empty()) {
    SvgPlot plot("accumulation points of " + map.name, "alpha",
                 pinchuk ? "beta / (1 + |beta|)" : "beta");
    auto xy = [&](const pr::Point& p) {
      return std::pair{p[0], pinchuk ? squash(p[1]) : p[1]};
    };
    if (pinchuk) {
      std::vector<std::pair<double, double>> line;
      for (int k = 0; k <= 400; ++k) {
        const double s = -3 + 6.0 * k / 400;
        line.push_back({curve.p.evaluate(s), squash(curve.q.evaluate(s))});
      }
      plot.polyline(line, "steelblue");
    }
    std::vector<std::pair<double, double>> cand, pts;
    for (const auto& p : cloud.candidates) cand.push_back(xy(p));
    for (const auto& p : cloud.points) pts.push_back(xy(p));
    plot.points(cand, "orange", 2);
    plot.points(pts, "darkred", 4);
    write_file(a.svg, plot.render());
  }
  if (a.format == "csv") {
    std::cout << csv;
    return 0;
  }
  auto points = json::array();
  for (const auto& p : cloud.points) {
    json j = {{"point", point_json(p)}};
    if (pinchuk) j["scaled_distance"] = pr::scaled_distance_to_curve(curve, p[0], p[1]);
    points.push_back(j);
  }
  auto cands = json::array();
  for (const auto& p : cloud.candidates) cands.push_back(point_json(p));
  emit({{"map", map.name},
        {"status", cloud.status == pr::TraceStatus::Ok ? "ok" : "empty_cloud"},
        {"radii", cloud.radius_schedule},
        {"bound", cloud.bound},
        {"points", points},
        {"candidates", cands},
        {"tracks", cloud.tracks.size()}});
  return 0;
}

// --- ih / models -----------------------------------------------------------

ih::FilteredComplex load_model(const std::string& name) {
  const auto names = jacobi::models::model_names();
  if (std::find(names.begin(), names.end(), name) != names.end()) return jacobi::models::model_by_name(name);
  if (std::ifstream(name).good()) return ih::complex_from_file(name);
  return jacobi::models::model_by_name(name);  // throws UnknownModel
}

struct IhArgs {
  std::string model = "pinchuk", perversity = "zero", support = "c";
  bool subdivide = false;
  bool ordinary = false;
};

int cmd_ih(const IhArgs& a) {
  auto k = load_model(a.model);
  if (a.subdivide) k = ih::barycentric_subdivide(k);
  ih::Support s;
  try {
    s = ih::parse_support(a.support);
  } catch (const jacobi::Error& e) {
    throw UsageError(e.what());
  }
  const auto p = ih::parse_perversity(a.perversity, k.dim());
  const auto r = ih::ih_betti(k, p, s);
  json out = {{"model", a.model},
              {"dimension", k.dim()},
              {"perversity", ih::to_string(p)},
              {"support", ih::to_string(s)},
              {"subdivided", a.subdivide},
              {"betti", r.betti},
              {"ic_dims", r.ic_dims}};
  for (std::size_t i = 0; i < r.betti.size(); ++i) out["betti" + std::to_string(i)] = r.betti[i];
  if (a.ordinary) out["ordinary_betti"] = ih::ordinary_betti(k, s);
  std::vector<std::string> flagged;
  for (int v : k.diagnostics().flagged_vertices) flagged.push_back(k.vertex_names()[static_cast<std::size_t>(v)]);
  out["flagged_vertices"] = flagged;
  emit(out);
  return 0;
}

int cmd_models_list() {
  auto out = json::array();
  for (const auto& name : jacobi::models::model_names()) {
    const auto k = jacobi::models::model_by_name(name);
    out.push_back({{"name", name},
                   {"dimension", k.dim()},
                   {"vertices", k.vertex_count()},
                   {"top_simplices", k.count(k.dim())},
                   {"singular_strata", k.has_singular_strata()},
                   {"ideal_boundary", k.has_ideal_boundary()}});
  }
  emit(out);
  return 0;
}

int cmd_models_export(const std::string& name, const std::string& output, const std::string& svg) {
  const auto k = jacobi::models::model_by_name(name);
  if (!svg.empty()) {
    if (name != "pinchuk") throw UsageError("a gluing schematic exists only for the pinchuk model");
    write_file(svg, jacobi::models::gluing_svg(jacobi::models::pinchuk_spec()));
  }
  const std::string text = ih::complex_to_json(k).dump(2) + "\n";
  if (output.empty())
    std::cout << text;
  else
    write_file(output, text);
  return 0;
}

// --- report ----------------------------------------------------------------

struct ReportArgs {
  std::uint64_t seed = 42;
  std::string format = "json";
  std::string output;
  std::vector<int> only;
};

int cmd_report(const ReportArgs& a) {
  jacobi::report::AcceptanceConfig cfg;
  cfg.seed = a.seed;
  cfg.only = a.only;
  for (int id : cfg.only)
    if (id < 1 || id > 8) throw UsageError("--only takes criterion ids 1..8");
  const auto results = jacobi::report::run_acceptance(cfg);
  const std::string text = a.format == "table" ? jacobi::report::report_table(results, false)
                                               : jacobi::report::report_json(results, cfg).dump(2) + "\n";
  if (a.output.empty())
    std::cout << text;
  else
    write_file(a.output, text);
  for (const auto& r : results)
    if (!r.pass) return 1;
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact and numeric checks on the Pinchuk map and intersection homology models", "jacobi"};
  app.require_subcommand(1);

  JacobianArgs jac;
  auto* verify = app.add_subcommand("verify-jacobian", "expand P, Q and check the sum-of-squares Jacobian");
  verify->add_option("--samples", jac.samples, "exact positivity samples (0 to skip)");
  verify->add_option("--seed", jac.seed, "sampling seed");

  std::string ex_x, ex_y;
  auto* eval = app.add_subcommand("eval", "evaluate P, Q and the Jacobian exactly at a rational point");
  eval->add_option("--x", ex_x)->required();
  eval->add_option("--y", ex_y)->required();

  CurveArgs curve;
  auto* curve_cmd = app.add_subcommand("curve", "asymptotic curve samples, anchors and checks");
  curve_cmd->add_option("--samples", curve.samples, "evenly spaced parameters");
  curve_cmd->add_option("--from", curve.from);
  curve_cmd->add_option("--to", curve.to);
  curve_cmd->add_option("--format", curve.format)->check(CLI::IsMember({"json", "csv"}));
  curve_cmd->add_option("--csv", curve.csv, "write the sample CSV here");
  curve_cmd->add_option("--svg", curve.svg, "write an SVG plot here");

  std::string fa, fb;
  bool fswap = false;
  auto* fiber = app.add_subcommand("fiber", "count real solutions of P = a, Q = b");
  fiber->add_option("--a", fa)->required();
  fiber->add_option("--b", fb)->required();
  fiber->add_flag("--swap", fswap, "eliminate x first");

  ProbeArgs probe;
  auto* probe_cmd = app.add_subcommand("probe", "leading-coefficient non-properness probe");
  probe_cmd->add_option("--s", probe.s, "curve parameter");
  probe_cmd->add_option("--a", probe.a);
  probe_cmd->add_option("--b", probe.b);
  probe_cmd->add_option("--direction", probe.direction, "x, y or both");
  probe_cmd->add_option("--seed", probe.seed, "seed for the generic-degree targets");

  TraceArgs trace;
  auto* trace_cmd = app.add_subcommand("trace", "numeric accumulation points of F at infinity");
  trace_cmd->add_option("--map", trace.map, "pinchuk, cylinder or identity");
  trace_cmd->add_option("--radii", trace.radii)->delimiter(',');
  trace_cmd->add_option("--bound", trace.bound, "image norm bound M");
  trace_cmd->add_option("--samples", trace.samples, "samples per radius");
  trace_cmd->add_option("--seed", trace.seed);
  trace_cmd->add_option("--format", trace.format)->check(CLI::IsMember({"json", "csv"}));
  trace_cmd->add_option("--csv", trace.csv, "write the point cloud CSV here");
  trace_cmd->add_option("--svg", trace.svg, "write an SVG plot here");

  IhArgs iha;
  auto* ih_cmd = app.add_subcommand("ih", "intersection homology Betti numbers");
  ih_cmd->add_option("--model", iha.model, "bundled model name or JSON file");
  ih_cmd->add_option("--perversity", iha.perversity, "zero, top or p0,p1,...");
  ih_cmd->add_option("--support", iha.support, "c (compact) or cl (closed)");
  ih_cmd->add_flag("--subdivide", iha.subdivide, "one barycentric subdivision first");
  ih_cmd->add_flag("--ordinary", iha.ordinary, "also report ordinary Betti numbers");

  auto* models = app.add_subcommand("models", "bundled complexes");
  models->require_subcommand(1);
  auto* mlist = models->add_subcommand("list", "names and sizes");
  std::string mname, mout, msvg;
  auto* mexport = models->add_subcommand("export", "complex in the JSON interchange format");
  mexport->add_option("name", mname)->required();
  mexport->add_option("--output", mout);
  mexport->add_option("--svg", msvg, "gluing schematic (pinchuk only)");

  ReportArgs rep;
  auto* report = app.add_subcommand("report", "run the acceptance suite");
  report->add_option("--seed", rep.seed);
  report->add_option("--format", rep.format)->check(CLI::IsMember({"json", "table"}));
  report->add_option("--output", rep.output);
  report->add_option("--only", rep.only, "criterion ids")->delimiter(',');

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (verify->parsed()) return cmd_verify(jac);
    if (eval->parsed()) return cmd_eval(ex_x, ex_y);
    if (curve_cmd->parsed()) return cmd_curve(curve);
    if (fiber->parsed()) return cmd_fiber(fa, fb, fswap);
    if (probe_cmd->parsed()) return cmd_probe(probe);
    if (trace_cmd->parsed()) return cmd_trace(trace);
    if (ih_cmd->parsed()) return cmd_ih(iha);
    if (mlist->parsed()) return cmd_models_list();
    if (mexport->parsed()) return cmd_models_export(mname, mout, msvg);
    if (report->parsed()) return cmd_report(rep);
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const jacobi::Error& e) {
    std::cerr << json{{"error", std::string(jacobi::to_string(e.code()))},
                      {"message", e.what()},
                      {"index", e.index()}}.dump()
              << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << json{{"error", "internal"}, {"message", e.what()}}.dump() << "\n";
    return 1;
  }
  return 2;
}
