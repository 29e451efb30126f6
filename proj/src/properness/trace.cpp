#include "jacobi/properness/trace.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <optional>
#include <random>

#include "jacobi/parallel.hpp"

namespace jacobi::properness {

NumericMap pinchuk_numeric_map() {
  NumericMap m;
  m.name = "pinchuk";
  m.eval = [](const double* in, double* out) {
    const auto [p, q] = pinchuk::evaluate_numeric(in[0], in[1]);
    out[0] = p;
    out[1] = q;
  };
  m.compress = {false, true};
  return m;
}

NumericMap cylinder_map() {
  NumericMap m;
  m.name = "cylinder";
  m.source_dim = m.target_dim = 3;
  m.eval = [](const double* in, double* out) {
    out[0] = in[0];
    out[1] = in[1];
    out[2] = (in[0] * in[0] + in[1] * in[1]) * in[2];
  };
  return m;
}

NumericMap identity_numeric_map(std::size_t n) {
  NumericMap m;
  m.name = "identity";
  m.source_dim = m.target_dim = n;
  m.eval = [n](const double* in, double* out) { std::copy(in, in + n, out); };
  return m;
}

namespace {

double norm(const Point& v) {
  double s = 0;
  for (double c : v) s += c * c;
  return std::sqrt(s);
}

double dot(const Point& a, const Point& b) {
  double s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

Point normalized(Point v) {
  const double n = norm(v);
  for (auto& c : v) c /= n;
  return v;
}

// Orthonormal basis of the tangent space at the unit vector d, built from
// the coordinate axes other than d's dominant one, so the basis varies
// continuously along a channel.
std::vector<Point> tangent_basis(const Point& d) {
  const std::size_t n = d.size();
  if (n == 2) return {Point{-d[1], d[0]}};
  std::size_t skip = 0;
  for (std::size_t i = 1; i < n; ++i)
    if (std::abs(d[i]) > std::abs(d[skip])) skip = i;
  std::vector<Point> basis;
  for (std::size_t i = 0; i < n; ++i) {
    if (i == skip) continue;
    Point v(n, 0.0);
    v[i] = 1;
    for (const Point* u : {&d}) {
      const double c = dot(v, *u);
      for (std::size_t k = 0; k < n; ++k) v[k] -= c * (*u)[k];
    }
    for (const auto& u : basis) {
      const double c = dot(v, u);
      for (std::size_t k = 0; k < n; ++k) v[k] -= c * u[k];
    }
    basis.push_back(normalized(v));
  }
  return basis;
}

std::vector<Point> sample_directions(std::size_t n, std::size_t count, std::uint64_t seed) {
  std::vector<Point> dirs;
  dirs.reserve(count);
  if (n == 1) return {Point{1.0}, Point{-1.0}};
  if (n == 2) {
    for (std::size_t j = 0; j < count; ++j) {
      const double th = 2 * std::numbers::pi * static_cast<double>(j) / static_cast<double>(count);
      dirs.push_back({std::cos(th), std::sin(th)});
    }
  } else if (n == 3) {
    const double golden = std::numbers::pi * (3 - std::sqrt(5.0));
    for (std::size_t j = 0; j < count; ++j) {
      const double z = 1 - 2 * (static_cast<double>(j) + 0.5) / static_cast<double>(count);
      const double r = std::sqrt(std::max(0.0, 1 - z * z));
      const double ph = golden * static_cast<double>(j);
      dirs.push_back({r * std::cos(ph), r * std::sin(ph), z});
    }
  } else {
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> g;
    for (std::size_t j = 0; j < count; ++j) {
      Point v(n);
      for (auto& c : v) c = g(rng);
      dirs.push_back(normalized(v));
    }
  }
  return dirs;
}

class Sphere {
 public:
  Sphere(const NumericMap& map, double radius) : map_(map), radius_(radius) {}

  Point image(const Point& unit) const {
    Point src(unit.size());
    for (std::size_t i = 0; i < unit.size(); ++i) src[i] = radius_ * unit[i];
    Point out(map_.target_dim);
    map_.eval(src.data(), out.data());
    return out;
  }

  double image_norm(const Point& unit) const {
    const double v = norm(image(unit));
    return std::isfinite(v) ? v : std::numeric_limits<double>::infinity();
  }

  static Point moved(const Point& d, const Point& t, double tau) {
    Point v = d;
    for (std::size_t i = 0; i < v.size(); ++i) v[i] += tau * t[i];
    return normalized(v);
  }

 private:
  const NumericMap& map_;
  double radius_;
};

// Pattern search for a local minimum of log(1 + |F|) on the sphere, moving
// in tangent coordinates and rebasing after each accepted step.
Point minimize(const Sphere& sphere, Point d, double step) {
  double best = std::log1p(sphere.image_norm(d));
  auto basis = tangent_basis(d);
  const double max_step = step;
  for (int iter = 0; iter < 20000 && step > 1e-17; ++iter) {
    bool improved = false;
    for (const auto& t : basis) {
      for (double sgn : {1.0, -1.0}) {
        const Point c = Sphere::moved(d, t, sgn * step);
        const double v = std::log1p(sphere.image_norm(c));
        if (v < best) {
          best = v;
          d = c;
          improved = true;
          break;
        }
      }
      if (improved) break;
    }
    if (improved) {
      basis = tangent_basis(d);
      step = std::min(step * 2, max_step);
    } else {
      step /= 2;
    }
  }
  return d;
}

// Largest tau with |F| <= bound at the end of the ray d + tau t, found by
// doubling and then bisection.
double ray_extent(const Sphere& sphere, const Point& d, const Point& t, double bound) {
  double ok = 0, bad = 1e-15;
  while (sphere.image_norm(Sphere::moved(d, t, bad)) <= bound) {
    ok = bad;
    bad *= 2;
    if (bad > 1) return ok;
  }
  for (int k = 0; k < 100; ++k) {
    const double mid = 0.5 * (ok + bad);
    if (mid <= ok || mid >= bad) break;
    if (sphere.image_norm(Sphere::moved(d, t, mid)) <= bound)
      ok = mid;
    else
      bad = mid;
  }
  return ok;
}

// Minimizers a and b belong to one channel when they are close and the arc
// between them stays bounded.
bool same_channel(const Sphere& sphere, const Point& a, const Point& b, double bound, double max_angle) {
  if (dot(a, b) < std::cos(max_angle)) return false;
  for (int k = 1; k < 16; ++k) {
    const double w = k / 16.0;
    Point v(a.size());
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = (1 - w) * a[i] + w * b[i];
    if (sphere.image_norm(normalized(v)) > bound) return false;
  }
  return true;
}

std::vector<Channel> scan_radius(const NumericMap& map, double radius, const TraceOptions& o) {
  const Sphere sphere(map, radius);
  const auto dirs = sample_directions(map.source_dim, o.samples_per_radius, o.seed);
  std::vector<double> value(dirs.size());
  parallel_for(dirs.size(), [&](std::size_t j) { value[j] = std::log1p(sphere.image_norm(dirs[j])); });

  const std::size_t n = map.source_dim;
  const double spacing = n <= 2 ? 2 * std::numbers::pi / static_cast<double>(dirs.size())
                                : std::sqrt(4 * std::numbers::pi / static_cast<double>(dirs.size()));
  // Seeds: discrete local minima of log(1 + |F|), lowest first.
  std::vector<std::size_t> seeds;
  const double neighbour_cos = std::cos(2.5 * spacing);
  for (std::size_t j = 0; j < dirs.size(); ++j) {
    bool minimum = true;
    if (n <= 2) {
      const std::size_t m = dirs.size();
      minimum = value[j] <= value[(j + 1) % m] && value[j] <= value[(j + m - 1) % m];
    } else {
      for (std::size_t i = 0; i < dirs.size() && minimum; ++i)
        if (i != j && dot(dirs[i], dirs[j]) > neighbour_cos && value[i] < value[j]) minimum = false;
    }
    if (minimum) seeds.push_back(j);
  }
  std::stable_sort(seeds.begin(), seeds.end(), [&](std::size_t a, std::size_t b) { return value[a] < value[b]; });
  if (seeds.size() > o.max_seeds) seeds.resize(o.max_seeds);

  std::vector<Point> minima(seeds.size());
  parallel_for(seeds.size(), [&](std::size_t k) { minima[k] = minimize(sphere, dirs[seeds[k]], spacing); });

  std::vector<Channel> channels;
  for (const auto& d : minima) {
    const double v = sphere.image_norm(d);
    if (!(v <= o.bound)) continue;
    bool merged = false;
    for (auto& c : channels) {
      if (same_channel(sphere, c.direction, d, o.bound, 10 * spacing)) {
        if (v < c.min_norm) {
          c.direction = d;
          c.min_norm = v;
        }
        merged = true;
        break;
      }
    }
    if (!merged) channels.push_back(Channel{d, v, {}});
  }

  for (auto& c : channels) {
    for (const auto& t : tangent_basis(c.direction)) {
      for (double sgn : {1.0, -1.0}) {
        Point ray = t;
        for (auto& x : ray) x *= sgn;
        const double extent = ray_extent(sphere, c.direction, ray, o.bound);
        std::vector<Point> imgs;
        for (double f : o.fractions) imgs.push_back(sphere.image(Sphere::moved(c.direction, ray, f * extent)));
        c.images.push_back(std::move(imgs));
      }
    }
  }
  std::sort(channels.begin(), channels.end(),
            [](const Channel& a, const Channel& b) { return a.direction < b.direction; });
  return channels;
}

// Vector Aitken step on three terms of a sequence converging geometrically.
// Empty when the differences do not contract, since such a sequence has no
// limit to offer.
std::optional<Point> aitken(const Point& w0, const Point& w1, const Point& w2) {
  Point d1(w0.size()), d2(w0.size());
  for (std::size_t i = 0; i < w0.size(); ++i) {
    d1[i] = w1[i] - w0[i];
    d2[i] = w2[i] - w1[i];
  }
  const double n1 = norm(d1), n2 = norm(d2);
  if (n2 <= 1e-12 * (1 + norm(w2))) return w2;
  if (!(n2 < n1)) return std::nullopt;
  const double rho = std::min(n2 / n1, 0.9);
  Point out(w2.size());
  for (std::size_t i = 0; i < w2.size(); ++i) out[i] = w2[i] + d2[i] * rho / (1 - rho);
  return out;
}

Point compressed(const NumericMap& map, const Point& p) {
  Point c = p;
  for (std::size_t i = 0; i < c.size() && i < map.compress.size(); ++i)
    if (map.compress[i]) c[i] = c[i] / (1 + std::abs(c[i]));
  return c;
}

double distance(const Point& a, const Point& b) {
  double s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += (a[i] - b[i]) * (a[i] - b[i]);
  return std::sqrt(s);
}

}  // namespace

TraceCloud trace_asymptotic(const NumericMap& map, const TraceOptions& o) {
  TraceCloud cloud;
  cloud.radius_schedule = o.radii;
  cloud.bound = o.bound;
  for (double r : o.radii) cloud.channels_by_radius.push_back(scan_radius(map, r, o));
  if (cloud.channels_by_radius.empty() || cloud.channels_by_radius.back().empty()) return cloud;

  const std::size_t last = cloud.channels_by_radius.size() - 1;
  auto nearest = [&](std::size_t radius_index, const Point& d) -> std::size_t {
    const auto& list = cloud.channels_by_radius[radius_index];
    std::size_t best = list.size();
    for (std::size_t i = 0; i < list.size(); ++i)
      if (best == list.size() || dot(list[i].direction, d) > dot(list[best].direction, d)) best = i;
    if (best < list.size() && dot(list[best].direction, d) < std::cos(o.match_angle)) best = list.size();
    return best;
  };

  for (std::size_t ci = 0; ci < cloud.channels_by_radius[last].size(); ++ci) {
    const Channel& c = cloud.channels_by_radius[last][ci];
    std::vector<std::size_t> track(last + 1, 0);
    bool complete = true;
    for (std::size_t r = 0; r <= last; ++r) {
      track[r] = nearest(r, c.direction);
      complete = complete && track[r] < cloud.channels_by_radius[r].size();
    }
    const bool extrapolate = last >= 2 && complete;
    if (extrapolate) {
      // A channel whose smallest image norm keeps growing with the radius
      // is only bounded because the radius is still below the cutoff.
      const double m0 = cloud.channels_by_radius[last - 2][track[last - 2]].min_norm;
      const double m1 = cloud.channels_by_radius[last - 1][track[last - 1]].min_norm;
      const double step = std::abs(c.min_norm - m1);
      if (step > 1e-9 * (1 + c.min_norm) && step >= std::abs(m1 - m0)) continue;
    }
    bool kept = false;
    for (std::size_t ray = 0; ray < c.images.size(); ++ray) {
      for (std::size_t k = 0; k < c.images[ray].size(); ++k) {
        std::optional<Point> p = c.images[ray][k];
        if (extrapolate)
          p = aitken(cloud.channels_by_radius[last - 2][track[last - 2]].images[ray][k],
                     cloud.channels_by_radius[last - 1][track[last - 1]].images[ray][k], *p);
        if (p && std::isfinite(norm(*p)) && norm(*p) <= o.bound) {
          cloud.candidates.push_back(std::move(*p));
          kept = true;
        }
      }
    }
    if (kept && complete) cloud.tracks.push_back(std::move(track));
  }
  if (cloud.candidates.empty()) return cloud;
  cloud.status = TraceStatus::Ok;

  std::vector<std::vector<std::size_t>> clusters;
  std::vector<Point> scaled;
  for (const auto& p : cloud.candidates) scaled.push_back(compressed(map, p));
  for (std::size_t i = 0; i < scaled.size(); ++i) {
    bool placed = false;
    for (auto& cl : clusters) {
      if (distance(scaled[cl.front()], scaled[i]) <= o.cluster_radius) {
        cl.push_back(i);
        placed = true;
        break;
      }
    }
    if (!placed) clusters.push_back({i});
  }
  for (const auto& cl : clusters) {
    std::size_t medoid = cl.front();
    double best = std::numeric_limits<double>::infinity();
    for (std::size_t i : cl) {
      double s = 0;
      for (std::size_t j : cl) s += distance(scaled[i], scaled[j]);
      if (s < best) {
        best = s;
        medoid = i;
      }
    }
    cloud.points.push_back(cloud.candidates[medoid]);
  }
  return cloud;
}

double scaled_distance_to_curve(const pinchuk::AsymptoticCurve& curve, double a, double b) {
  auto squash = [](double v) { return v / (1 + std::abs(v)); };
  auto dist = [&](double s) {
    const double da = curve.p.evaluate(s) - a;
    const double db = squash(curve.q.evaluate(s)) - squash(b);
    return std::hypot(da, db);
  };
  // p(s) = s^2 - 1 pins |s| near sqrt(a + 1); scan a window around both
  // signs, then polish with golden-section search.
  const double smax = std::sqrt(std::max(0.0, a + 1)) + 2;
  const int n = 4000;
  double best_s = 0, best = dist(0);
  for (int k = 0; k <= n; ++k) {
    const double s = -smax + 2 * smax * k / n;
    const double v = dist(s);
    if (v < best) {
      best = v;
      best_s = s;
    }
  }
  double lo = best_s - 2 * smax / n, hi = best_s + 2 * smax / n;
  const double g = (std::sqrt(5.0) - 1) / 2;
  for (int it = 0; it < 100; ++it) {
    const double m1 = hi - g * (hi - lo), m2 = lo + g * (hi - lo);
    if (dist(m1) < dist(m2))
      hi = m2;
    else
      lo = m1;
  }
  return std::min(best, dist(0.5 * (lo + hi)));
}

}  // namespace jacobi::properness
