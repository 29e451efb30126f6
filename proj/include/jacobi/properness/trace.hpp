#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "jacobi/pinchuk/pinchuk.hpp"

namespace jacobi::properness {

using Point = std::vector<double>;

// A map R^n -> R^k evaluated in double precision.
struct NumericMap {
  std::string name;
  std::size_t source_dim = 2;
  std::size_t target_dim = 2;
  std::function<void(const double* in, double* out)> eval;
  // Target coordinates measured as v / (1 + |v|) when clustering.
  std::vector<bool> compress;
};

NumericMap pinchuk_numeric_map();
// (x, y, z) -> (x, y, (x^2 + y^2) z).
NumericMap cylinder_map();
NumericMap identity_numeric_map(std::size_t n);

struct TraceOptions {
  std::vector<double> radii{62.5, 250, 1000};
  std::size_t samples_per_radius = 4096;
  double bound = 1e4;
  double cluster_radius = 1e-2;
  // Positions along each channel ray, as fractions of the ray's extent.
  std::vector<double> fractions{0.0, 0.25, 0.5, 0.75, 0.9};
  std::size_t max_seeds = 64;
  // Channels at different radii match when their directions are this close
  // (radians).
  double match_angle = 0.05;
  std::uint64_t seed = 1;  // direction sampling in dimension >= 4
};

enum class TraceStatus { Ok, EmptyCloud };

// One bounded-image channel crossing the sphere of a given radius.
struct Channel {
  Point direction;  // unit vector of the |F| minimizer
  double min_norm = 0;
  // images[ray][fraction]; rays are +-T_i for the tangent basis T_i.
  std::vector<std::vector<Point>> images;
};

struct TraceCloud {
  TraceStatus status = TraceStatus::EmptyCloud;
  std::vector<double> radius_schedule;
  double bound = 0;
  // Cluster representatives (medoids) of the accumulation candidates.
  std::vector<Point> points;
  // Per channel at the last radius, the limit of its sampled images over
  // the last three radii (vector Aitken extrapolation), or the raw images
  // when the schedule has fewer than three radii. Samples whose differences
  // grow across radii have no limit and are dropped.
  std::vector<Point> candidates;
  std::vector<std::vector<Channel>> channels_by_radius;
  // For each channel that contributed candidates: the index of the matched
  // channel at every radius.
  std::vector<std::vector<std::size_t>> tracks;
};

TraceCloud trace_asymptotic(const NumericMap& map, const TraceOptions& options);

// Distance from (a, b) to the curve {(p(s), q(s))}, both measured in
// (alpha, beta / (1 + |beta|)).
double scaled_distance_to_curve(const pinchuk::AsymptoticCurve& curve, double a, double b);

}  // namespace jacobi::properness
