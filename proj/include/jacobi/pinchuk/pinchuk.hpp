#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "jacobi/exact/mpoly.hpp"
#include "jacobi/exact/upoly.hpp"

namespace jacobi::pinchuk {

using exact::MPoly;
using exact::Rat;
using exact::UPoly;

struct PinchukMap {
  MPoly t, h, f;
  MPoly P, Q;
  MPoly jac;  // P_x Q_y - P_y Q_x
};

// Expanded map in the variables x, y.
PinchukMap build_map();

struct JacobianReading {
  std::string formula;
  MPoly residual;  // jac - formula
  bool holds = false;
};

struct JacobianVerification {
  bool holds = false;
  // Index into readings of the reading with zero residual, -1 if none.
  int adopted = -1;
  std::vector<JacobianReading> readings;
  const MPoly& residual() const { return readings[adopted < 0 ? 0 : static_cast<std::size_t>(adopted)].residual; }
};

// Tries both balanced readings of the sum-of-squares identity
//   t^2 + (t + f(13 + 15h))^2 + f^2   and   t^2 + (t + 13f + 15h)^2 + f^2.
JacobianVerification verify_jacobian_identity(const PinchukMap& map);

struct PositivitySample {
  std::size_t points = 0;
  std::size_t positive = 0;
  Rat minimum;  // smallest sampled value
};

// Exact jac at `count` seeded rational points with numerators in
// [-range, range] and denominators in [1, range].
PositivitySample sample_jacobian(const PinchukMap& map, std::size_t count, std::uint64_t seed, long range = 40);

// (P, Q)(x, y) in double precision through t, h and f, which avoids the
// cancellation of the expanded form far from the origin.
std::pair<double, double> evaluate_numeric(double x, double y);

struct AsymptoticCurve {
  UPoly p;  // s^2 - 1
  UPoly q;
};

AsymptoticCurve asymptotic_curve();

std::pair<Rat, Rat> curve_eval(const AsymptoticCurve& c, const Rat& s);

struct CurveReport {
  bool injective = false;
  // False if some off-diagonal candidate could not be settled.
  bool certified = true;
  std::vector<Rat> singular_params;
  // Real common roots of p' and q', rational or not.
  int real_singular_count = 0;
  int candidate_pairs = 0;
};

CurveReport curve_checks(const AsymptoticCurve& c);

}  // namespace jacobi::pinchuk
