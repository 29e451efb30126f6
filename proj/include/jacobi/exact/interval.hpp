#pragma once

#include <string>

#include "jacobi/exact/rational.hpp"

namespace jacobi::exact {

// Closed rational interval [lo, hi]. Root isolation reports open intervals
// in the same type; the endpoints of an isolating interval are never roots.
struct Interval {
  Rat lo;
  Rat hi;

  Interval() = default;
  Interval(const Rat& a, const Rat& b);
  static Interval point(const Rat& v) { return Interval(v, v); }

  Rat mid() const { return (lo + hi) / 2; }
  Rat width() const { return hi - lo; }
  bool contains(const Rat& v) const { return lo <= v && v <= hi; }
  bool contains_zero() const { return lo <= 0 && 0 <= hi; }
  bool contains(const Interval& o) const { return lo <= o.lo && o.hi <= hi; }
  bool contains_in_interior(const Interval& o) const { return lo < o.lo && o.hi < hi; }
  bool intersects(const Interval& o) const { return !(hi < o.lo || o.hi < lo); }
  // Smallest magnitude, 0 if the interval straddles zero.
  Rat mig() const;
  Rat mag() const;

  friend Interval operator+(const Interval& a, const Interval& b);
  friend Interval operator-(const Interval& a, const Interval& b);
  friend Interval operator-(const Interval& a);
  friend Interval operator*(const Interval& a, const Interval& b);
  friend Interval operator*(const Interval& a, const Rat& c);
  friend Interval operator*(const Rat& c, const Interval& a) { return a * c; }
  friend Interval operator+(const Interval& a, const Rat& c) { return Interval(a.lo + c, a.hi + c); }
  friend bool operator==(const Interval& a, const Interval& b) { return a.lo == b.lo && a.hi == b.hi; }
};

// Tight power: even exponents of a straddling interval start at 0.
Interval pow(const Interval& a, unsigned k);

// Convex hull.
Interval hull(const Interval& a, const Interval& b);

struct Box {
  Interval x;
  Interval y;
};

std::string to_string(const Interval& iv);

}  // namespace jacobi::exact
