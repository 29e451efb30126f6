#include "jacobi/exact/interval.hpp"

#include <algorithm>

#include <stdexcept>

namespace jacobi::exact {

Interval::Interval(const Rat& a, const Rat& b) : lo(a), hi(b) {
  if (hi < lo) throw std::invalid_argument("interval with lo > hi");
}

Rat Interval::mig() const {
  if (contains_zero()) return Rat(0);
  return lo > 0 ? lo : -hi;
}

Rat Interval::mag() const { return std::max(abs(lo), abs(hi)); }

Interval operator+(const Interval& a, const Interval& b) { return Interval(a.lo + b.lo, a.hi + b.hi); }

Interval operator-(const Interval& a, const Interval& b) { return Interval(a.lo - b.hi, a.hi - b.lo); }

Interval operator-(const Interval& a) { return Interval(-a.hi, -a.lo); }

Interval operator*(const Interval& a, const Interval& b) {
  Rat p[4] = {a.lo * b.lo, a.lo * b.hi, a.hi * b.lo, a.hi * b.hi};
  auto [mn, mx] = std::minmax_element(std::begin(p), std::end(p));
  return Interval(*mn, *mx);
}

Interval operator*(const Interval& a, const Rat& c) {
  if (c >= 0) return Interval(a.lo * c, a.hi * c);
  return Interval(a.hi * c, a.lo * c);
}

Interval pow(const Interval& a, unsigned k) {
  if (k == 0) return Interval::point(Rat(1));
  const Rat pl = pow(a.lo, k), ph = pow(a.hi, k);
  if (k % 2 == 1) return Interval(pl, ph);
  if (a.contains_zero()) return Interval(Rat(0), std::max(pl, ph));
  return Interval(std::min(pl, ph), std::max(pl, ph));
}

Interval hull(const Interval& a, const Interval& b) {
  return Interval(std::min(a.lo, b.lo), std::max(a.hi, b.hi));
}

std::string to_string(const Interval& iv) { return "[" + to_string(iv.lo) + ", " + to_string(iv.hi) + "]"; }

}  // namespace jacobi::exact
