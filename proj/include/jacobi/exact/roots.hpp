#pragma once

#include <vector>

#include "jacobi/exact/int_poly.hpp"
#include "jacobi/exact/interval.hpp"
#include "jacobi/exact/upoly.hpp"

namespace jacobi::exact {

// Sturm sequence of the square-free part of a nonzero polynomial, stored
// as primitive integer polynomials (signed remainders rescaled by positive
// factors only).
class SturmSequence {
 public:
  // Throws ZeroPolynomial.
  explicit SturmSequence(const UPoly& p);

  // Distinct real roots on the whole line.
  int count() const;
  // Distinct real roots in the open interval (lo, hi).
  int count(const Interval& open) const;

  int variations_at(const Rat& x) const;
  int variations_at_infinity(int direction) const;

  // Sign of the square-free part at x.
  int sign_at(const Rat& x) const { return int_poly_sign_at(seq_.front(), x); }
  bool is_root(const Rat& x) const { return sign_at(x) == 0; }

  const IntPoly& square_free() const { return seq_.front(); }
  int degree() const { return static_cast<int>(seq_.front().size()) - 1; }

 private:
  std::vector<IntPoly> seq_;
};

int sturm_count(const UPoly& p);
int sturm_count(const UPoly& p, const Interval& open);

// Power of two strictly above the modulus of every complex root.
Rat root_bound(const UPoly& p);

// Sorted, pairwise-disjoint open intervals of width at most 1, one per
// distinct real root.
// Endpoints are never roots. Throws ZeroPolynomial.
std::vector<Interval> isolate_real_roots(const UPoly& p);
std::vector<Interval> isolate_real_roots(const SturmSequence& s);

// Halves an isolating interval of a root of s until its width is at most
// `width`. Endpoints stay non-roots.
Interval refine_root(const SturmSequence& s, Interval iv, const Rat& width);
// One bisection step.
Interval bisect_root(const SturmSequence& s, const Interval& iv);

// Distinct rational roots, sorted.
std::vector<Rat> rational_roots(const UPoly& p);

}  // namespace jacobi::exact
