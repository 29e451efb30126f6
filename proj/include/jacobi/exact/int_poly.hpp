#pragma once

#include <vector>

#include "jacobi/exact/rational.hpp"

namespace jacobi::exact {

class UPoly;

// Integer coefficient vector, degree 0 upward, no trailing zeros. Used where
// only the sign behaviour of a polynomial matters, so any positive rescaling
// is allowed.
using IntPoly = std::vector<Int>;

// Positive multiple of p with coprime integer coefficients.
IntPoly to_int_poly(const UPoly& p);

void trim(IntPoly& p);

// Divide by the positive content.
void make_primitive(IntPoly& p);

// |lc(v)|^(deg u - deg v + 1) * u mod v; the scaling factor is positive.
IntPoly int_pseudo_remainder(IntPoly u, const IntPoly& v);

IntPoly int_derivative(const IntPoly& p);

int int_poly_sign_at(const IntPoly& p, const Rat& x);

// Sign of p(x) as x -> +inf (direction > 0) or -inf (direction < 0).
int int_poly_sign_at_infinity(const IntPoly& p, int direction);

}  // namespace jacobi::exact
