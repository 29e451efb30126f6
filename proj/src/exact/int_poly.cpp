#include "jacobi/exact/int_poly.hpp"

#include "jacobi/exact/upoly.hpp"

namespace jacobi::exact {

void trim(IntPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

IntPoly to_int_poly(const UPoly& p) {
  Int lcm = 1;
  for (const auto& c : p.coeffs()) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), c.get_den_mpz_t());
  IntPoly out;
  out.reserve(p.coeffs().size());
  for (const auto& c : p.coeffs()) {
    Int v = lcm / c.get_den();
    v *= c.get_num();
    out.push_back(std::move(v));
  }
  make_primitive(out);
  return out;
}

void make_primitive(IntPoly& p) {
  trim(p);
  Int g = 0;
  for (const auto& c : p) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (g == 1) return;
  }
  if (g == 0 || g == 1) return;
  for (auto& c : p) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
}

IntPoly int_pseudo_remainder(IntPoly u, const IntPoly& v) {
  const std::size_t dv = v.size() - 1;
  const Int& lc = v.back();
  const int s = sgn(lc);
  const Int alc = abs(lc);
  while (!u.empty() && u.size() - 1 >= dv) {
    const std::size_t shift = u.size() - 1 - dv;
    const Int top = u.back();
    for (auto& c : u) c *= alc;
    for (std::size_t j = 0; j <= dv; ++j) {
      if (s > 0)
        u[shift + j] -= top * v[j];
      else
        u[shift + j] += top * v[j];
    }
    u.pop_back();
    trim(u);
  }
  return u;
}

IntPoly int_derivative(const IntPoly& p) {
  IntPoly d;
  for (std::size_t k = 1; k < p.size(); ++k) d.push_back(p[k] * static_cast<unsigned long>(k));
  trim(d);
  return d;
}

int int_poly_sign_at(const IntPoly& p, const Rat& x) {
  if (p.empty()) return 0;
  const Int& n = x.get_num();
  const Int& d = x.get_den();
  // sum_i c_i n^i d^(deg - i) by Horner: acc = acc * n + c_i * d^(deg-i)
  Int acc = p.back();
  Int dpow = 1;
  for (std::size_t k = p.size() - 1; k-- > 0;) {
    dpow *= d;
    acc *= n;
    acc += p[k] * dpow;
  }
  return sgn(acc);
}

int int_poly_sign_at_infinity(const IntPoly& p, int direction) {
  if (p.empty()) return 0;
  int s = sgn(p.back());
  if (direction < 0 && (p.size() - 1) % 2 == 1) s = -s;
  return s;
}

}  // namespace jacobi::exact
