#include "jacobi/exact/upoly.hpp"

#include <algorithm>

#include "jacobi/error.hpp"
#include "jacobi/exact/int_poly.hpp"

namespace jacobi::exact {

UPoly::UPoly(std::vector<Rat> coeffs, std::string variable)
    : coeffs_(std::move(coeffs)), variable_(std::move(variable)) {
  trim();
}

UPoly UPoly::constant(const Rat& c, std::string variable) {
  return UPoly(std::vector<Rat>{c}, std::move(variable));
}

UPoly UPoly::monomial(const Rat& c, unsigned degree, std::string variable) {
  std::vector<Rat> v(degree + 1);
  v[degree] = c;
  return UPoly(std::move(v), std::move(variable));
}

void UPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Rat UPoly::coeff(int k) const {
  if (k < 0 || k >= static_cast<int>(coeffs_.size())) return Rat(0);
  return coeffs_[static_cast<std::size_t>(k)];
}

Rat UPoly::leading() const { return coeffs_.empty() ? Rat(0) : coeffs_.back(); }

Rat UPoly::evaluate(const Rat& x) const {
  Rat acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

int UPoly::sign_at(const Rat& x) const {
  if (coeffs_.empty()) return 0;
  // Homogenised Horner over integers: sign(p(n/d)) = sign(sum c_i n^i d^(k-i)).
  const auto ints = primitive_integer_coeffs(*this);
  return int_poly_sign_at(ints, x);
}

double UPoly::evaluate(double x) const {
  double acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + to_double(*it);
  return acc;
}

UPoly UPoly::derivative() const {
  if (coeffs_.size() <= 1) return UPoly({}, variable_);
  std::vector<Rat> d(coeffs_.size() - 1);
  for (std::size_t k = 1; k < coeffs_.size(); ++k) d[k - 1] = coeffs_[k] * static_cast<long>(k);
  return UPoly(std::move(d), variable_);
}

UPoly UPoly::monic() const {
  if (is_zero()) return *this;
  UPoly r = *this;
  const Rat lc = leading();
  for (auto& c : r.coeffs_) c /= lc;
  return r;
}

UPoly& UPoly::operator+=(const UPoly& o) {
  if (coeffs_.size() < o.coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t k = 0; k < o.coeffs_.size(); ++k) coeffs_[k] += o.coeffs_[k];
  trim();
  return *this;
}

UPoly& UPoly::operator-=(const UPoly& o) {
  if (coeffs_.size() < o.coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t k = 0; k < o.coeffs_.size(); ++k) coeffs_[k] -= o.coeffs_[k];
  trim();
  return *this;
}

UPoly& UPoly::operator*=(const UPoly& o) {
  if (is_zero() || o.is_zero()) {
    coeffs_.clear();
    return *this;
  }
  std::vector<Rat> r(coeffs_.size() + o.coeffs_.size() - 1);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < o.coeffs_.size(); ++j) r[i + j] += coeffs_[i] * o.coeffs_[j];
  }
  coeffs_ = std::move(r);
  trim();
  return *this;
}

UPoly& UPoly::operator*=(const Rat& c) {
  if (c == 0) {
    coeffs_.clear();
    return *this;
  }
  for (auto& x : coeffs_) x *= c;
  return *this;
}

std::pair<UPoly, UPoly> divmod(const UPoly& a, const UPoly& b) {
  if (b.is_zero()) throw Error(ErrorCode::ZeroPolynomial, "division by the zero polynomial");
  std::vector<Rat> rem = a.coeffs();
  const int db = b.degree();
  if (a.degree() < db) return {UPoly({}, a.variable()), a};
  std::vector<Rat> quo(static_cast<std::size_t>(a.degree() - db + 1));
  const Rat lc = b.leading();
  for (int k = a.degree(); k >= db; --k) {
    const Rat& top = rem[static_cast<std::size_t>(k)];
    if (top == 0) continue;
    Rat q = top / lc;
    quo[static_cast<std::size_t>(k - db)] = q;
    for (int j = 0; j <= db; ++j)
      rem[static_cast<std::size_t>(k - db + j)] -= q * b.coeffs()[static_cast<std::size_t>(j)];
  }
  rem.resize(static_cast<std::size_t>(db));
  return {UPoly(std::move(quo), a.variable()), UPoly(std::move(rem), a.variable())};
}

UPoly gcd(const UPoly& a, const UPoly& b) {
  if (a.is_zero()) return b.monic();
  if (b.is_zero()) return a.monic();
  // Primitive remainder sequence over Z keeps coefficient growth in check.
  IntPoly u = to_int_poly(a), v = to_int_poly(b);
  if (u.size() < v.size()) std::swap(u, v);
  while (!v.empty()) {
    IntPoly r = int_pseudo_remainder(u, v);
    make_primitive(r);
    u = std::move(v);
    v = std::move(r);
  }
  std::vector<Rat> coeffs(u.begin(), u.end());
  return UPoly(std::move(coeffs), a.variable()).monic();
}

UPoly square_free_part(const UPoly& p) {
  if (p.is_zero()) throw Error(ErrorCode::ZeroPolynomial, "square-free part of zero");
  if (p.degree() == 0) return UPoly::constant(Rat(1), p.variable());
  const UPoly g = gcd(p, p.derivative());
  return divmod(p, g).first.monic();
}

std::vector<Int> primitive_integer_coeffs(const UPoly& p) { return to_int_poly(p); }

std::string to_string(const UPoly& p) {
  if (p.is_zero()) return "0";
  std::string out;
  for (int k = p.degree(); k >= 0; --k) {
    const Rat& c = p.coeffs()[static_cast<std::size_t>(k)];
    if (c == 0) continue;
    if (!out.empty()) out += " + ";
    out += to_string(c);
    if (k >= 1) out += " * " + p.variable();
    if (k >= 2) out += "^" + std::to_string(k);
  }
  return out;
}

}  // namespace jacobi::exact
