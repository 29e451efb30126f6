#pragma once

#include <string>
#include <utility>
#include <vector>

#include "jacobi/exact/rational.hpp"

namespace jacobi::exact {

// Dense univariate polynomial over Q, coefficients from degree 0 upward.
// The coefficient vector never ends in a zero; the zero polynomial has no
// coefficients at all.
class UPoly {
 public:
  UPoly() = default;
  explicit UPoly(std::vector<Rat> coeffs, std::string variable = "x");

  static UPoly constant(const Rat& c, std::string variable = "x");
  static UPoly monomial(const Rat& c, unsigned degree, std::string variable = "x");

  const std::string& variable() const { return variable_; }
  void set_variable(std::string v) { variable_ = std::move(v); }

  const std::vector<Rat>& coeffs() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }
  // -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  Rat coeff(int k) const;
  Rat leading() const;

  Rat evaluate(const Rat& x) const;
  int sign_at(const Rat& x) const;
  double evaluate(double x) const;

  UPoly derivative() const;
  UPoly monic() const;

  UPoly& operator+=(const UPoly& o);
  UPoly& operator-=(const UPoly& o);
  UPoly& operator*=(const UPoly& o);
  UPoly& operator*=(const Rat& c);

  friend UPoly operator+(UPoly a, const UPoly& b) { return a += b; }
  friend UPoly operator-(UPoly a, const UPoly& b) { return a -= b; }
  friend UPoly operator*(UPoly a, const UPoly& b) { return a *= b; }
  friend UPoly operator*(UPoly a, const Rat& c) { return a *= c; }
  friend UPoly operator-(UPoly a) { return a *= Rat(-1); }
  friend bool operator==(const UPoly& a, const UPoly& b) { return a.coeffs_ == b.coeffs_; }

 private:
  void trim();

  std::vector<Rat> coeffs_;
  std::string variable_ = "x";
};

// Quotient and remainder over Q. Throws ZeroPolynomial for b == 0.
std::pair<UPoly, UPoly> divmod(const UPoly& a, const UPoly& b);

// Monic gcd (zero only if both inputs are zero).
UPoly gcd(const UPoly& a, const UPoly& b);

// p / gcd(p, p'), made monic. Throws ZeroPolynomial.
UPoly square_free_part(const UPoly& p);

// Positive rational multiple of p with coprime integer coefficients.
std::vector<Int> primitive_integer_coeffs(const UPoly& p);

std::string to_string(const UPoly& p);

}  // namespace jacobi::exact
