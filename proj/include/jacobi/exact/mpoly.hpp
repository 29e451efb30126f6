#pragma once

#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "jacobi/exact/rational.hpp"
#include "jacobi/exact/upoly.hpp"

namespace jacobi::exact {

using Exponents = std::vector<unsigned>;

// Graded lexicographic order, largest first: higher total degree wins,
// ties broken lexicographically in variable order.
struct GrlexGreater {
  bool operator()(const Exponents& a, const Exponents& b) const;
};

// Sparse multivariate polynomial over Q.
//
// The variable list is kept sorted by name, so two polynomials over the same
// set of names always share one exponent layout. Binary operations take the
// union of the operands' variable sets. Terms with zero coefficients are
// never stored.
class MPoly {
 public:
  using TermMap = std::map<Exponents, Rat, GrlexGreater>;

  MPoly() = default;
  explicit MPoly(const Rat& c);
  explicit MPoly(long c) : MPoly(Rat(c)) {}

  static MPoly variable(const std::string& name);
  static MPoly from_upoly(const UPoly& p);

  const std::vector<std::string>& variables() const { return vars_; }
  const TermMap& terms() const { return terms_; }
  std::size_t term_count() const { return terms_.size(); }

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  // -1 for zero.
  int total_degree() const;
  // 0 when the variable is absent; -1 for zero.
  int degree_in(std::string_view var) const;
  bool mentions(std::string_view var) const { return degree_in(var) > 0; }

  // Leading term under the grlex order; undefined on zero.
  const std::pair<const Exponents, Rat>& leading_term() const { return *terms_.begin(); }

  Rat coefficient(const std::map<std::string, unsigned>& monomial) const;
  Rat constant_term() const;

  // Values are looked up by variable name; missing variables are errors.
  Rat evaluate(const std::map<std::string, Rat>& values) const;
  // Values in the order of variables().
  Rat evaluate(std::span<const Rat> values) const;
  double evaluate(std::span<const double> values) const;

  MPoly partial(std::string_view var) const;

  // Simultaneous substitution var -> polynomial.
  MPoly substitute(const std::map<std::string, MPoly>& subs) const;
  // Substitute rational values for some variables; they disappear from the
  // variable list.
  MPoly specialize(const std::map<std::string, Rat>& values) const;

  // Coefficients with respect to `var`, index = power of var. Each entry
  // keeps the remaining variables.
  std::vector<MPoly> coefficients_in(std::string_view var) const;

  // Requires at most one variable (or a constant); the result is named
  // after `name`.
  UPoly to_upoly(const std::string& name) const;

  MPoly pow(unsigned k) const;

  MPoly& operator+=(const MPoly& o);
  MPoly& operator-=(const MPoly& o);
  MPoly& operator*=(const MPoly& o);
  MPoly& operator*=(const Rat& c);

  friend MPoly operator+(MPoly a, const MPoly& b) { return a += b; }
  friend MPoly operator-(MPoly a, const MPoly& b) { return a -= b; }
  friend MPoly operator*(const MPoly& a, const MPoly& b);
  friend MPoly operator*(MPoly a, const Rat& c) { return a *= c; }
  friend MPoly operator*(const Rat& c, MPoly a) { return a *= c; }
  friend MPoly operator-(MPoly a) { return a *= Rat(-1); }

  friend bool operator==(const MPoly& a, const MPoly& b);

  // Drops variables that no term uses.
  MPoly compacted() const;
  // Re-expresses the polynomial over a superset of its variables.
  MPoly with_variables(const std::vector<std::string>& vars) const;

  // Adds c * monomial; the exponent layout must match variables().
  void add_term(const Exponents& e, const Rat& c);

 private:
  std::vector<std::string> vars_;
  TermMap terms_;
};

// a / b when b divides a exactly; throws NotExactDivision otherwise and
// ZeroPolynomial for b == 0.
MPoly divide_exact(const MPoly& a, const MPoly& b);

// "c * x^a * y^b + ..." in grlex order with c written as n or n/d; "0" for
// the zero polynomial.
std::string to_string(const MPoly& p);

// Inverse of to_string; also accepts "-" separators, implicit
// coefficients ("x^2"), and "**" for powers. Throws ParseError.
MPoly parse_mpoly(std::string_view text);

}  // namespace jacobi::exact
