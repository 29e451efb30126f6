#include "jacobi/exact/rational.hpp"

#include <cctype>
#include <cmath>
#include <limits>

#include "jacobi/error.hpp"

namespace jacobi {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::ZeroDegree: return "ZeroDegree";
    case ErrorCode::ZeroPolynomial: return "ZeroPolynomial";
    case ErrorCode::NotExactDivision: return "NotExactDivision";
    case ErrorCode::DuplicateAbscissa: return "DuplicateAbscissa";
    case ErrorCode::InsufficientSamples: return "InsufficientSamples";
    case ErrorCode::InsufficientDegreeBound: return "InsufficientDegreeBound";
    case ErrorCode::DegenerateElimination: return "DegenerateElimination";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::InvalidPerversity: return "InvalidPerversity";
    case ErrorCode::FiltrationNotClosed: return "FiltrationNotClosed";
    case ErrorCode::DimensionViolation: return "DimensionViolation";
    case ErrorCode::DanglingSimplex: return "DanglingSimplex";
    case ErrorCode::InvalidComplex: return "InvalidComplex";
    case ErrorCode::NonMatchingArcLengths: return "NonMatchingArcLengths";
    case ErrorCode::InvalidGluing: return "InvalidGluing";
    case ErrorCode::UnknownModel: return "UnknownModel";
  }
  return "Unknown";
}

}  // namespace jacobi

namespace jacobi::exact {

Rat make_rat(const Int& num, const Int& den) {
  if (den == 0) throw Error(ErrorCode::ParseError, "zero denominator");
  Rat r(num, den);
  r.canonicalize();
  return r;
}

Rat make_rat(long num, long den) { return make_rat(Int(num), Int(den)); }

Rat parse_rat(std::string_view text) {
  std::string s(text);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.pop_back();
  std::size_t start = 0;
  while (start < s.size() && std::isspace(static_cast<unsigned char>(s[start]))) ++start;
  s = s.substr(start);
  if (s.empty()) throw Error(ErrorCode::ParseError, "empty rational");

  auto is_integer = [](const std::string& t) {
    std::size_t i = (!t.empty() && (t[0] == '-' || t[0] == '+')) ? 1 : 0;
    if (i >= t.size()) return false;
    for (; i < t.size(); ++i)
      if (!std::isdigit(static_cast<unsigned char>(t[i]))) return false;
    return true;
  };
  auto to_int = [](std::string t) {
    if (!t.empty() && t[0] == '+') t.erase(0, 1);
    return Int(t, 10);
  };

  if (auto slash = s.find('/'); slash != std::string::npos) {
    std::string num = s.substr(0, slash), den = s.substr(slash + 1);
    if (!is_integer(num) || !is_integer(den))
      throw Error(ErrorCode::ParseError, "malformed rational '" + s + "'");
    return make_rat(to_int(num), to_int(den));
  }
  if (auto dot = s.find('.'); dot != std::string::npos) {
    std::string whole = s.substr(0, dot), frac = s.substr(dot + 1);
    bool negative = !whole.empty() && whole[0] == '-';
    if (whole.empty() || whole == "-" || whole == "+") whole += "0";
    if (!is_integer(whole) || (!frac.empty() && !is_integer(frac)) ||
        (!frac.empty() && (frac[0] == '-' || frac[0] == '+')))
      throw Error(ErrorCode::ParseError, "malformed decimal '" + s + "'");
    Int scale = 1;
    for (std::size_t i = 0; i < frac.size(); ++i) scale *= 10;
    Int w = to_int(whole);
    Int f = frac.empty() ? Int(0) : Int(frac, 10);
    Int num = abs(w) * scale + f;
    if (negative) num = -num;
    return make_rat(num, scale);
  }
  if (!is_integer(s)) throw Error(ErrorCode::ParseError, "malformed rational '" + s + "'");
  return Rat(to_int(s));
}

std::string to_string(const Rat& value) { return value.get_str(10); }

int sign(const Rat& value) { return sgn(value); }
int sign(const Int& value) { return sgn(value); }

Rat abs(const Rat& value) { return value < 0 ? Rat(-value) : value; }

double to_double(const Rat& value) {
  // mpq_get_d truncates and misbehaves on overflow; go through mpf instead.
  const long num_bits = static_cast<long>(mpz_sizeinbase(value.get_num_mpz_t(), 2));
  const long den_bits = static_cast<long>(mpz_sizeinbase(value.get_den_mpz_t(), 2));
  if (num_bits - den_bits > 1100)
    return sign(value) > 0 ? std::numeric_limits<double>::infinity()
                           : -std::numeric_limits<double>::infinity();
  if (den_bits - num_bits > 1100) return 0.0;
  mpf_class f(value, 128);
  return f.get_d();
}

Rat from_double(double value) {
  if (!std::isfinite(value)) throw Error(ErrorCode::ParseError, "non-finite double");
  Rat r;
  mpq_set_d(r.get_mpq_t(), value);
  return r;
}

namespace {

Rat simplest_nonnegative(const Rat& lo, const Rat& hi) {
  Int c;
  mpz_cdiv_q(c.get_mpz_t(), lo.get_num_mpz_t(), lo.get_den_mpz_t());
  if (Rat(c) <= hi) return Rat(c);
  Int n;
  mpz_fdiv_q(n.get_mpz_t(), lo.get_num_mpz_t(), lo.get_den_mpz_t());
  // lo and hi share the integer part n and neither is an integer.
  Rat inner = simplest_nonnegative(1 / (hi - n), 1 / (lo - n));
  return Rat(n) + 1 / inner;
}

}  // namespace

Rat simplest_between(const Rat& lo, const Rat& hi) {
  if (lo > hi) return simplest_between(hi, lo);
  if (lo <= 0 && hi >= 0) return Rat(0);
  if (hi < 0) return -simplest_nonnegative(-hi, -lo);
  return simplest_nonnegative(lo, hi);
}

Rat pow2(long k) {
  Int p = 1;
  mpz_mul_2exp(p.get_mpz_t(), p.get_mpz_t(), static_cast<unsigned long>(k < 0 ? -k : k));
  return k < 0 ? make_rat(Int(1), p) : Rat(p);
}

Rat pow(const Rat& base, unsigned long exponent) {
  Rat r;
  mpz_pow_ui(r.get_num_mpz_t(), base.get_num_mpz_t(), exponent);
  mpz_pow_ui(r.get_den_mpz_t(), base.get_den_mpz_t(), exponent);
  return r;  // already canonical: gcd(num^k, den^k) = 1
}

}  // namespace jacobi::exact
