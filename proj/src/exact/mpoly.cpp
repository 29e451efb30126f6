#include "jacobi/exact/mpoly.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>

#include "jacobi/error.hpp"

namespace jacobi::exact {

bool GrlexGreater::operator()(const Exponents& a, const Exponents& b) const {
  const unsigned da = std::accumulate(a.begin(), a.end(), 0u);
  const unsigned db = std::accumulate(b.begin(), b.end(), 0u);
  if (da != db) return da > db;
  return std::lexicographical_compare(b.begin(), b.end(), a.begin(), a.end());
}

namespace {

std::vector<std::string> merge_vars(const std::vector<std::string>& a,
                                    const std::vector<std::string>& b) {
  std::vector<std::string> out;
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

}  // namespace

MPoly::MPoly(const Rat& c) {
  if (c != 0) terms_.emplace(Exponents{}, c);
}

MPoly MPoly::variable(const std::string& name) {
  MPoly p;
  p.vars_ = {name};
  p.terms_.emplace(Exponents{1}, Rat(1));
  return p;
}

MPoly MPoly::from_upoly(const UPoly& u) {
  MPoly p;
  p.vars_ = {u.variable()};
  for (int k = 0; k <= u.degree(); ++k)
    if (u.coeff(k) != 0) p.terms_.emplace(Exponents{static_cast<unsigned>(k)}, u.coeff(k));
  return p;
}

bool MPoly::is_constant() const {
  return terms_.empty() ||
         (terms_.size() == 1 &&
          std::all_of(terms_.begin()->first.begin(), terms_.begin()->first.end(),
                      [](unsigned e) { return e == 0; }));
}

int MPoly::total_degree() const {
  if (terms_.empty()) return -1;
  const auto& e = terms_.begin()->first;
  return static_cast<int>(std::accumulate(e.begin(), e.end(), 0u));
}

int MPoly::degree_in(std::string_view var) const {
  if (terms_.empty()) return -1;
  auto it = std::find(vars_.begin(), vars_.end(), var);
  if (it == vars_.end()) return 0;
  const auto idx = static_cast<std::size_t>(it - vars_.begin());
  unsigned d = 0;
  for (const auto& [e, c] : terms_) d = std::max(d, e[idx]);
  return static_cast<int>(d);
}

Rat MPoly::coefficient(const std::map<std::string, unsigned>& monomial) const {
  Exponents e(vars_.size(), 0);
  for (const auto& [name, k] : monomial) {
    auto it = std::find(vars_.begin(), vars_.end(), name);
    if (it == vars_.end()) {
      if (k != 0) return Rat(0);
      continue;
    }
    e[static_cast<std::size_t>(it - vars_.begin())] = k;
  }
  auto t = terms_.find(e);
  return t == terms_.end() ? Rat(0) : t->second;
}

Rat MPoly::constant_term() const { return coefficient({}); }

Rat MPoly::evaluate(const std::map<std::string, Rat>& values) const {
  std::vector<Rat> v;
  v.reserve(vars_.size());
  for (const auto& name : vars_) {
    auto it = values.find(name);
    if (it == values.end()) throw Error(ErrorCode::ParseError, "no value for variable " + name);
    v.push_back(it->second);
  }
  return evaluate(std::span<const Rat>(v));
}

Rat MPoly::evaluate(std::span<const Rat> values) const {
  // Cache powers per variable; terms share them heavily.
  std::vector<std::vector<Rat>> powers(vars_.size());
  for (std::size_t i = 0; i < vars_.size(); ++i) {
    const unsigned d = static_cast<unsigned>(std::max(0, degree_in(vars_[i])));
    powers[i].resize(d + 1);
    powers[i][0] = 1;
    for (unsigned k = 1; k <= d; ++k) powers[i][k] = powers[i][k - 1] * values[i];
  }
  Rat acc = 0;
  for (const auto& [e, c] : terms_) {
    Rat t = c;
    for (std::size_t i = 0; i < e.size(); ++i)
      if (e[i]) t *= powers[i][e[i]];
    acc += t;
  }
  return acc;
}

double MPoly::evaluate(std::span<const double> values) const {
  double acc = 0;
  for (const auto& [e, c] : terms_) {
    double t = to_double(c);
    for (std::size_t i = 0; i < e.size(); ++i)
      for (unsigned k = 0; k < e[i]; ++k) t *= values[i];
    acc += t;
  }
  return acc;
}

MPoly MPoly::partial(std::string_view var) const {
  MPoly out;
  out.vars_ = vars_;
  auto it = std::find(vars_.begin(), vars_.end(), var);
  if (it == vars_.end()) return out;
  const auto idx = static_cast<std::size_t>(it - vars_.begin());
  for (const auto& [e, c] : terms_) {
    if (e[idx] == 0) continue;
    Exponents f = e;
    f[idx] -= 1;
    out.add_term(f, c * static_cast<unsigned long>(e[idx]));
  }
  return out;
}

MPoly MPoly::substitute(const std::map<std::string, MPoly>& subs) const {
  MPoly out;
  std::vector<std::vector<MPoly>> powers(vars_.size());
  for (const auto& [e, c] : terms_) {
    MPoly term(c);
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      auto it = subs.find(vars_[i]);
      if (it == subs.end()) {
        term *= MPoly::variable(vars_[i]).pow(e[i]);
        continue;
      }
      auto& cache = powers[i];
      if (cache.empty()) cache.push_back(MPoly(1));
      while (cache.size() <= e[i]) cache.push_back(cache.back() * it->second);
      term *= cache[e[i]];
    }
    out += term;
  }
  return out;
}

MPoly MPoly::specialize(const std::map<std::string, Rat>& values) const {
  std::vector<std::string> keep;
  std::vector<int> keep_index(vars_.size(), -1);
  for (std::size_t i = 0; i < vars_.size(); ++i) {
    if (!values.count(vars_[i])) {
      keep_index[i] = static_cast<int>(keep.size());
      keep.push_back(vars_[i]);
    }
  }
  std::vector<std::vector<Rat>> powers(vars_.size());
  MPoly out;
  out.vars_ = keep;
  for (const auto& [e, c] : terms_) {
    Exponents f(keep.size(), 0);
    Rat coeff = c;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (keep_index[i] >= 0) {
        f[static_cast<std::size_t>(keep_index[i])] = e[i];
      } else if (e[i]) {
        auto& cache = powers[i];
        if (cache.empty()) cache.push_back(Rat(1));
        while (cache.size() <= e[i]) cache.push_back(cache.back() * values.at(vars_[i]));
        coeff *= cache[e[i]];
      }
    }
    out.add_term(f, coeff);
  }
  return out;
}

std::vector<MPoly> MPoly::coefficients_in(std::string_view var) const {
  const int d = degree_in(var);
  if (d < 0) return {};
  std::vector<MPoly> out(static_cast<std::size_t>(d + 1));
  auto it = std::find(vars_.begin(), vars_.end(), var);
  if (it == vars_.end()) {
    out[0] = *this;
    return out;
  }
  const auto idx = static_cast<std::size_t>(it - vars_.begin());
  for (auto& p : out) p.vars_ = vars_;
  for (const auto& [e, c] : terms_) {
    Exponents f = e;
    f[idx] = 0;
    out[e[idx]].add_term(f, c);
  }
  return out;
}

UPoly MPoly::to_upoly(const std::string& name) const {
  const MPoly p = compacted();
  if (p.vars_.size() > 1) throw Error(ErrorCode::ParseError, "polynomial is not univariate");
  std::vector<Rat> coeffs(static_cast<std::size_t>(std::max(0, p.total_degree()) + 1));
  for (const auto& [e, c] : p.terms_) coeffs[e.empty() ? 0 : e[0]] = c;
  return UPoly(std::move(coeffs), name);
}

MPoly MPoly::pow(unsigned k) const {
  MPoly result(1);
  MPoly base = *this;
  while (k) {
    if (k & 1u) result *= base;
    k >>= 1u;
    if (k) base *= base;
  }
  return result;
}

MPoly MPoly::with_variables(const std::vector<std::string>& vars) const {
  if (vars == vars_) return *this;
  std::vector<std::size_t> map(vars_.size());
  for (std::size_t i = 0; i < vars_.size(); ++i) {
    auto it = std::find(vars.begin(), vars.end(), vars_[i]);
    map[i] = static_cast<std::size_t>(it - vars.begin());
  }
  MPoly out;
  out.vars_ = vars;
  for (const auto& [e, c] : terms_) {
    Exponents f(vars.size(), 0);
    for (std::size_t i = 0; i < e.size(); ++i) f[map[i]] = e[i];
    out.terms_.emplace(std::move(f), c);
  }
  return out;
}

MPoly MPoly::compacted() const {
  std::vector<std::string> used;
  for (const auto& v : vars_)
    if (degree_in(v) > 0) used.push_back(v);
  if (used.size() == vars_.size()) return *this;
  std::vector<std::size_t> idx;
  for (const auto& v : used)
    idx.push_back(static_cast<std::size_t>(std::find(vars_.begin(), vars_.end(), v) - vars_.begin()));
  MPoly out;
  out.vars_ = used;
  for (const auto& [e, c] : terms_) {
    Exponents f;
    for (auto i : idx) f.push_back(e[i]);
    out.terms_.emplace(std::move(f), c);
  }
  return out;
}

void MPoly::add_term(const Exponents& e, const Rat& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

MPoly& MPoly::operator+=(const MPoly& o) {
  if (o.vars_ != vars_) {
    auto vars = merge_vars(vars_, o.vars_);
    *this = with_variables(vars);
    MPoly other = o.with_variables(vars);
    for (const auto& [e, c] : other.terms_) add_term(e, c);
    return *this;
  }
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

MPoly& MPoly::operator-=(const MPoly& o) {
  if (o.vars_ != vars_) {
    auto vars = merge_vars(vars_, o.vars_);
    *this = with_variables(vars);
    MPoly other = o.with_variables(vars);
    for (const auto& [e, c] : other.terms_) add_term(e, -c);
    return *this;
  }
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

MPoly operator*(const MPoly& a, const MPoly& b) {
  if (a.is_zero() || b.is_zero()) return MPoly();
  const auto vars = a.vars_ == b.vars_ ? a.vars_ : merge_vars(a.vars_, b.vars_);
  const MPoly& aa = a.vars_ == vars ? a : a.with_variables(vars);
  MPoly bb_storage;
  const MPoly* bb = &b;
  if (b.vars_ != vars) {
    bb_storage = b.with_variables(vars);
    bb = &bb_storage;
  }
  MPoly out;
  out.vars_ = vars;
  Exponents e(vars.size());
  Rat prod;
  for (const auto& [ea, ca] : aa.terms_) {
    for (const auto& [eb, cb] : bb->terms_) {
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      mpq_mul(prod.get_mpq_t(), ca.get_mpq_t(), cb.get_mpq_t());
      out.add_term(e, prod);
    }
  }
  return out;
}

MPoly& MPoly::operator*=(const MPoly& o) {
  *this = *this * o;
  return *this;
}

MPoly& MPoly::operator*=(const Rat& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, v] : terms_) v *= c;
  return *this;
}

bool operator==(const MPoly& a, const MPoly& b) {
  const MPoly ca = a.compacted(), cb = b.compacted();
  if (ca.is_zero() || cb.is_zero()) return ca.is_zero() && cb.is_zero();
  return ca.vars_ == cb.vars_ && ca.terms_ == cb.terms_;
}

MPoly divide_exact(const MPoly& a, const MPoly& b) {
  if (b.is_zero()) throw Error(ErrorCode::ZeroPolynomial, "division by the zero polynomial");
  if (a.is_zero()) return MPoly();
  const auto vars = merge_vars(a.variables(), b.variables());
  MPoly rem = a.with_variables(vars);
  const MPoly div = b.with_variables(vars);
  const auto& [lead_e, lead_c] = div.leading_term();
  MPoly quo = MPoly(0).with_variables(vars);
  Exponents e(vars.size());
  while (!rem.is_zero()) {
    const auto& [re, rc] = rem.leading_term();
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (re[i] < lead_e[i]) throw Error(ErrorCode::NotExactDivision, "divisor does not divide");
      e[i] = re[i] - lead_e[i];
    }
    const Rat q = rc / lead_c;
    quo.add_term(e, q);
    MPoly step = MPoly().with_variables(vars);
    step.add_term(e, q);
    rem -= step * div;
  }
  return quo;
}

std::string to_string(const MPoly& p) {
  if (p.is_zero()) return "0";
  std::string out;
  for (const auto& [e, c] : p.terms()) {
    if (!out.empty()) out += " + ";
    out += to_string(c);
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      out += " * " + p.variables()[i];
      if (e[i] > 1) out += "^" + std::to_string(e[i]);
    }
  }
  return out;
}

namespace {

class Parser {
 public:
  explicit Parser(std::string_view s) : s_(s) {}

  MPoly parse() {
    MPoly p = expr();
    skip();
    if (pos_ != s_.size()) fail("unexpected '" + std::string(1, s_[pos_]) + "'");
    return p;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) {
    throw Error(ErrorCode::ParseError, msg + " at offset " + std::to_string(pos_));
  }

  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  bool accept(std::string_view tok) {
    skip();
    if (s_.substr(pos_, tok.size()) == tok) {
      pos_ += tok.size();
      return true;
    }
    return false;
  }

  MPoly expr() {
    MPoly acc = term();
    for (;;) {
      if (accept("+"))
        acc += term();
      else if (accept("-"))
        acc -= term();
      else
        return acc;
    }
  }

  MPoly term() {
    MPoly acc = power();
    for (;;) {
      skip();
      if (s_.substr(pos_, 2) == "**") return acc;
      if (accept("*")) {
        acc *= power();
      } else if (accept("/")) {
        MPoly d = power();
        if (!d.is_constant() || d.is_zero()) fail("division by a non-constant");
        acc *= Rat(1) / d.constant_term();
      } else {
        return acc;
      }
    }
  }

  MPoly power() {
    MPoly base = unary();
    if (accept("^") || accept("**")) {
      skip();
      std::size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      if (start == pos_) fail("expected exponent");
      base = base.pow(static_cast<unsigned>(std::stoul(std::string(s_.substr(start, pos_ - start)))));
    }
    return base;
  }

  MPoly unary() {
    if (accept("-")) return -unary();
    if (accept("+")) return unary();
    return primary();
  }

  MPoly primary() {
    skip();
    if (pos_ >= s_.size()) fail("unexpected end");
    if (accept("(")) {
      MPoly p = expr();
      if (!accept(")")) fail("expected ')'");
      return p;
    }
    const char ch = s_[pos_];
    if (std::isdigit(static_cast<unsigned char>(ch))) {
      std::size_t start = pos_;
      while (pos_ < s_.size() &&
             (std::isdigit(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '.'))
        ++pos_;
      return MPoly(parse_rat(s_.substr(start, pos_ - start)));
    }
    if (std::isalpha(static_cast<unsigned char>(ch)) || ch == '_') {
      std::size_t start = pos_;
      while (pos_ < s_.size() &&
             (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_'))
        ++pos_;
      return MPoly::variable(std::string(s_.substr(start, pos_ - start)));
    }
    fail("unexpected '" + std::string(1, ch) + "'");
  }

  std::string_view s_;
  std::size_t pos_ = 0;
};

}  // namespace

MPoly parse_mpoly(std::string_view text) { return Parser(text).parse(); }

}  // namespace jacobi::exact
