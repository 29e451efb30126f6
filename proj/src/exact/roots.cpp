#include "jacobi/exact/roots.hpp"

#include <algorithm>

#include "jacobi/error.hpp"

namespace jacobi::exact {

SturmSequence::SturmSequence(const UPoly& p) {
  if (p.is_zero()) throw Error(ErrorCode::ZeroPolynomial, "Sturm sequence of the zero polynomial");
  IntPoly p0 = to_int_poly(square_free_part(p));
  IntPoly p1 = int_derivative(p0);
  make_primitive(p1);
  seq_.push_back(std::move(p0));
  if (p1.empty()) return;
  seq_.push_back(std::move(p1));
  for (;;) {
    IntPoly r = int_pseudo_remainder(seq_[seq_.size() - 2], seq_.back());
    if (r.empty()) break;
    for (auto& c : r) c = -c;
    make_primitive(r);
    seq_.push_back(std::move(r));
  }
}

namespace {

int count_variations(const std::vector<int>& signs) {
  int v = 0, last = 0;
  for (int s : signs) {
    if (s == 0) continue;
    if (last != 0 && s != last) ++v;
    last = s;
  }
  return v;
}

}  // namespace

int SturmSequence::variations_at(const Rat& x) const {
  std::vector<int> signs;
  signs.reserve(seq_.size());
  for (const auto& p : seq_) signs.push_back(int_poly_sign_at(p, x));
  return count_variations(signs);
}

int SturmSequence::variations_at_infinity(int direction) const {
  std::vector<int> signs;
  signs.reserve(seq_.size());
  for (const auto& p : seq_) signs.push_back(int_poly_sign_at_infinity(p, direction));
  return count_variations(signs);
}

int SturmSequence::count() const { return variations_at_infinity(-1) - variations_at_infinity(1); }

int SturmSequence::count(const Interval& open) const {
  if (open.lo >= open.hi) return 0;
  // V(lo) - V(hi) counts roots in (lo, hi].
  int n = variations_at(open.lo) - variations_at(open.hi);
  if (is_root(open.hi)) --n;
  return n;
}

int sturm_count(const UPoly& p) { return SturmSequence(p).count(); }

int sturm_count(const UPoly& p, const Interval& open) { return SturmSequence(p).count(open); }

Rat root_bound(const UPoly& p) {
  if (p.is_zero()) throw Error(ErrorCode::ZeroPolynomial, "root bound of the zero polynomial");
  const Rat lc = abs(p.leading());
  Rat m = 0;
  for (int k = 0; k < p.degree(); ++k) m = std::max(m, Rat(abs(p.coeff(k)) / lc));
  Rat b = 1;
  while (b <= m + 1) b *= 2;
  return b;
}

namespace {

// A split point inside (lo, hi) that is not a root, close to the midpoint.
Rat split_point(const SturmSequence& s, const Interval& iv) {
  Rat mid = iv.mid();
  if (!s.is_root(mid)) return mid;
  const Rat w = iv.width();
  for (long k = 3;; ++k) {
    Rat c = mid + w * pow2(-k);
    if (!s.is_root(c)) return c;
  }
}

}  // namespace

std::vector<Interval> isolate_real_roots(const SturmSequence& s) {
  std::vector<Interval> out;
  if (s.degree() <= 0) return out;
  Rat b = 1;
  {
    std::vector<Rat> coeffs(s.square_free().begin(), s.square_free().end());
    b = root_bound(UPoly(std::move(coeffs)));
  }
  std::vector<std::pair<Interval, int>> work;
  const Interval top(-b, b);
  work.emplace_back(top, s.count(top));
  while (!work.empty()) {
    auto [iv, n] = work.back();
    work.pop_back();
    if (n == 0) continue;
    if (n == 1) {
      out.push_back(refine_root(s, iv, Rat(1)));
      continue;
    }
    const Rat c = split_point(s, iv);
    const Interval left(iv.lo, c), right(c, iv.hi);
    const int nl = s.count(left);
    work.emplace_back(right, n - nl);
    work.emplace_back(left, nl);
  }
  std::sort(out.begin(), out.end(), [](const Interval& a, const Interval& b) { return a.lo < b.lo; });
  return out;
}

std::vector<Interval> isolate_real_roots(const UPoly& p) { return isolate_real_roots(SturmSequence(p)); }

Interval bisect_root(const SturmSequence& s, const Interval& iv) {
  const Rat c = split_point(s, iv);
  // Simple roots of the square-free part change sign.
  if (s.sign_at(iv.lo) * s.sign_at(c) < 0) return Interval(iv.lo, c);
  return Interval(c, iv.hi);
}

Interval refine_root(const SturmSequence& s, Interval iv, const Rat& width) {
  while (iv.width() > width) iv = bisect_root(s, iv);
  return iv;
}

std::vector<Rat> rational_roots(const UPoly& p) {
  const SturmSequence s(p);
  const IntPoly& q = s.square_free();
  const Int& lc = q.back();
  // Distinct rationals with denominators dividing lc are at least 1/lc^2
  // apart, so a narrower interval holds at most one candidate and it is
  // the simplest rational there.
  const Rat width = make_rat(Int(1), Int(2 * lc * lc));
  std::vector<Rat> out;
  for (auto iv : isolate_real_roots(s)) {
    iv = refine_root(s, iv, width);
    const Rat c = simplest_between(iv.lo, iv.hi);
    if (s.is_root(c)) out.push_back(c);
  }
  return out;
}

}  // namespace jacobi::exact
