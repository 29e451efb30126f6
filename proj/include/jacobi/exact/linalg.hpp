#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include <gmp.h>

#include "jacobi/exact/mpoly.hpp"
#include "jacobi/exact/rational.hpp"

namespace jacobi::exact {

template <class T>
using Matrix = std::vector<std::vector<T>>;

namespace detail {

inline bool is_zero(const Rat& v) { return v == 0; }
inline bool is_zero(const MPoly& v) { return v.is_zero(); }

inline Rat exact_quotient(const Rat& a, const Rat& b) { return a / b; }
inline MPoly exact_quotient(const MPoly& a, const MPoly& b) { return divide_exact(a, b); }

inline std::size_t pivot_cost(const Rat& v) {
  return mpz_sizeinbase(v.get_num_mpz_t(), 2) + mpz_sizeinbase(v.get_den_mpz_t(), 2);
}
inline std::size_t pivot_cost(const MPoly& v) { return v.term_count(); }

}  // namespace detail

// Fraction-free (Bareiss) determinant. Works for any T with exact division
// by the previous pivot; MPoly entries pivot on the fewest terms.
template <class T>
T bareiss_determinant(Matrix<T> m) {
  const std::size_t n = m.size();
  if (n == 0) return T(1);
  T prev(1);
  bool negate = false;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t best = n;
    for (std::size_t r = k; r < n; ++r) {
      if (detail::is_zero(m[r][k])) continue;
      if (best == n || detail::pivot_cost(m[r][k]) < detail::pivot_cost(m[best][k])) best = r;
    }
    if (best == n) return T(0);
    if (best != k) {
      std::swap(m[best], m[k]);
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        T v = m[k][k] * m[i][j] - m[i][k] * m[k][j];
        m[i][j] = detail::exact_quotient(v, prev);
      }
      m[i][k] = T(0);
    }
    prev = m[k][k];
  }
  T det = m[n - 1][n - 1];
  if (negate) det = -det;
  return det;
}

// Sylvester matrix of two coefficient lists (index = power, formal degree =
// size - 1). The deg g rows built from f come first, then the deg f rows
// built from g; each row lists coefficients from the highest power down.
template <class T>
Matrix<T> sylvester_matrix(const std::vector<T>& f, const std::vector<T>& g) {
  const std::size_t m = f.size() - 1, n = g.size() - 1, size = m + n;
  Matrix<T> s(size, std::vector<T>(size, T(0)));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k <= m; ++k) s[i][i + k] = f[m - k];
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t k = 0; k <= n; ++k) s[n + i][i + k] = g[n - k];
  return s;
}

}  // namespace jacobi::exact
