#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "jacobi/ihom/complex.hpp"
#include "jacobi/ihom/perversity.hpp"
#include "jacobi/ihom/sparse.hpp"

namespace jacobi::ihom {

// Compact supports give absolute chains; closed supports give chains of the
// pair (K, ideal boundary), so ideal simplices count as zero.
enum class Support { Compact, Closed };

std::string to_string(Support s);
// "c"/"compact" or "cl"/"closed"; throws ParseError.
Support parse_support(const std::string& text);

// Coefficients over the i-simplices of a complex, indexed as in
// FilteredComplex::simplices(degree).
struct Chain {
  int degree = 0;
  SparseVec coefficients;
};

// sigma (dimension i) satisfies dim(sigma cap V_{m-r}) <= i - r + p_r for
// r = 1..m, the empty intersection counting as -infinity.
bool is_allowable(const FilteredComplex& k, int i, std::size_t index, const Perversity& p);

// Indices of the allowable i-simplices.
std::vector<std::size_t> allowable_basis(const FilteredComplex& k, int i, const Perversity& p);

bool is_allowable(const FilteredComplex& k, const Chain& c, const Perversity& p, Support s);

Chain boundary(const FilteredComplex& k, const Chain& c, Support s);

// Basis of IC_i = { c in A_i : boundary(c) in A_{i-1} }.
std::vector<Chain> intersection_chains(const FilteredComplex& k, int i, const Perversity& p, Support s);

struct IHResult {
  Perversity perversity;
  Support support = Support::Compact;
  std::vector<int> betti;    // degrees 0..m
  std::vector<int> ic_dims;  // dim IC_i
};

// Throws InvalidPerversity when the perversity length does not match.
IHResult ih_betti(const FilteredComplex& k, const Perversity& p, Support s);

std::vector<int> ordinary_betti(const FilteredComplex& k, Support s);

// True when c is the boundary of some chain in IC_{c.degree + 1}.
bool is_ic_boundary(const FilteredComplex& k, const Chain& c, const Perversity& p, Support s);

// Matrix of the boundary d_i as columns over the (i-1)-simplices, ideal
// rows and columns removed for closed supports. d_0 has no rows.
std::vector<SparseVec> boundary_columns(const FilteredComplex& k, int i, Support s);

}  // namespace jacobi::ihom
