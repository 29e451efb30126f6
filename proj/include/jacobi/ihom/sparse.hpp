#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "jacobi/exact/rational.hpp"

namespace jacobi::ihom {

using exact::Rat;

// Sparse rational vector: (index, value) pairs, indices increasing, no
// zero values.
using SparseVec = std::vector<std::pair<std::size_t, Rat>>;

// a + c * b
SparseVec axpy(const SparseVec& a, const Rat& c, const SparseVec& b);

Rat entry(const SparseVec& v, std::size_t index);

struct Reduction {
  std::size_t rank = 0;
  // Coefficient vectors (over the input columns) spanning the kernel.
  std::vector<SparseVec> kernel;
};

// Exact column reduction of the matrix whose columns are given. Pivots are
// the largest row index of each reduced column.
Reduction reduce_columns(const std::vector<SparseVec>& columns, bool track_kernel);

std::size_t rank(const std::vector<SparseVec>& columns);

}  // namespace jacobi::ihom
