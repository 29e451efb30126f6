#include "jacobi/ihom/sparse.hpp"

#include <unordered_map>

namespace jacobi::ihom {

SparseVec axpy(const SparseVec& a, const Rat& c, const SparseVec& b) {
  SparseVec out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
      out.push_back(a[i++]);
    } else if (i == a.size() || b[j].first < a[i].first) {
      out.emplace_back(b[j].first, c * b[j].second);
      ++j;
    } else {
      Rat v = a[i].second + c * b[j].second;
      if (v != 0) out.emplace_back(a[i].first, std::move(v));
      ++i;
      ++j;
    }
  }
  return out;
}

Rat entry(const SparseVec& v, std::size_t index) {
  for (const auto& [i, x] : v)
    if (i == index) return x;
  return Rat(0);
}

Reduction reduce_columns(const std::vector<SparseVec>& columns, bool track_kernel) {
  Reduction r;
  std::vector<SparseVec> reduced;
  std::vector<SparseVec> combos;
  std::unordered_map<std::size_t, std::size_t> owner;  // pivot row -> reduced column
  for (std::size_t j = 0; j < columns.size(); ++j) {
    SparseVec col = columns[j];
    SparseVec combo;
    if (track_kernel) combo.emplace_back(j, Rat(1));
    while (!col.empty()) {
      auto it = owner.find(col.back().first);
      if (it == owner.end()) break;
      const SparseVec& piv = reduced[it->second];
      const Rat c = -col.back().second / piv.back().second;
      col = axpy(col, c, piv);
      if (track_kernel) combo = axpy(combo, c, combos[it->second]);
    }
    if (col.empty()) {
      if (track_kernel) r.kernel.push_back(std::move(combo));
      continue;
    }
    owner.emplace(col.back().first, reduced.size());
    reduced.push_back(std::move(col));
    if (track_kernel) combos.push_back(std::move(combo));
  }
  r.rank = reduced.size();
  return r;
}

std::size_t rank(const std::vector<SparseVec>& columns) { return reduce_columns(columns, false).rank; }

}  // namespace jacobi::ihom
