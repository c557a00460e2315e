#include "qtcat/linalg.hpp"

#include <algorithm>
#include <stdexcept>

namespace qtcat {

bool RowSpace::insert(std::vector<Rat> row) {
  if (row.size() != cols_) throw std::invalid_argument("row width mismatch");
  for (const auto& [pc, r] : rows_) {
    if (row[pc] == 0) continue;
    Rat f = row[pc];
    for (size_t j = pc; j < cols_; ++j)
      if (r[j] != 0) row[j] -= f * r[j];
  }
  size_t pivot = cols_;
  for (size_t j = 0; j < cols_; ++j)
    if (row[j] != 0) {
      pivot = j;
      break;
    }
  if (pivot == cols_) return false;

  Rat inv = row[pivot];
  for (size_t j = pivot; j < cols_; ++j)
    if (row[j] != 0) row[j] /= inv;

  // Back-eliminate to keep the basis fully reduced.
  for (auto& [pc, r] : rows_) {
    if (r[pivot] == 0) continue;
    Rat f = r[pivot];
    for (size_t j = pivot; j < cols_; ++j)
      if (row[j] != 0) r[j] -= f * row[j];
  }

  auto at = std::lower_bound(
      rows_.begin(), rows_.end(), pivot,
      [](const auto& e, size_t p) { return e.first < p; });
  rows_.insert(at, {pivot, std::move(row)});
  return true;
}

std::vector<size_t> RowSpace::pivot_columns() const {
  std::vector<size_t> out;
  out.reserve(rows_.size());
  for (const auto& [pc, r] : rows_) out.push_back(pc);
  return out;
}

std::vector<std::vector<Rat>> RowSpace::kernel_basis() const {
  std::vector<bool> is_pivot(cols_, false);
  for (const auto& [pc, r] : rows_) is_pivot[pc] = true;

  std::vector<std::vector<Rat>> out;
  for (size_t f = 0; f < cols_; ++f) {
    if (is_pivot[f]) continue;
    std::vector<Rat> v(cols_, Rat(0));
    v[f] = 1;
    for (const auto& [pc, r] : rows_) v[pc] = -r[f];
    out.push_back(std::move(v));
  }
  return out;
}

}  // namespace qtcat
