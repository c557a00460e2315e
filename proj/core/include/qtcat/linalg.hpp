#pragma once

#include <cstddef>
#include <vector>

#include "qtcat/mono.hpp"

namespace qtcat {

// Row space accumulator over Q kept in reduced row echelon form. Pivoting is
// deterministic: the pivot of a new row is its first nonzero column.
class RowSpace {
 public:
  explicit RowSpace(size_t cols) : cols_(cols) {}

  // Reduces the row against the current basis; returns true (and stores the
  // normalized row) if it increases the rank.
  bool insert(std::vector<Rat> row);
  size_t rank() const { return rows_.size(); }
  size_t cols() const { return cols_; }

  // Pivot column of each stored row, ascending.
  std::vector<size_t> pivot_columns() const;
  // Kernel of the matrix whose rows were inserted, via the standard
  // free-column construction; one vector per non-pivot column, in column
  // order.
  std::vector<std::vector<Rat>> kernel_basis() const;

 private:
  size_t cols_;
  std::vector<std::pair<size_t, std::vector<Rat>>> rows_;  // sorted by pivot
};

}  // namespace qtcat
