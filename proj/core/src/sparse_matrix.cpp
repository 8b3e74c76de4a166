#include "tvg/sparse_matrix.hpp"

#include <algorithm>
#include <string>

#include "tvg/error.hpp"

namespace tvg {

namespace {

bool coord_less(const MatrixEntry& a, const MatrixEntry& b) {
  return a.row != b.row ? a.row < b.row : a.col < b.col;
}

}  // namespace

SparseMatrix SparseMatrix::from_entries(std::size_t rows, std::size_t cols,
                                        std::vector<MatrixEntry> entries) {
  std::erase_if(entries, [](const MatrixEntry& e) { return e.value == 0.0; });
  for (const auto& e : entries) {
    if (e.row >= rows || e.col >= cols) {
      throw ModelError("matrix entry (" + std::to_string(e.row) + ", " + std::to_string(e.col) +
                       ") outside " + std::to_string(rows) + "x" + std::to_string(cols));
    }
  }
  std::sort(entries.begin(), entries.end(), coord_less);
  auto dup = std::adjacent_find(entries.begin(), entries.end(),
                                [](const MatrixEntry& a, const MatrixEntry& b) {
                                  return a.row == b.row && a.col == b.col;
                                });
  if (dup != entries.end()) {
    throw ModelError("duplicate matrix entry (" + std::to_string(dup->row) + ", " +
                     std::to_string(dup->col) + ")");
  }
  SparseMatrix m(rows, cols);
  m.entries_ = std::move(entries);
  return m;
}

double SparseMatrix::at(std::size_t row, std::size_t col) const {
  MatrixEntry key{row, col, 0.0};
  auto it = std::lower_bound(entries_.begin(), entries_.end(), key, coord_less);
  if (it != entries_.end() && it->row == row && it->col == col) return it->value;
  return 0.0;
}

std::size_t SparseMatrix::count_value(double value) const {
  if (value == 0.0) return logical_size() - nnz();
  return static_cast<std::size_t>(std::count_if(
      entries_.begin(), entries_.end(), [value](const MatrixEntry& e) { return e.value == value; }));
}

}  // namespace tvg
