#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace tvg {

struct MatrixEntry {
  std::size_t row = 0;
  std::size_t col = 0;
  double value = 0.0;

  friend bool operator==(const MatrixEntry&, const MatrixEntry&) = default;
};

// Coordinate-list sparse matrix. Entries are kept sorted row-major, never
// repeat a coordinate and never store an explicit zero.
class SparseMatrix {
 public:
  SparseMatrix() = default;
  SparseMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols) {}

  // Validates and sorts. Zero values are dropped; a repeated coordinate or an
  // out-of-range entry throws ModelError.
  static SparseMatrix from_entries(std::size_t rows, std::size_t cols,
                                   std::vector<MatrixEntry> entries);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  std::size_t nnz() const { return entries_.size(); }
  std::size_t logical_size() const { return rows_ * cols_; }
  bool square() const { return rows_ == cols_; }

  std::span<const MatrixEntry> entries() const { return entries_; }

  // Value at (row, col); 0 for an absent entry.
  double at(std::size_t row, std::size_t col) const;

  // Number of logical entries equal to `value` (zeros included).
  std::size_t count_value(double value) const;

  friend bool operator==(const SparseMatrix&, const SparseMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<MatrixEntry> entries_;
};

}  // namespace tvg
