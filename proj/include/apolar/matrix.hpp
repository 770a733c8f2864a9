#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "apolar/fp.hpp"

namespace apolar {

// Dense row-major matrix over Fp.  Sized for desk-scale elimination (a few
// hundred rows/columns), nothing fancier needed.
class DenseMatrix {
 public:
  DenseMatrix() = default;
  DenseMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols) {}

  static DenseMatrix from_rows(const std::vector<std::vector<Fp>>& rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Fp at(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }
  Fp& at(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }

  std::span<const Fp> row(std::size_t i) const {
    return {data_.data() + i * cols_, cols_};
  }
  std::span<Fp> row(std::size_t i) {
    return {data_.data() + i * cols_, cols_};
  }

  void append_row(std::span<const Fp> r);
  void swap_rows(std::size_t a, std::size_t b);

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Fp> data_;
};

// In-place reduced row echelon form (pivots normalized to 1, eliminated above
// and below; pivot search takes the first nonzero entry down the column).
// Returns the pivot columns in order; zero rows end up at the bottom.
std::vector<std::size_t> rref(DenseMatrix& m);

std::size_t rank(DenseMatrix m);

// Basis of the right kernel {v : m v = 0}, one vector per free column, in
// ascending free-column order.  Deterministic.
std::vector<std::vector<Fp>> kernel_basis(DenseMatrix m);

std::vector<Fp> apply(const DenseMatrix& m, std::span<const Fp> v);

// Reduce v against an RREF matrix; true iff it lies in the row space.
bool in_row_space(const DenseMatrix& rref_m,
                  const std::vector<std::size_t>& pivots, std::vector<Fp> v);

}  // namespace apolar
