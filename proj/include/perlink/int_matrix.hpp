#pragma once

#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

#include "perlink/integers.hpp"

namespace perlink {

// Dense row-major integer matrix. Values are immutable in spirit: all
// operations below take copies or const references and return fresh values.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), entries_(rows * cols) {}

  static IntMatrix from_rows(const std::vector<std::vector<Int>>& rows);
  static IntMatrix from_rows(
      std::initializer_list<std::initializer_list<std::int64_t>> rows);
  static IntMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool empty() const { return rows_ == 0 || cols_ == 0; }

  Int& operator()(std::size_t i, std::size_t j) {
    return entries_[i * cols_ + j];
  }
  const Int& operator()(std::size_t i, std::size_t j) const {
    return entries_[i * cols_ + j];
  }

  bool is_square() const { return rows_ == cols_; }
  bool is_symmetric() const;
  IntMatrix transposed() const;

  void swap_rows(std::size_t a, std::size_t b);
  void swap_cols(std::size_t a, std::size_t b);
  /// row a += factor * row b
  void add_row(std::size_t a, std::size_t b, const Int& factor);
  /// col a += factor * col b
  void add_col(std::size_t a, std::size_t b, const Int& factor);
  void negate_row(std::size_t a);

  bool operator==(const IntMatrix& other) const = default;

  std::string to_string() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Int> entries_;
};

/// Exact determinant by fraction-free (Bareiss) elimination. Every division
/// performed is exact, so the result carries no rounding of any kind.
/// The determinant of the 0x0 matrix is 1.
Int determinant(IntMatrix a);

/// Product a * b.
IntMatrix multiply(const IntMatrix& a, const IntMatrix& b);

}  // namespace perlink
