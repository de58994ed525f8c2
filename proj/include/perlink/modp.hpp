#pragma once

#include <cstdint>
#include <vector>

#include "perlink/int_matrix.hpp"

namespace perlink {

// Matrix over the prime field F_p, entries stored as residues in [0, p).
class ModPMatrix {
 public:
  ModPMatrix(std::size_t rows, std::size_t cols, std::int64_t p);
  ModPMatrix(const IntMatrix& a, std::int64_t p);

  std::int64_t modulus() const { return p_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  std::int64_t& operator()(std::size_t i, std::size_t j) {
    return entries_[i * cols_ + j];
  }
  std::int64_t operator()(std::size_t i, std::size_t j) const {
    return entries_[i * cols_ + j];
  }

  /// Row rank over F_p (Gaussian elimination on a scratch copy).
  std::size_t rank() const;
  /// Kernel dimension over F_p; rank() + nullity() == cols().
  std::size_t nullity() const { return cols_ - rank(); }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::int64_t p_ = 2;
  std::vector<std::int64_t> entries_;
};

std::size_t nullity_mod_p(const IntMatrix& a, std::int64_t p);
std::size_t rank_mod_p(const IntMatrix& a, std::int64_t p);

/// Nullity of an n x n matrix given as a row-major residue buffer. Scratch
/// path for exhaustive sweeps; clobbers the buffer.
std::size_t nullity_mod_p_buffer(std::int64_t* entries, std::size_t n,
                                 std::int64_t p);

}  // namespace perlink
