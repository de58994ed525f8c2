#pragma once

#include <optional>
#include <vector>

#include "perlink/int_matrix.hpp"

namespace perlink {

// Smith normal form of an integer matrix A: unimodular L, R with
// L * A * R = diag(d_1, ..., d_r, 0, ..., 0) and d_i | d_{i+1}.
//
// invariant_factors keeps unit factors (d_i = 1); presentation layers that
// want the group-theoretic view drop them (see homology.hpp).
// free_rank = min(rows, cols) - r.
struct SmithDecomposition {
  std::vector<Int> invariant_factors;
  std::size_t free_rank = 0;
  std::optional<IntMatrix> left_transform;
  std::optional<IntMatrix> right_transform;
};

// Deterministic variant of the classical reduction: the pivot is always the
// entry of smallest nonzero absolute value in the working submatrix, ties
// broken by lowest (row, col). Factors are normalized positive.
SmithDecomposition smith_normal_form(IntMatrix a, bool with_witnesses = false);

/// diag(d_1, ..., d_r, 0, ...) with the shape of the source matrix; the form
/// the witnesses reconstruct.
IntMatrix smith_diagonal_matrix(const SmithDecomposition& d, std::size_t rows,
                                std::size_t cols);

}  // namespace perlink
