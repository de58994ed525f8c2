#include "perlink/smith.hpp"

#include <algorithm>
#include <stdexcept>

namespace perlink {

namespace {

// Smallest nonzero |entry| in the submatrix with corner (k, k); ties broken
// by lowest (row, col). Returns false when the submatrix is zero.
bool find_pivot(const IntMatrix& d, std::size_t k, std::size_t& row,
                std::size_t& col) {
  bool found = false;
  Int best;
  for (std::size_t i = k; i < d.rows(); ++i) {
    for (std::size_t j = k; j < d.cols(); ++j) {
      if (d(i, j) == 0) continue;
      Int mag = abs(d(i, j));
      if (!found || mag < best) {
        found = true;
        best = mag;
        row = i;
        col = j;
      }
    }
  }
  return found;
}

}  // namespace

SmithDecomposition smith_normal_form(IntMatrix a, bool with_witnesses) {
  const std::size_t m = a.rows();
  const std::size_t n = a.cols();
  const std::size_t bound = std::min(m, n);

  IntMatrix left, right;
  if (with_witnesses) {
    left = IntMatrix::identity(m);
    right = IntMatrix::identity(n);
  }

  std::size_t rank = 0;
  for (std::size_t k = 0; k < bound; ++k) {
    std::size_t pr = k, pc = k;
    if (!find_pivot(a, k, pr, pc)) break;
    a.swap_rows(k, pr);
    a.swap_cols(k, pc);
    if (with_witnesses) {
      left.swap_rows(k, pr);
      right.swap_cols(k, pc);
    }

    for (;;) {
      // Clear column k below the pivot and row k right of it. Truncated
      // division leaves remainders smaller than the pivot; when any survive,
      // a strictly smaller pivot exists and the loop repeats.
      bool clean = true;
      for (std::size_t i = k + 1; i < m; ++i) {
        if (a(i, k) == 0) continue;
        Int q = a(i, k) / a(k, k);
        if (q != 0) {
          a.add_row(i, k, -q);
          if (with_witnesses) left.add_row(i, k, -q);
        }
        if (a(i, k) != 0) clean = false;
      }
      for (std::size_t j = k + 1; j < n; ++j) {
        if (a(k, j) == 0) continue;
        Int q = a(k, j) / a(k, k);
        if (q != 0) {
          a.add_col(j, k, -q);
          if (with_witnesses) right.add_col(j, k, -q);
        }
        if (a(k, j) != 0) clean = false;
      }
      if (!clean) {
        std::size_t rr = k, cc = k;
        find_pivot(a, k, rr, cc);
        a.swap_rows(k, rr);
        a.swap_cols(k, cc);
        if (with_witnesses) {
          left.swap_rows(k, rr);
          right.swap_cols(k, cc);
        }
        continue;
      }

      // Divisibility fix-up: fold a non-multiple row into row k and reduce
      // again, so d_k divides everything that remains.
      bool divides_all = true;
      for (std::size_t i = k + 1; i < m && divides_all; ++i) {
        for (std::size_t j = k + 1; j < n && divides_all; ++j) {
          if (a(i, j) % a(k, k) != 0) {
            a.add_row(k, i, 1);
            if (with_witnesses) left.add_row(k, i, 1);
            divides_all = false;
          }
        }
      }
      if (divides_all) break;
    }

    if (a(k, k) < 0) {
      a.negate_row(k);
      if (with_witnesses) left.negate_row(k);
    }
    ++rank;
  }

  SmithDecomposition result;
  result.invariant_factors.reserve(rank);
  for (std::size_t k = 0; k < rank; ++k) {
    result.invariant_factors.push_back(a(k, k));
  }
  result.free_rank = bound - rank;
  if (with_witnesses) {
    result.left_transform = std::move(left);
    result.right_transform = std::move(right);
  }
  return result;
}

IntMatrix smith_diagonal_matrix(const SmithDecomposition& d, std::size_t rows,
                                std::size_t cols) {
  IntMatrix m(rows, cols);
  for (std::size_t k = 0; k < d.invariant_factors.size(); ++k) {
    m(k, k) = d.invariant_factors[k];
  }
  return m;
}

}  // namespace perlink
