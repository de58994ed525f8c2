#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "perlink/int_matrix.hpp"

namespace perlink {

// Circulant matrix in first-row representation: expanding gives
// a(i,j) = first_row[(j - i) mod n], i.e. each row is the right shift of the
// one above it.
struct CirculantMatrix {
  std::vector<Int> first_row;
  std::size_t size() const { return first_row.size(); }
};

// Circulant matrix that is also symmetric. Stored by its free parameters so
// enumeration is duplicate-free by construction:
//   odd  p: a_1 .. a_{(p+1)/2}, first row a_1, .., a_mid, a_mid, .., a_2
//   even p: a_1 .. a_{p/2+1},   first row a_1, .., a_{p/2+1}, a_{p/2}, .., a_2
class SymmetricCirculantMatrix {
 public:
  SymmetricCirculantMatrix(std::size_t p, std::vector<Int> free_params);

  static std::size_t param_count(std::size_t p);

  std::size_t size() const { return p_; }
  const std::vector<Int>& free_params() const { return params_; }
  std::vector<Int> first_row() const;

 private:
  std::size_t p_ = 0;
  std::vector<Int> params_;
};

// Symmetric block matrix with n x n blocks of size p x p: symmetric circulant
// blocks on the diagonal, circulant blocks (given by their first rows, keys
// i < j) elsewhere; the (j, i) block is the transpose of the (i, j) block.
struct BlockCirculantMatrix {
  std::size_t period = 0;  // p
  std::vector<SymmetricCirculantMatrix> diagonal_blocks;
  std::map<std::pair<std::size_t, std::size_t>, std::vector<Int>>
      off_diagonal_first_rows;

  std::size_t block_count() const { return diagonal_blocks.size(); }
  bool off_diagonal_zero() const;
};

IntMatrix expand(const CirculantMatrix& c);
IntMatrix expand(const SymmetricCirculantMatrix& c);
IntMatrix expand(const BlockCirculantMatrix& b);

BlockCirculantMatrix assemble_block_circulant(
    std::vector<SymmetricCirculantMatrix> diagonal,
    std::map<std::pair<std::size_t, std::size_t>, std::vector<Int>>
        off_diagonal = {});

/// True iff a(i,j) == a(i+1,j+1) (indices mod n) throughout.
bool is_circulant(const IntMatrix& a);

/// The p x p block at block position (bi, bj) of a matrix partitioned into
/// p x p blocks.
IntMatrix matrix_block(const IntMatrix& a, std::size_t bi, std::size_t bj,
                       std::size_t p);

/// Power-sum residue attached to a circulant first row:
///   n odd:  (a_1^n + a_2^n + ... + a_n^n) mod n
///   n even: (a_1^n - a_2^n + ... - a_n^n) mod n
/// For prime n this equals det(expand) mod n; for composite n >= 4 the
/// congruence fails in general (first counterexample (0,1,0,1) at n = 4),
/// see the lemma2.6 verification suite.
std::int64_t det_mod_n_formula(const std::vector<Int>& first_row,
                               std::int64_t n);

// --- enumeration of symmetric circulants over Z_p ------------------------

/// p^{param_count(p)}: the number of distinct symmetric circulant p x p
/// matrices over Z_p.
Int symmetric_circulant_count(std::int64_t p);

/// The index-th matrix in the lexicographic enumeration of free-parameter
/// vectors over [0, p). Restartable: any index in [0, count) is valid, so
/// callers may scan disjoint chunks independently.
SymmetricCirculantMatrix symmetric_circulant_at(std::int64_t p,
                                                std::uint64_t index);

struct NullityLemmaReport {
  std::int64_t p = 0;
  std::uint64_t total = 0;
  std::map<std::size_t, std::uint64_t> nullity_histogram;
  std::optional<std::vector<Int>> first_nullity_one_row;

  std::uint64_t nullity_one_count() const;
};

/// Exhaustive nullity histogram over every symmetric circulant p x p matrix
/// over Z_p. p must be an odd prime <= bound; p = 2 is accepted only with
/// allow_p_equal_2 (the histogram then contains a nullity-1 witness).
NullityLemmaReport verify_nullity_lemma(std::int64_t p, std::int64_t bound = 11,
                                        bool allow_p_equal_2 = false);

}  // namespace perlink
