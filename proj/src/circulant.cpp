#include "perlink/circulant.hpp"

#include <stdexcept>

#include "perlink/modp.hpp"

namespace perlink {

SymmetricCirculantMatrix::SymmetricCirculantMatrix(std::size_t p,
                                                   std::vector<Int> free_params)
    : p_(p), params_(std::move(free_params)) {
  if (params_.size() != param_count(p)) {
    throw std::invalid_argument(
        "symmetric circulant of size " + std::to_string(p) + " needs " +
        std::to_string(param_count(p)) + " free parameters, got " +
        std::to_string(params_.size()));
  }
}

std::size_t SymmetricCirculantMatrix::param_count(std::size_t p) {
  return p % 2 == 1 ? (p + 1) / 2 : p / 2 + 1;
}

std::vector<Int> SymmetricCirculantMatrix::first_row() const {
  // Mirror the tail so that a_j == a_{p+2-j} (1-based indices mod p).
  std::vector<Int> row = params_;
  row.reserve(p_);
  if (p_ % 2 == 1) {
    for (std::size_t i = params_.size(); i-- > 1;) row.push_back(params_[i]);
  } else {
    for (std::size_t i = params_.size() - 1; i-- > 1;) row.push_back(params_[i]);
  }
  return row;
}

bool BlockCirculantMatrix::off_diagonal_zero() const {
  for (const auto& [key, row] : off_diagonal_first_rows) {
    for (const Int& v : row) {
      if (v != 0) return false;
    }
  }
  return true;
}

IntMatrix expand(const CirculantMatrix& c) {
  const std::size_t n = c.size();
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      m(i, j) = c.first_row[(j + n - i % n) % n];
    }
  }
  return m;
}

IntMatrix expand(const SymmetricCirculantMatrix& c) {
  return expand(CirculantMatrix{c.first_row()});
}

IntMatrix expand(const BlockCirculantMatrix& b) {
  const std::size_t n = b.block_count();
  const std::size_t p = b.period;
  IntMatrix m(n * p, n * p);
  for (std::size_t i = 0; i < n; ++i) {
    IntMatrix diag = expand(b.diagonal_blocks[i]);
    for (std::size_t r = 0; r < p; ++r) {
      for (std::size_t c = 0; c < p; ++c) m(i * p + r, i * p + c) = diag(r, c);
    }
  }
  for (const auto& [key, row] : b.off_diagonal_first_rows) {
    const auto [i, j] = key;
    IntMatrix block = expand(CirculantMatrix{row});
    for (std::size_t r = 0; r < p; ++r) {
      for (std::size_t c = 0; c < p; ++c) {
        m(i * p + r, j * p + c) = block(r, c);
        m(j * p + c, i * p + r) = block(r, c);  // B_ji = B_ij^T
      }
    }
  }
  return m;
}

BlockCirculantMatrix assemble_block_circulant(
    std::vector<SymmetricCirculantMatrix> diagonal,
    std::map<std::pair<std::size_t, std::size_t>, std::vector<Int>>
        off_diagonal) {
  if (diagonal.empty()) {
    throw std::invalid_argument("block circulant needs at least one block");
  }
  const std::size_t p = diagonal.front().size();
  for (const auto& block : diagonal) {
    if (block.size() != p) {
      throw std::invalid_argument("diagonal blocks disagree on the period");
    }
  }
  const std::size_t n = diagonal.size();
  for (const auto& [key, row] : off_diagonal) {
    const auto [i, j] = key;
    if (i >= j || j >= n) {
      throw std::invalid_argument(
          "off-diagonal keys must satisfy i < j < block count");
    }
    if (row.size() != p) {
      throw std::invalid_argument("off-diagonal first row at (" +
                                  std::to_string(i) + "," + std::to_string(j) +
                                  ") has wrong length");
    }
  }
  return BlockCirculantMatrix{p, std::move(diagonal), std::move(off_diagonal)};
}

bool is_circulant(const IntMatrix& a) {
  if (!a.is_square()) return false;
  const std::size_t n = a.rows();
  for (std::size_t i = 0; i + 1 < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (a(i, j) != a(i + 1, (j + 1) % n)) return false;
    }
  }
  return true;
}

IntMatrix matrix_block(const IntMatrix& a, std::size_t bi, std::size_t bj,
                       std::size_t p) {
  IntMatrix m(p, p);
  for (std::size_t r = 0; r < p; ++r) {
    for (std::size_t c = 0; c < p; ++c) m(r, c) = a(bi * p + r, bj * p + c);
  }
  return m;
}

std::int64_t det_mod_n_formula(const std::vector<Int>& first_row,
                               std::int64_t n) {
  if (n < 1 || first_row.size() != static_cast<std::size_t>(n)) {
    throw std::invalid_argument("first row length " +
                                std::to_string(first_row.size()) +
                                " does not match size " + std::to_string(n));
  }
  Int total = 0;
  for (std::size_t i = 0; i < first_row.size(); ++i) {
    Int base = residue_mod(first_row[i], n);
    Int term = boost::multiprecision::powm(base, Int(n), Int(n));
    if (n % 2 == 0 && i % 2 == 1) {
      total -= term;
    } else {
      total += term;
    }
  }
  return residue_mod(total, n);
}

Int symmetric_circulant_count(std::int64_t p) {
  if (p < 2) throw std::invalid_argument("size must be >= 2");
  Int count = 1;
  const std::size_t k = SymmetricCirculantMatrix::param_count(
      static_cast<std::size_t>(p));
  for (std::size_t i = 0; i < k; ++i) count *= p;
  return count;
}

SymmetricCirculantMatrix symmetric_circulant_at(std::int64_t p,
                                                std::uint64_t index) {
  const std::size_t k =
      SymmetricCirculantMatrix::param_count(static_cast<std::size_t>(p));
  std::vector<Int> params(k);
  // Base-p digits, least significant digit = last parameter, so index 0 is
  // the zero matrix and enumeration is lexicographic in the parameters.
  for (std::size_t i = k; i-- > 0;) {
    params[i] = static_cast<std::int64_t>(index % p);
    index /= p;
  }
  return SymmetricCirculantMatrix(static_cast<std::size_t>(p),
                                  std::move(params));
}

std::uint64_t NullityLemmaReport::nullity_one_count() const {
  auto it = nullity_histogram.find(1);
  return it == nullity_histogram.end() ? 0 : it->second;
}

NullityLemmaReport verify_nullity_lemma(std::int64_t p, std::int64_t bound,
                                        bool allow_p_equal_2) {
  if (p == 2) {
    if (!allow_p_equal_2) {
      throw std::invalid_argument(
          "p = 2 is outside the lemma; pass the demonstration flag to sweep "
          "it anyway");
    }
  } else {
    if (!is_prime(p) || p % 2 == 0) {
      throw std::invalid_argument("p must be an odd prime, got " +
                                  std::to_string(p));
    }
    if (p > bound) {
      throw std::invalid_argument(
          "p = " + std::to_string(p) + " exceeds the enumeration bound " +
          std::to_string(bound) + " (the sweep has p^{(p+1)/2} cases)");
    }
  }

  const std::size_t np = static_cast<std::size_t>(p);
  const Int total = symmetric_circulant_count(p);
  const std::uint64_t count = static_cast<std::uint64_t>(total);

  NullityLemmaReport report;
  report.p = p;
  report.total = count;

  std::vector<std::int64_t> scratch(np * np);
  for (std::uint64_t index = 0; index < count; ++index) {
    SymmetricCirculantMatrix m = symmetric_circulant_at(p, index);
    std::vector<Int> row = m.first_row();
    for (std::size_t i = 0; i < np; ++i) {
      const std::int64_t v = static_cast<std::int64_t>(row[i]);
      for (std::size_t r = 0; r < np; ++r) {
        scratch[r * np + (i + r) % np] = v;
      }
    }
    const std::size_t nullity = nullity_mod_p_buffer(scratch.data(), np, p);
    ++report.nullity_histogram[nullity];
    if (nullity == 1 && !report.first_nullity_one_row) {
      report.first_nullity_one_row = row;
    }
  }
  return report;
}

}  // namespace perlink
