#include "perlink/modp.hpp"

#include <stdexcept>

namespace perlink {

namespace {

std::int64_t inverse_mod(std::int64_t a, std::int64_t p) {
  // Extended Euclid; a in (0, p), p prime.
  std::int64_t t = 0, new_t = 1;
  std::int64_t r = p, new_r = a;
  while (new_r != 0) {
    std::int64_t q = r / new_r;
    t -= q * new_t;
    std::swap(t, new_t);
    r -= q * new_r;
    std::swap(r, new_r);
  }
  return t < 0 ? t + p : t;
}

}  // namespace

ModPMatrix::ModPMatrix(std::size_t rows, std::size_t cols, std::int64_t p)
    : rows_(rows), cols_(cols), p_(p), entries_(rows * cols) {
  require_prime_modulus(p);
}

ModPMatrix::ModPMatrix(const IntMatrix& a, std::int64_t p)
    : ModPMatrix(a.rows(), a.cols(), p) {
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) {
      (*this)(i, j) = residue_mod(a(i, j), p);
    }
  }
}

std::size_t ModPMatrix::rank() const {
  std::vector<std::int64_t> w = entries_;
  auto at = [&](std::size_t i, std::size_t j) -> std::int64_t& {
    return w[i * cols_ + j];
  };
  std::size_t rank = 0;
  for (std::size_t col = 0; col < cols_ && rank < rows_; ++col) {
    std::size_t pivot = rank;
    while (pivot < rows_ && at(pivot, col) == 0) ++pivot;
    if (pivot == rows_) continue;
    for (std::size_t j = 0; j < cols_; ++j) std::swap(at(rank, j), at(pivot, j));
    const std::int64_t inv = inverse_mod(at(rank, col), p_);
    for (std::size_t i = rank + 1; i < rows_; ++i) {
      if (at(i, col) == 0) continue;
      const std::int64_t f = at(i, col) * inv % p_;
      for (std::size_t j = col; j < cols_; ++j) {
        at(i, j) = (at(i, j) - f * at(rank, j)) % p_;
        if (at(i, j) < 0) at(i, j) += p_;
      }
    }
    ++rank;
  }
  return rank;
}

std::size_t nullity_mod_p(const IntMatrix& a, std::int64_t p) {
  return ModPMatrix(a, p).nullity();
}

std::size_t rank_mod_p(const IntMatrix& a, std::int64_t p) {
  return ModPMatrix(a, p).rank();
}

std::size_t nullity_mod_p_buffer(std::int64_t* w, std::size_t n,
                                 std::int64_t p) {
  std::size_t rank = 0;
  for (std::size_t col = 0; col < n && rank < n; ++col) {
    std::size_t pivot = rank;
    while (pivot < n && w[pivot * n + col] == 0) ++pivot;
    if (pivot == n) continue;
    if (pivot != rank) {
      for (std::size_t j = col; j < n; ++j) {
        std::swap(w[rank * n + j], w[pivot * n + j]);
      }
    }
    const std::int64_t inv = inverse_mod(w[rank * n + col], p);
    for (std::size_t i = rank + 1; i < n; ++i) {
      const std::int64_t v = w[i * n + col];
      if (v == 0) continue;
      const std::int64_t f = v * inv % p;
      for (std::size_t j = col; j < n; ++j) {
        std::int64_t x = (w[i * n + j] - f * w[rank * n + j]) % p;
        w[i * n + j] = x < 0 ? x + p : x;
      }
    }
    ++rank;
  }
  return n - rank;
}

}  // namespace perlink
