#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "perlink/int_matrix.hpp"
#include "perlink/smith.hpp"

namespace perlink {

// Surgery presentation: a symmetric linking matrix, optionally labelled and
// optionally remembering the periodic structure it came from.
struct FramedLinkPresentation {
  IntMatrix matrix;
  std::vector<std::string> labels;  // empty, or one per matrix row
  struct PeriodicMeta {
    std::int64_t p = 0;
    std::size_t orbit_count = 0;
  };
  std::optional<PeriodicMeta> periodic_meta;
};

struct PrimePower {
  Int prime;
  unsigned exponent = 1;
  Int value() const;
  bool operator==(const PrimePower&) const = default;
};

// Finitely generated abelian group in both canonical shapes: the divisibility
// chain of invariant factors (units dropped) and its refinement into
// prime-power summands.
struct AbelianGroupDecomposition {
  std::size_t free_rank = 0;
  std::vector<Int> invariant_factors;  // each > 1, d_i | d_{i+1}
  std::vector<PrimePower> primary;     // sorted by (prime, exponent)

  bool trivial() const { return free_rank == 0 && invariant_factors.empty(); }
  /// Number of summands whose order is a power of p; free_rank plus this is
  /// the dimension of (group tensor Z_p) over Z_p.
  std::size_t p_power_terms(const Int& p) const;
  /// Multiplicity of the summand Z_{prime^exponent}.
  std::size_t multiplicity(const Int& prime, unsigned exponent) const;
  bool has_two_power_term_at_least(unsigned exponent) const;

  /// "0", "Z", "Z^2 + Z/2 + Z/8", ... (invariant factor form).
  std::string to_string() const;
  /// Primary form, e.g. "Z/2 + Z/2 + Z/3"; equals to_string() when torsion-free.
  std::string primary_to_string() const;

  bool operator==(const AbelianGroupDecomposition&) const = default;
};

/// Trial-division factorization of n >= 1 into prime powers (empty for 1).
std::vector<PrimePower> factorize(Int n);

AbelianGroupDecomposition decomposition_from_smith(const SmithDecomposition& s);

/// H_1 of the surgered manifold: cokernel of the presentation matrix.
/// Throws std::invalid_argument when the matrix is not symmetric.
AbelianGroupDecomposition first_homology(const FramedLinkPresentation& pres);

/// rank of H_1(M; Z_p) = nullity of the presentation matrix over F_p.
std::size_t mod_p_rank(const FramedLinkPresentation& pres, std::int64_t p);

/// The group presented by [[a, b], [b, a]] in closed form:
/// Z_g + Z_{|a^2-b^2|/g} for g = gcd(a, b) when the determinant is nonzero,
/// with a free summand replacing the quotient factor when it vanishes.
AbelianGroupDecomposition two_by_two_group(const Int& a, const Int& b);

}  // namespace perlink
