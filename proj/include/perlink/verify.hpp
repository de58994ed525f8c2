#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

namespace perlink {

// Default seed for every randomized sweep; all suites are deterministic
// given (seed, size).
inline constexpr std::uint64_t kDefaultSeed = 123456789;

struct SuiteResult {
  std::string suite;
  std::uint64_t checked = 0;
  std::uint64_t violations = 0;
  std::vector<std::string> lines;  // human-readable report body
  std::optional<std::string> first_counterexample;
  nlohmann::ordered_json details;

  bool ok() const { return violations == 0; }
};

/// Suite "lemma2.6": power-sum formula vs exact determinant, exhaustive over
/// Z_n for n in {2,3,4,5} plus random integer rows with entries in [-50, 50]
/// for sizes up to 8. The congruence is a prime-size fact; composite sizes
/// produce honest violations which the suite reports.
SuiteResult run_circulant_det_suite(std::uint64_t seed = kDefaultSeed,
                                    std::size_t random_rows = 1000);

/// Suite "lemma2.7": exhaustive nullity histograms of symmetric circulants
/// over Z_p for odd primes p <= max_prime. A violation is any matrix of
/// nullity exactly 1. With demo_p2 = true the sweep instead runs p = 2,
/// where the nullity-1 witness [[1,1],[1,1]] is the expected outcome (its
/// absence would be the violation).
SuiteResult run_circulant_nullity_suite(std::int64_t max_prime = 7,
                                        bool demo_p2 = false);

/// Suite "prop2.3": seeded random tangles, p in {2,3,5}. Checks that lifted
/// linking matrices are symmetric with all p x p blocks circulant, diagonal
/// blocks symmetric, per-orbit framings equal, and that the quotient-side
/// separation test matches the vanishing of all off-diagonal blocks.
SuiteResult run_block_structure_suite(std::uint64_t seed = kDefaultSeed,
                                      std::size_t tangles = 500);

/// Suite "lemma1.3": on the same tangle stream, the winding criterion for
/// strong periodicity agrees with the lifted component-count criterion for
/// every p in {2,3,5}.
SuiteResult run_periodicity_equivalence_suite(std::uint64_t seed = kDefaultSeed,
                                              std::size_t tangles = 500);

/// Suite "thm2.2-cases": exhaustive sweep of the 2x2 symmetric circulant
/// presentations [[a,b],[b,a]] for |a|,|b| <= radius. Checks the closed-form
/// group against the Smith normal form route on the whole grid, and for
/// nonsingular matrices that the group has an element of order >= 16 or even
/// multiplicities of Z_2 and Z_4.
SuiteResult run_two_by_two_suite(std::int64_t radius = 25);

/// Suite "prop2.10": seeded random block-diagonal assemblies of symmetric
/// circulant blocks over Z_p, p in {3,5,7}: nullity of the expansion must
/// equal the block sum and never be 1.
SuiteResult run_block_nullity_suite(std::uint64_t seed = kDefaultSeed,
                                    std::size_t per_prime = 1000);

}  // namespace perlink
