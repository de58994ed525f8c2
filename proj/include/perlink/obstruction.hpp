#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "perlink/circulant.hpp"
#include "perlink/homology.hpp"

#include "json.hpp"

namespace perlink {

// The obstruction rules are one-directional: NotPeriodic certifies that no
// action of the stated kind exists, NoObstruction certifies nothing, and
// PreconditionNotMet means the rule does not speak about this manifold at
// all. Rules are reported under the stable names "Theorem 2.1",
// "Theorem 2.2" and "Corollary 2.13".
enum class Verdict { NotPeriodic, NoObstruction, PreconditionNotMet };

std::string verdict_name(Verdict v);

struct ObstructionVerdict {
  Verdict verdict = Verdict::NoObstruction;
  std::string rule;
  std::string summary;  // one human-readable line, e.g. "mod-3 rank = 1"
  nlohmann::ordered_json certificate;  // enough data to re-check by hand
};

inline constexpr const char* kRuleOddPrime = "Theorem 2.1";
inline constexpr const char* kRuleTwoTorsionParity = "Theorem 2.2";
inline constexpr const char* kRuleZ2RankParity = "Corollary 2.13";

/// Rule "Theorem 2.1" (odd prime p): a manifold admitting a Z_p action with
/// circle fixed-point set cannot have H_1(M; Z_p) = Z_p, so mod-p rank
/// exactly 1 certifies NotPeriodic. p = 2 yields PreconditionNotMet (the rule
/// is false there; see Remark 2.12 in the reports).
ObstructionVerdict odd_prime_obstruction(const FramedLinkPresentation& pres,
                                         std::int64_t p);

/// Rule "Theorem 2.2": for a rational homology sphere whose H_1 has no
/// element of order 16, a Z_2 action with circle fixed-point set forces even
/// multiplicities of Z_2 and of Z_4 in the primary decomposition.
ObstructionVerdict two_torsion_parity_obstruction(
    const FramedLinkPresentation& pres);

/// Rule "Corollary 2.13": with no element of order 8, the Z_2 homology of a
/// 2-periodic rational homology sphere is Z_2^m with m even.
ObstructionVerdict z2_rank_parity_obstruction(
    const FramedLinkPresentation& pres);

struct BlockNullityReport {
  std::int64_t p = 0;
  std::vector<std::size_t> block_nullities;
  std::size_t nullity_sum = 0;
  std::size_t direct_nullity = 0;  // nullity of the expanded matrix
  bool additive = false;           // direct_nullity == nullity_sum
  bool nullity_is_one = false;
};

/// Block-diagonal nullity check (odd prime p): computes null_p of the
/// expansion both directly and as the sum over diagonal blocks, and records
/// whether the total is 1 (it never is, since no symmetric circulant p x p
/// block over Z_p has nullity 1). Off-diagonal blocks must all be zero;
/// otherwise the precondition of Corollary 2.5 fails and
/// std::invalid_argument is thrown.
BlockNullityReport block_diagonal_nullity_check(const BlockCirculantMatrix& b,
                                                std::int64_t p);

}  // namespace perlink
