#pragma once

#include <cstdint>

#include "perlink/tangle.hpp"

namespace perlink {

// Seeded random tangles for property sweeps. Construction guarantees
// validity: the seam matching is generated first (each wall position gets a
// flow direction, then starts and ends are paired by a random bijection), and
// crossings are sprinkled onto strand passes afterwards. Crossings between
// two distinct strands are always emitted in pairs on the same strand pair
// (clasp or cancelling pair), which keeps every signed inter-component
// crossing count even, i.e. keeps linking numbers integral.
struct TangleGenOptions {
  std::size_t max_seam_positions = 4;
  std::size_t max_crossing_pairs = 4;
  std::size_t max_closed_strands = 2;
  // Balanced seam matching: every quotient component gets net winding 0, so
  // the tangle is strongly periodic for every prime.
  bool force_zero_windings = false;
  bool with_framing_kinks = true;
};

/// Deterministic across platforms for a fixed seed.
SeamTangle random_tangle(std::uint64_t seed, const TangleGenOptions& options = {});

}  // namespace perlink
