#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "perlink/integers.hpp"

namespace perlink {

// Combinatorial encoding of the fundamental domain of a rotationally
// symmetric link diagram: an annular diagram cut along a seam ray, leaving a
// tangle with m strand endpoints on each of the two seam walls. Gluing wall
// Right-i to wall Left-i of the same tangle recovers the quotient diagram;
// gluing p cyclic copies recovers the full diagram (see lift.hpp).
//
// Crossing signs are input data; planarity of the tangle is not modelled.

enum class Wall { Left, Right };
enum class PassRole { Over, Under };

struct SeamEndpoint {
  Wall wall = Wall::Left;
  std::size_t position = 0;  // 1-based, in [1, m]
  bool operator==(const SeamEndpoint&) const = default;
};

struct Crossing {
  std::string id;
  int sign = +1;  // +1 or -1
};

// One over/under visit of a strand to a crossing, in traversal order.
struct StrandPass {
  std::string crossing;
  PassRole role = PassRole::Over;
};

struct OpenStrand {
  std::string id;
  SeamEndpoint start;
  SeamEndpoint end;
  std::vector<StrandPass> passes;
};

struct ClosedStrand {
  std::string id;
  std::vector<StrandPass> passes;
};

struct SeamTangle {
  std::size_t seam_positions = 0;  // m
  std::vector<Crossing> crossings;
  std::vector<OpenStrand> open_strands;
  std::vector<ClosedStrand> closed_strands;
  // Extra framing kinks per quotient component, keyed by the id of any strand
  // belonging to the component. Each kink adds 1 to the framing of every lift
  // of that component.
  std::map<std::string, std::int64_t> framing_kinks;
};

/// Structural validation. Empty result means the tangle is well-formed;
/// otherwise each string pinpoints one violated invariant and the offending
/// ids. Validation never throws.
std::vector<std::string> validate(const SeamTangle& t);

// A component of the quotient link: the cycle of strands visited when the
// two seam walls are glued positionwise, with its net seam winding
// (rightward passes - leftward passes). The winding equals the component's
// linking number with the rotation axis.
struct QuotientComponent {
  std::string id;                     // id of the first strand traced
  std::vector<std::string> strands;   // traversal order
  std::int64_t winding = 0;
  std::int64_t framing_kinks = 0;
};

struct QuotientTrace {
  std::vector<QuotientComponent> components;
  // strand id -> (component index, seam offset): the offset is the winding
  // accumulated from the component's first strand to this strand along the
  // trace. Offsets drive the copy labelling of lifted components.
  std::map<std::string, std::pair<std::size_t, std::int64_t>> strand_location;

  std::size_t component_index(const std::string& strand) const;
  std::int64_t strand_offset(const std::string& strand) const;
};

/// Traces the quotient components. Throws std::invalid_argument when the
/// tangle fails validation (the message carries the first diagnostics).
QuotientTrace trace_quotient(const SeamTangle& t);

struct PeriodicityWitness {
  struct Entry {
    std::string component;
    std::int64_t winding = 0;
    std::int64_t winding_mod_p = 0;
  };
  bool strongly_periodic = false;
  std::vector<Entry> entries;  // one per quotient component
};

/// Winding criterion: every quotient component must satisfy
/// winding == 0 (mod p). p must be prime.
PeriodicityWitness is_strongly_periodic(const SeamTangle& t, std::int64_t p);

}  // namespace perlink
