#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "perlink/int_matrix.hpp"
#include "perlink/tangle.hpp"

namespace perlink {

// One closed component of the lifted diagram. When the tangle is strongly
// periodic for p, orbit i contributes exactly p components with copy indices
// 0..p-1; the component with copy index k is the one containing copy k of the
// orbit's first strand, so rotating the diagram by one copy sends copy k to
// copy k+1 (mod p). When some orbit merges, the component carries the
// smallest copy index of the first-strand instances it contains.
struct LiftedComponent {
  std::size_t orbit = 0;  // index into the quotient trace
  std::size_t copy = 0;   // 0-based
  std::string label;      // "l_<orbit>_<copy>", both 1-based
  std::vector<std::pair<std::string, std::size_t>> strand_instances;
  std::int64_t axis_winding = 0;  // net rightward seam transitions / p
};

struct CrossingInstance {
  std::string crossing;
  std::size_t copy = 0;
  int sign = +1;
  std::size_t over_component = 0;   // index into LiftedDiagram::components
  std::size_t under_component = 0;
};

struct AxisInfo {
  std::int64_t framing = 0;
  bool framing_coprime_to_p = true;
};

struct LiftedDiagram {
  std::int64_t p = 2;
  QuotientTrace quotient;
  std::vector<LiftedComponent> components;  // ordered by (orbit, copy)
  std::vector<CrossingInstance> crossing_instances;
  bool strongly_periodic = false;
  std::optional<AxisInfo> axis;
};

/// Glues p cyclic copies of the tangle (wall Right-i of copy t to wall Left-i
/// of copy t+1 mod p) and traces the resulting closed components. p must be
/// prime; the tangle must validate. When axis_framing is set, the rotation
/// axis becomes an extra surgery component with that framing (a warning flag
/// is raised, not an error, when the framing is not coprime to p).
LiftedDiagram lift(const SeamTangle& t, std::int64_t p,
                   std::optional<std::int64_t> axis_framing = std::nullopt);

/// Linking matrix of the lifted diagram in component order
/// l_11, .., l_1p, l_21, .., l_np (axis row/column last when present).
/// Off-diagonal entries are half the signed crossing count between the two
/// components; an odd count means the input was not a consistent link diagram
/// and raises std::runtime_error. Diagonal entries are the component's writhe
/// plus the framing kinks of its quotient component; the axis diagonal is the
/// axis framing and the axis row holds each component's axis winding.
IntMatrix linking_matrix(const LiftedDiagram& d);

// Quotient-side separation test. For ordered components i != j every
// inter-component crossing falls into a seam-offset class
// r = (offset(under strand) - offset(over strand)) mod p; the class-r signed
// crossing sums are exactly (twice) the entries of the lifted block B_ij, so
// the link is orbitally separated iff every class sum vanishes. The scalar
// quotient linking number lk(l_i, l_j) is the total over all classes; it can
// vanish while individual classes do not, which is why the class-refined sums
// are the decision data.
struct SeparationReport {
  struct PairData {
    std::size_t i = 0;
    std::size_t j = 0;
    Int quotient_linking;          // lk(l_i, l_j) in the quotient
    std::vector<Int> class_linking;  // per class r in [0, p)
    bool zero = false;
  };
  bool separated = false;
  std::vector<PairData> pairs;  // all i < j
};

/// Requires a valid, strongly periodic tangle (throws std::invalid_argument
/// otherwise). Computed purely from the quotient trace; never builds the lift.
SeparationReport orbital_separation(const SeamTangle& t, std::int64_t p);

bool is_orbitally_separated(const SeamTangle& t, std::int64_t p);

}  // namespace perlink
