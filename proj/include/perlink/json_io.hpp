#pragma once

#include <string>

#include "perlink/homology.hpp"
#include "perlink/int_matrix.hpp"
#include "perlink/lift.hpp"
#include "perlink/obstruction.hpp"
#include "perlink/tangle.hpp"

#include "json.hpp"

namespace perlink {

using Json = nlohmann::ordered_json;

// Matrix entries are emitted as JSON numbers when they fit in 64 bits and as
// decimal strings otherwise; both forms are accepted on input.
Json int_to_json(const Int& v);
Int int_from_json(const Json& v);

/// {"matrix": [[...], ...]}; rows must be equally long.
IntMatrix matrix_from_json(const Json& j);
Json matrix_to_json(const IntMatrix& m);

/// Whitespace-separated rows, one row per line. Blank input is the empty
/// matrix.
IntMatrix matrix_from_text(const std::string& text);

/// Dispatches on the first non-whitespace byte: '{' selects the JSON schema,
/// anything else the plain-text row format.
IntMatrix load_matrix_file(const std::string& path);

SeamTangle tangle_from_json(const Json& j);
Json tangle_to_json(const SeamTangle& t);
SeamTangle load_tangle_file(const std::string& path);

Json decomposition_to_json(const AbelianGroupDecomposition& d);
Json verdict_to_json(const ObstructionVerdict& v);

/// Report body of the homology command; shared by the CLI and the pipe tests.
Json homology_report_json(const FramedLinkPresentation& pres,
                          const std::vector<std::int64_t>& extra_primes = {});
std::string homology_report_text(const FramedLinkPresentation& pres,
                                 const std::vector<std::int64_t>& extra_primes = {});

std::string read_file(const std::string& path);

}  // namespace perlink
