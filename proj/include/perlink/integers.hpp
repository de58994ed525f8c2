#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <string>

namespace perlink {

// Exact arbitrary-precision integer; every matrix entry, determinant and
// invariant factor in the library is one of these. No floating point anywhere.
using Int = boost::multiprecision::cpp_int;

/// Deterministic trial-division primality test for machine-word moduli.
bool is_prime(std::int64_t n);

/// Throws std::invalid_argument unless p is prime (and fits the field
/// arithmetic, p < 2^31).
void require_prime_modulus(std::int64_t p);

/// Least non-negative residue of v modulo m (m >= 1).
std::int64_t residue_mod(const Int& v, std::int64_t m);

std::string to_string(const Int& v);

}  // namespace perlink
