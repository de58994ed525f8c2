#include "perlink/integers.hpp"

#include <stdexcept>

namespace perlink {

bool is_prime(std::int64_t n) {
  if (n < 2) return false;
  if (n < 4) return true;
  if (n % 2 == 0) return false;
  for (std::int64_t d = 3; d * d <= n; d += 2) {
    if (n % d == 0) return false;
  }
  return true;
}

void require_prime_modulus(std::int64_t p) {
  if (!is_prime(p)) {
    throw std::invalid_argument("modulus " + std::to_string(p) +
                                " is not prime");
  }
  if (p >= (std::int64_t{1} << 31)) {
    throw std::invalid_argument("modulus " + std::to_string(p) +
                                " too large (must be < 2^31)");
  }
}

std::int64_t residue_mod(const Int& v, std::int64_t m) {
  if (m < 1) throw std::invalid_argument("modulus must be >= 1");
  Int r = v % m;
  if (r < 0) r += m;
  return static_cast<std::int64_t>(r);
}

std::string to_string(const Int& v) { return v.str(); }

}  // namespace perlink
