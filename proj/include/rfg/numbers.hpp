#pragma once

#include <optional>
#include <utility>

namespace rfg {

bool is_prime(long n);

// Returns (p, t) with q = p^t, p prime, t >= 1; nullopt if q is not a
// prime power or q < 2.
std::optional<std::pair<long, long>> prime_power_decomposition(long q);

}  // namespace rfg
