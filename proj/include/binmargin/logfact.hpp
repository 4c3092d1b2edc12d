#pragma once

#include <cstdint>

namespace binmargin {

/// ln k!, exact cumulative summation for k up to the memo cap (10^6),
/// lgamma beyond. The memo is a shared read-mostly cache; concurrent
/// callers are safe. If BINMARGIN_CACHE_DIR is set, the table is spilled
/// to and reloaded from <dir>/logfact.bin once it grows large.
double log_factorial(std::int64_t k);

/// ln C(n, k) in log domain; 0 for k < 0 or k > n is an error.
double log_binomial(std::int64_t n, std::int64_t k);

/// k * ln k with the 0^0 = 1 convention (returns 0 for k = 0).
double xlogx(std::int64_t k);

}  // namespace binmargin
