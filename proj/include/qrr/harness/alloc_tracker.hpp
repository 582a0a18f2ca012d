#pragma once

#include <cstddef>

namespace qrr {

// Per-thread heap accounting. Covers operator new/delete and, after
// install_gmp_alloc_hooks(), GMP/MPFR limb allocations.
void install_gmp_alloc_hooks();
// Starts a new measurement on this thread.
void alloc_reset_peak();
// Peak bytes allocated on this thread above the level at the last reset.
std::size_t alloc_peak_bytes();

}  // namespace qrr
