#pragma once

#include <cstddef>

namespace lattice_waves {

// Upper bound on worker threads used inside a single library call. Defaults
// to the value of LATTICE_WAVES_THREADS when set and positive, otherwise to
// the hardware concurrency.
std::size_t max_threads();
void set_max_threads(std::size_t n);

} // namespace lattice_waves
