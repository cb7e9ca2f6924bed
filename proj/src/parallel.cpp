#include "lattice_waves/parallel.hpp"

#include <atomic>
#include <cstdlib>
#include <string>
#include <thread>

namespace lattice_waves {

namespace {

std::size_t initial_threads() {
  if (const char* env = std::getenv("LATTICE_WAVES_THREADS")) {
    try {
      long n = std::stol(env);
      if (n > 0) return static_cast<std::size_t>(n);
    } catch (...) {
    }
  }
  unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : hw;
}

std::atomic<std::size_t>& thread_cap() {
  static std::atomic<std::size_t> cap{initial_threads()};
  return cap;
}

} // namespace

std::size_t max_threads() { return thread_cap().load(); }

void set_max_threads(std::size_t n) { thread_cap().store(n == 0 ? 1 : n); }

} // namespace lattice_waves
