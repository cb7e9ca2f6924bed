// One line per acceptance criterion; exit status is non-zero if any fails.

#include "lattice_waves/verify.hpp"

#include <cstdio>
#include <cstdlib>
#include <string>

namespace {

struct Budget {
  int id;
  double seconds;
};

constexpr Budget kBudgets[] = {{1, 60.0}, {6, 120.0}};

double budget_for(int id) {
  for (const auto& b : kBudgets)
    if (b.id == id) return b.seconds;
  return 0.0;
}

} // namespace

int main() {
  using namespace lattice_waves::verify;
  const Options options;
  int failed = 0;
  constexpr int kCriteria = 11;
  for (int id = 1; id <= kCriteria; ++id) {
    CheckResult r = run_check(id, options);
    std::string note;
    const double budget = budget_for(id);
    if (budget > 0.0 && r.seconds > budget) {
      r.passed = false;
      note = " over the " + std::to_string(static_cast<int>(budget)) + " s budget";
    }
    if (!r.passed) ++failed;
    std::printf("criterion %2d %-12s %s  cases=%zu failures=%zu time=%.2fs%s\n", id, r.name.c_str(),
                r.passed ? "PASS" : "FAIL", r.cases, r.failures, r.seconds, note.c_str());
    if (!r.detail.empty()) std::printf("    %s\n", r.detail.c_str());
    std::fflush(stdout);
  }
  std::printf("%d/%d criteria passed\n", kCriteria - failed, kCriteria);
  return failed == 0 ? EXIT_SUCCESS : EXIT_FAILURE;
}
