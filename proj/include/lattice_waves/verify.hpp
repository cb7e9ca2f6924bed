#pragma once

#include "lattice_waves/abelian_group.hpp"
#include "lattice_waves/supported_function.hpp"
#include "lattice_waves/tree.hpp"

#include <cstdint>
#include <random>
#include <string>
#include <vector>

namespace lattice_waves::verify {

using Rng = std::mt19937_64;

struct Options {
  int max_n = 1000;               // caps every per-check time horizon
  std::uint64_t seed = 20240611;
  double scale = 1.0;             // multiplies every instance count (at least 1 remains)
};

struct CheckResult {
  int id = 0;
  std::string name;
  std::string description;
  bool passed = false;
  std::size_t cases = 0;          // individual comparisons performed
  std::size_t failures = 0;
  double seconds = 0.0;
  std::string detail;             // first failure, if any
};

// Check ids run from 1 to check_count().
int check_count();
std::string check_name(int id);
std::string check_description(int id);
CheckResult run_check(int id, const Options& options);

// Suites: "all", "cayley", "coset", "tree", "quadrature", or any single check name.
std::vector<int> suite_checks(const std::string& suite);
std::vector<std::string> suite_names();
std::vector<CheckResult> run_suite(const std::string& suite, const Options& options);

// Random instance helpers, shared with the property tests.
GroupElement random_element(const GroupSpec& g, Rng& rng, std::int64_t bound);
Rational random_rational(Rng& rng);
GeneratorSet random_generator_set(const GroupSpec& g, Rng& rng, std::size_t max_size,
                                  std::int64_t bound);
SupportedFunction random_function(const GroupSpec& g, Rng& rng, std::size_t max_support,
                                  std::int64_t bound);
// Shifts one value so that the trivial-character sum becomes zero.
SupportedFunction zero_mean(SupportedFunction f);
TreeVertex random_vertex(int k, Rng& rng, int max_depth);
TreeFunction random_tree_function(int k, Rng& rng, std::size_t max_support, int max_depth);

// Integer n on Z <-> the alternating word of length |n| starting with
// letter 1 (n > 0) or letter 2 (n < 0) in the 2-regular tree.
TreeVertex integer_to_vertex(std::int64_t n);
std::int64_t vertex_to_integer(const TreeVertex& v);

} // namespace lattice_waves::verify
