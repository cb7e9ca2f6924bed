#pragma once

#include "lattice_waves/rational.hpp"

#include <vector>

namespace lattice_waves {

using IntMatrix = std::vector<std::vector<Integer>>;

// Result of diagonalising an integer matrix A (rows are relations) as
// U * A * V = diag(d_0, d_1, ...), with U, V unimodular and d_i | d_{i+1}.
// Only the column transform is kept: a row vector x lies in the row lattice
// of A iff (x * V)_i is divisible by d_i for every i (and vanishes where the
// diagonal has no entry or a zero entry).
struct SmithForm {
  std::vector<Integer> diagonal;  // length min(rows, cols), non-negative
  IntMatrix column_transform;     // V, cols x cols
  IntMatrix column_inverse;       // V^{-1}
};

SmithForm smith_normal_form(IntMatrix a, std::size_t cols);

// x * M for a row vector x.
std::vector<Integer> row_times(const std::vector<Integer>& x, const IntMatrix& m);

} // namespace lattice_waves
