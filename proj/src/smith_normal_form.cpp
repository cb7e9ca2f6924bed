#include "lattice_waves/smith_normal_form.hpp"

#include <utility>

namespace lattice_waves {

namespace {

IntMatrix identity(std::size_t n) {
  IntMatrix m(n, std::vector<Integer>(n, 0));
  for (std::size_t i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

// Column operations are mirrored on V (same column op) and on V^{-1}
// (inverse row op), so V * V^{-1} = I holds throughout.
struct Reducer {
  IntMatrix a;
  IntMatrix v;
  IntMatrix vinv;
  std::size_t rows;
  std::size_t cols;

  void swap_rows(std::size_t i, std::size_t j) { std::swap(a[i], a[j]); }

  void swap_cols(std::size_t i, std::size_t j) {
    if (i == j) return;
    for (auto& row : a) std::swap(row[i], row[j]);
    for (auto& row : v) std::swap(row[i], row[j]);
    std::swap(vinv[i], vinv[j]);
  }

  // row i -= q * row j
  void sub_row(std::size_t i, std::size_t j, const Integer& q) {
    for (std::size_t c = 0; c < cols; ++c) a[i][c] -= q * a[j][c];
  }

  // col i -= q * col j
  void sub_col(std::size_t i, std::size_t j, const Integer& q) {
    for (auto& row : a) row[i] -= q * row[j];
    for (auto& row : v) row[i] -= q * row[j];
    for (std::size_t c = 0; c < cols; ++c) vinv[j][c] += q * vinv[i][c];
  }

  // Moves the smallest nonzero entry of the trailing block to (t, t).
  bool pivot_block(std::size_t t) {
    std::size_t bi = rows, bj = cols;
    for (std::size_t i = t; i < rows; ++i)
      for (std::size_t j = t; j < cols; ++j)
        if (a[i][j] != 0 && (bi == rows || abs(a[i][j]) < abs(a[bi][bj]))) {
          bi = i;
          bj = j;
        }
    if (bi == rows) return false;
    swap_rows(t, bi);
    swap_cols(t, bj);
    return true;
  }

  // Smallest nonzero entry in row t / column t (outside the pivot) to (t, t).
  void pivot_cross(std::size_t t) {
    std::size_t bi = t, bj = t;
    for (std::size_t i = t + 1; i < rows; ++i)
      if (a[i][t] != 0 && abs(a[i][t]) < abs(a[bi][bj])) {
        bi = i;
        bj = t;
      }
    for (std::size_t j = t + 1; j < cols; ++j)
      if (a[t][j] != 0 && abs(a[t][j]) < abs(a[bi][bj])) {
        bi = t;
        bj = j;
      }
    swap_rows(t, bi);
    swap_cols(t, bj);
  }

  void reduce(std::size_t t) {
    for (;;) {
      bool clean = true;
      for (std::size_t i = t + 1; i < rows; ++i) {
        if (a[i][t] == 0) continue;
        Integer q = a[i][t] / a[t][t];
        sub_row(i, t, q);
        if (a[i][t] != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < cols; ++j) {
        if (a[t][j] == 0) continue;
        Integer q = a[t][j] / a[t][t];
        sub_col(j, t, q);
        if (a[t][j] != 0) clean = false;
      }
      if (!clean) {
        pivot_cross(t);
        continue;
      }
      // Divisibility: fold an offending row into row t and go again.
      bool divides = true;
      for (std::size_t i = t + 1; i < rows && divides; ++i)
        for (std::size_t j = t + 1; j < cols; ++j)
          if (a[i][j] % a[t][t] != 0) {
            for (std::size_t c = 0; c < cols; ++c) a[t][c] += a[i][c];
            divides = false;
            break;
          }
      if (divides) break;
    }
    if (a[t][t] < 0)
      for (std::size_t c = 0; c < cols; ++c) a[t][c] = -a[t][c];
  }
};

} // namespace

SmithForm smith_normal_form(IntMatrix a, std::size_t cols) {
  Reducer r{std::move(a), identity(cols), identity(cols), 0, cols};
  r.rows = r.a.size();
  for (auto& row : r.a) row.resize(cols, 0);

  const std::size_t n = std::min(r.rows, cols);
  SmithForm out;
  out.diagonal.assign(n, 0);
  for (std::size_t t = 0; t < n; ++t) {
    if (!r.pivot_block(t)) break;
    r.reduce(t);
  }
  for (std::size_t t = 0; t < n; ++t) out.diagonal[t] = r.a[t][t];
  out.column_transform = std::move(r.v);
  out.column_inverse = std::move(r.vinv);
  return out;
}

std::vector<Integer> row_times(const std::vector<Integer>& x, const IntMatrix& m) {
  const std::size_t cols = m.empty() ? 0 : m.front().size();
  std::vector<Integer> y(cols, 0);
  for (std::size_t r = 0; r < x.size(); ++r)
    for (std::size_t c = 0; c < cols; ++c) y[c] += x[r] * m[r][c];
  return y;
}

} // namespace lattice_waves
