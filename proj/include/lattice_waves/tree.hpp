#pragma once

#include "lattice_waves/rational.hpp"

#include <compare>
#include <cstddef>
#include <functional>
#include <span>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

namespace lattice_waves {

// Vertex of the k-regular tree: a reduced word over k involutive generators
// (no letter repeated twice in a row). The empty word is the root.
class TreeVertex {
public:
  TreeVertex() = default;

  // Throws InvalidVertex for letters outside 1..k or adjacent repeats.
  static TreeVertex from_letters(std::span<const int> letters, int k);

  std::size_t depth() const { return word_.size(); }
  bool is_root() const { return word_.empty(); }
  int last() const { return word_.empty() ? 0 : static_cast<int>(word_.back()); }
  int max_letter() const;
  std::vector<int> letters() const;

  // Unchecked: the caller guarantees letter != last().
  TreeVertex child(int letter) const;
  TreeVertex parent() const;

  // Letters joined by ';' (the root is the empty string).
  std::string to_string() const;
  const std::string& key() const { return word_; }

  friend bool operator==(const TreeVertex&, const TreeVertex&) = default;
  friend auto operator<=>(const TreeVertex& a, const TreeVertex& b) {
    if (a.word_.size() != b.word_.size()) return a.word_.size() <=> b.word_.size();
    return a.word_ <=> b.word_;
  }

private:
  explicit TreeVertex(std::string word) : word_(std::move(word)) {}
  std::string word_;
};

struct TreeVertexHash {
  std::size_t operator()(const TreeVertex& v) const noexcept {
    return std::hash<std::string>{}(v.key());
  }
};

// d(x, y) = |x| + |y| - 2 |common prefix|.
std::size_t tree_distance(const TreeVertex& x, const TreeVertex& y);

// The k neighbours of x: its parent (unless x is the root) and every
// one-letter extension.
std::vector<TreeVertex> tree_neighbors(const TreeVertex& x, int k);

// Finitely supported function on the k-regular tree; zeros never stored.
class TreeFunction {
public:
  using Map = std::unordered_map<TreeVertex, Rational, TreeVertexHash>;

  explicit TreeFunction(int k);

  int k() const { return k_; }
  const Map& entries() const { return entries_; }
  std::size_t support_size() const { return entries_.size(); }
  bool is_zero() const { return entries_.empty(); }

  Rational operator()(const TreeVertex& x) const;
  void set(const TreeVertex& x, const Rational& value);
  void add(const TreeVertex& x, const Rational& value);

  std::vector<std::pair<TreeVertex, Rational>> sorted_entries() const;

  TreeFunction& operator+=(const TreeFunction& other);
  TreeFunction& operator*=(const Rational& c);

  friend bool operator==(const TreeFunction& a, const TreeFunction& b) {
    return a.k_ == b.k_ && a.entries_ == b.entries_;
  }

private:
  void require_vertex(const TreeVertex& x) const;

  int k_;
  Map entries_;
};

// S(r): 1 for r = 0, k (k-1)^{r-1} for r > 0.
Integer sphere_size(int k, int r);

// sums[s] = sum of f over the sphere of radius s around x, for s up to the
// largest distance from x to the support (empty when f = 0). Buckets the
// support; never enumerates a sphere.
std::vector<Rational> sphere_sums(const TreeFunction& f, const TreeVertex& x);

// M_f(x, r) = sphere sum / S(|r|); even in r.
Rational spherical_mean(const TreeFunction& f, const TreeVertex& x, int r);

// Radial profile (M_f(x, 0), M_f(x, 1), ...) up to the support radius.
std::vector<Rational> path_reduce(const TreeFunction& f, const TreeVertex& x);

// Coefficient of e^{ist} in a(t)^j, a(t) = -(k-1) e^{-it} + k - e^{it}.
// Throws IndexOutOfRange when |s| > j.
Integer alpha_coeff(int j, int s, int k);

// Radial weights w_0..w_S; weights[s] multiplies the sphere sum at radius s.
struct WeightTable {
  int k = 0;
  int n = 0;
  std::vector<Rational> weights;
};

// D[j][s] = (Delta^j delta_root)(y) for any y at distance s from the root,
// j = 0..j_max, s = 0..j.
std::vector<std::vector<Integer>> tree_laplacian_powers(int k, int j_max);

// Heat weights w_s = sum_j (-1)^j C(n, j) D[j][s], s = 0..n, so that
// u(x, n) = sum_s w_s * (sphere sum of f at radius s around x).
WeightTable tree_heat_weights(int k, int n);

// Wave weights for f and g:
//   w^{(1)}_s = sum_i (-1)^i C(n, 2i) D[i][s],     s <= floor(n/2)
//   w^{(2)}_s = sum_i (-1)^i C(n, 2i+1) D[i][s],   s <= floor((n-1)/2)
std::pair<WeightTable, WeightTable> tree_wave_weights(int k, int n);

// Weights built from the alpha coefficients: the solution of the drifted
// whole-line recurrence
//   v(r, n+1) = (k-1) v(r+1, n) + v(r-1, n) - (k-1) v(r, n)
// read at r = 0, started from the even extension of the radial profile (the
// wave table uses the matching second-order recurrence). They agree with the
// tree weights for k = 2 or n <= 1 only: the whole-line evolution does not
// keep the profile even, while spherical means are even at every time.
WeightTable line_heat_weights(int k, int n);
std::pair<WeightTable, WeightTable> line_wave_weights(int k, int n);

// sum_r M_g(x, r) over r in Z = g(x) + 2 sum_{r >= 1} M_g(x, r).
Rational wave_solvability_sum(const TreeFunction& g, const TreeVertex& x);

// u(x, n) at every x in eval_at (zero values omitted from the result).
TreeFunction tree_heat_solve(const TreeFunction& f, int n, std::span<const TreeVertex> eval_at);

// Checks the solvability sum at every evaluation vertex first; throws
// NotSolvableError naming the first failing vertex.
TreeFunction tree_wave_solve(const TreeFunction& f, const TreeFunction& g, int n,
                             std::span<const TreeVertex> eval_at);

} // namespace lattice_waves
