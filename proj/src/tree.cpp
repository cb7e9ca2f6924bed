#include "lattice_waves/tree.hpp"

#include "lattice_waves/error.hpp"

#include <algorithm>

namespace lattice_waves {

namespace {

void require_degree(int k) {
  if (k < 2) throw Error(ErrorCode::InvalidInput, "tree degree k must be at least 2");
}

void require_time(int n) {
  if (n < 0) throw Error(ErrorCode::InvalidInput, "time index must be non-negative");
}

// beta_s = (1 + (k-1)^s) / (k (k-1)^{s-1}) = (1 + (k-1)^s) / S(s), s >= 1.
Rational beta(int k, int s) {
  Rational b(Integer(1 + ipow(k - 1, static_cast<unsigned long>(s))), sphere_size(k, s));
  b.canonicalize();
  return b;
}

// Shared shape of every radial weight for s > 0:
//   beta_s sum_{l>=0} [ sum_{j>=l} (-1)^j C(n, top(j+s)) C(j+s, l) C(j+s, l+s) ] (k-1)^l
// where top(m) is m (heat), 2m (wave F) or 2m+1 (wave G). Terms vanish once
// top(j+s) > n.
template <typename Top>
Rational shell_weight(int k, int n, int s, Top top) {
  Integer total = 0;
  for (int l = 0; top(l + s) <= n; ++l) {
    Integer inner = 0;
    for (int j = l; top(j + s) <= n; ++j) {
      Integer term = binomial(n, top(j + s)) * binomial(j + s, l) * binomial(j + s, l + s);
      if (j % 2) inner -= term;
      else inner += term;
    }
    total += inner * ipow(k - 1, static_cast<unsigned long>(l));
  }
  return beta(k, s) * Rational(total);
}

// s = 0:  sum_{l>=1} [ sum_{j>=l} (-1)^j C(n, top(j)) C(j, l)^2 ] (k-1)^l
template <typename Top>
Integer center_tail(int k, int n, Top top) {
  Integer total = 0;
  for (int l = 1; top(l) <= n; ++l) {
    Integer inner = 0;
    for (int j = l; top(j) <= n; ++j) {
      Integer c = binomial(j, l);
      Integer term = binomial(n, top(j)) * c * c;
      if (j % 2) inner -= term;
      else inner += term;
    }
    total += inner * ipow(k - 1, static_cast<unsigned long>(l));
  }
  return total;
}

// sum_{j>=0} (-1)^j C(n, top(j))
template <typename Top>
Integer alternating_head(int n, Top top) {
  Integer total = 0;
  for (int j = 0; top(j) <= n; ++j) {
    if (j % 2) total -= binomial(n, top(j));
    else total += binomial(n, top(j));
  }
  return total;
}

} // namespace

TreeVertex TreeVertex::from_letters(std::span<const int> letters, int k) {
  std::string word;
  word.reserve(letters.size());
  int prev = 0;
  for (int c : letters) {
    if (c < 1 || c > k)
      throw Error(ErrorCode::InvalidVertex,
                  "letter " + std::to_string(c) + " outside 1.." + std::to_string(k));
    if (c == prev)
      throw Error(ErrorCode::InvalidVertex, "word repeats letter " + std::to_string(c));
    word.push_back(static_cast<char>(c));
    prev = c;
  }
  return TreeVertex(std::move(word));
}

int TreeVertex::max_letter() const {
  int m = 0;
  for (char c : word_) m = std::max(m, static_cast<int>(c));
  return m;
}

std::vector<int> TreeVertex::letters() const {
  return std::vector<int>(word_.begin(), word_.end());
}

TreeVertex TreeVertex::child(int letter) const {
  std::string w = word_;
  w.push_back(static_cast<char>(letter));
  return TreeVertex(std::move(w));
}

TreeVertex TreeVertex::parent() const {
  return TreeVertex(word_.empty() ? word_ : word_.substr(0, word_.size() - 1));
}

std::string TreeVertex::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < word_.size(); ++i) {
    if (i) out += ';';
    out += std::to_string(static_cast<int>(word_[i]));
  }
  return out;
}

std::size_t tree_distance(const TreeVertex& x, const TreeVertex& y) {
  const std::string& a = x.key();
  const std::string& b = y.key();
  auto [ia, ib] = std::mismatch(a.begin(), a.end(), b.begin(), b.end());
  const std::size_t common = static_cast<std::size_t>(ia - a.begin());
  return a.size() + b.size() - 2 * common;
}

std::vector<TreeVertex> tree_neighbors(const TreeVertex& x, int k) {
  std::vector<TreeVertex> out;
  out.reserve(static_cast<std::size_t>(k));
  if (!x.is_root()) out.push_back(x.parent());
  for (int c = 1; c <= k; ++c)
    if (c != x.last()) out.push_back(x.child(c));
  return out;
}

TreeFunction::TreeFunction(int k) : k_(k) { require_degree(k); }

void TreeFunction::require_vertex(const TreeVertex& x) const {
  if (x.max_letter() > k_)
    throw Error(ErrorCode::InvalidVertex,
                "vertex [" + x.to_string() + "] is not in the " + std::to_string(k_) +
                    "-regular tree");
}

Rational TreeFunction::operator()(const TreeVertex& x) const {
  auto it = entries_.find(x);
  return it == entries_.end() ? Rational(0) : it->second;
}

void TreeFunction::set(const TreeVertex& x, const Rational& value) {
  require_vertex(x);
  if (value == 0)
    entries_.erase(x);
  else
    entries_.insert_or_assign(x, value);
}

void TreeFunction::add(const TreeVertex& x, const Rational& value) {
  if (value == 0) return;
  require_vertex(x);
  auto [it, inserted] = entries_.try_emplace(x, value);
  if (!inserted) {
    it->second += value;
    if (it->second == 0) entries_.erase(it);
  }
}

std::vector<std::pair<TreeVertex, Rational>> TreeFunction::sorted_entries() const {
  std::vector<std::pair<TreeVertex, Rational>> out(entries_.begin(), entries_.end());
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  return out;
}

TreeFunction& TreeFunction::operator+=(const TreeFunction& other) {
  if (other.k_ != k_) throw Error(ErrorCode::GroupMismatch, "tree functions of different degree");
  for (const auto& [x, v] : other.entries_) add(x, v);
  return *this;
}

TreeFunction& TreeFunction::operator*=(const Rational& c) {
  if (c == 0) {
    entries_.clear();
    return *this;
  }
  for (auto& [x, v] : entries_) v *= c;
  return *this;
}

Integer sphere_size(int k, int r) {
  require_degree(k);
  if (r < 0) throw Error(ErrorCode::IndexOutOfRange, "sphere radius must be non-negative");
  if (r == 0) return 1;
  return Integer(k) * ipow(k - 1, static_cast<unsigned long>(r - 1));
}

std::vector<Rational> sphere_sums(const TreeFunction& f, const TreeVertex& x) {
  std::vector<Rational> sums;
  for (const auto& [y, v] : f.entries()) {
    const std::size_t d = tree_distance(x, y);
    if (d >= sums.size()) sums.resize(d + 1, 0);
    sums[d] += v;
  }
  return sums;
}

Rational spherical_mean(const TreeFunction& f, const TreeVertex& x, int r) {
  const int radius = r < 0 ? -r : r;
  Rational total = 0;
  for (const auto& [y, v] : f.entries())
    if (tree_distance(x, y) == static_cast<std::size_t>(radius)) total += v;
  if (total == 0) return 0;
  Rational mean = total / Rational(sphere_size(f.k(), radius));
  return mean;
}

std::vector<Rational> path_reduce(const TreeFunction& f, const TreeVertex& x) {
  std::vector<Rational> profile = sphere_sums(f, x);
  for (std::size_t r = 0; r < profile.size(); ++r)
    profile[r] /= Rational(sphere_size(f.k(), static_cast<int>(r)));
  return profile;
}

Integer alpha_coeff(int j, int s, int k) {
  require_degree(k);
  if (j < 0 || s > j || s < -j)
    throw Error(ErrorCode::IndexOutOfRange,
                "alpha index s=" + std::to_string(s) + " outside [-j, j] for j=" + std::to_string(j));
  const int q = s < 0 ? -s : s;
  Integer sum = 0;
  for (int l = 0; l <= j - q; ++l)
    sum += binomial(j, l + q) * binomial(j, l) * ipow(k - 1, static_cast<unsigned long>(l));
  if (s < 0) sum *= ipow(k - 1, static_cast<unsigned long>(q));
  if (q % 2) sum = -sum;
  return sum;
}

WeightTable line_heat_weights(int k, int n) {
  require_degree(k);
  require_time(n);
  WeightTable table{k, n, {}};
  auto top = [](int m) { return m; };
  // The closed form drops the l = 0 term of K_n(0) using sum_j (-1)^j C(n,j) = 0,
  // which only holds for n >= 1; at n = 0 the initial condition fixes w_0 = 1.
  table.weights.push_back(n == 0 ? Rational(1) : Rational(center_tail(k, n, top)));
  for (int s = 1; s <= n; ++s) table.weights.push_back(shell_weight(k, n, s, top));
  return table;
}

std::pair<WeightTable, WeightTable> line_wave_weights(int k, int n) {
  require_degree(k);
  require_time(n);
  auto even = [](int m) { return 2 * m; };
  auto odd = [](int m) { return 2 * m + 1; };

  WeightTable first{k, n, {}};
  first.weights.push_back(Rational(alternating_head(n, even) + center_tail(k, n, even)));
  for (int s = 1; 2 * s <= n; ++s) first.weights.push_back(shell_weight(k, n, s, even));

  WeightTable second{k, n, {}};
  if (n >= 1) {
    second.weights.push_back(Rational(alternating_head(n, odd) + center_tail(k, n, odd)));
    for (int s = 1; 2 * s + 1 <= n; ++s) second.weights.push_back(shell_weight(k, n, s, odd));
  }
  return {std::move(first), std::move(second)};
}

std::vector<std::vector<Integer>> tree_laplacian_powers(int k, int j_max) {
  require_degree(k);
  require_time(j_max);
  std::vector<std::vector<Integer>> powers{{Integer(1)}};
  for (int j = 1; j <= j_max; ++j) {
    const auto& h = powers.back();
    auto at = [&](int r) { return r < static_cast<int>(h.size()) ? h[r] : Integer(0); };
    std::vector<Integer> next(static_cast<std::size_t>(j) + 1);
    next[0] = k * (at(0) - at(1));
    for (int r = 1; r <= j; ++r) next[r] = k * at(r) - at(r - 1) - (k - 1) * at(r + 1);
    powers.push_back(std::move(next));
  }
  return powers;
}

namespace {

// sum over i with top(i) <= n of (-1)^i C(n, top(i)) D_i(s), s = 0..max_radius.
template <typename Top>
WeightTable binomial_weights(int k, int n, int max_radius, Top top) {
  int i_max = -1;
  while (top(i_max + 1) <= n) ++i_max;
  const auto powers = tree_laplacian_powers(k, std::max(i_max, 0));
  WeightTable table{k, n, {}};
  for (int s = 0; s <= max_radius; ++s) {
    Integer w = 0;
    for (int i = s; i <= i_max; ++i) {
      Integer term = binomial(n, top(i)) * powers[i][s];
      if (i % 2) w -= term;
      else w += term;
    }
    table.weights.emplace_back(w);
  }
  return table;
}

} // namespace

WeightTable tree_heat_weights(int k, int n) {
  require_degree(k);
  require_time(n);
  return binomial_weights(k, n, n, [](int i) { return i; });
}

std::pair<WeightTable, WeightTable> tree_wave_weights(int k, int n) {
  require_degree(k);
  require_time(n);
  WeightTable first = binomial_weights(k, n, n / 2, [](int i) { return 2 * i; });
  WeightTable second = n >= 1 ? binomial_weights(k, n, (n - 1) / 2, [](int i) { return 2 * i + 1; })
                              : WeightTable{k, n, {}};
  return {std::move(first), std::move(second)};
}

Rational wave_solvability_sum(const TreeFunction& g, const TreeVertex& x) {
  std::vector<Rational> profile = path_reduce(g, x);
  Rational total = 0;
  for (std::size_t r = 0; r < profile.size(); ++r) total += r == 0 ? profile[r] : 2 * profile[r];
  return total;
}

namespace {

Rational weighted_sum(const WeightTable& table, const std::vector<Rational>& sums) {
  Rational u = 0;
  const std::size_t m = std::min(table.weights.size(), sums.size());
  for (std::size_t s = 0; s < m; ++s) u += table.weights[s] * sums[s];
  return u;
}

} // namespace

TreeFunction tree_heat_solve(const TreeFunction& f, int n, std::span<const TreeVertex> eval_at) {
  const WeightTable w = tree_heat_weights(f.k(), n);
  TreeFunction out(f.k());
  for (const auto& x : eval_at) out.set(x, weighted_sum(w, sphere_sums(f, x)));
  return out;
}

TreeFunction tree_wave_solve(const TreeFunction& f, const TreeFunction& g, int n,
                             std::span<const TreeVertex> eval_at) {
  if (f.k() != g.k()) throw Error(ErrorCode::GroupMismatch, "f and g live on different trees");
  for (const auto& x : eval_at) {
    Rational cond = wave_solvability_sum(g, x);
    if (cond != 0) throw NotSolvableError(cond.get_str(), "[" + x.to_string() + "]");
  }
  const auto [w1, w2] = tree_wave_weights(f.k(), n);
  TreeFunction out(f.k());
  for (const auto& x : eval_at)
    out.set(x, weighted_sum(w1, sphere_sums(f, x)) + weighted_sum(w2, sphere_sums(g, x)));
  return out;
}

} // namespace lattice_waves
