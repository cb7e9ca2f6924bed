#include "lattice_waves/verify.hpp"

#include "lattice_waves/cayley.hpp"
#include "lattice_waves/coset.hpp"
#include "lattice_waves/error.hpp"
#include "lattice_waves/oracle.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <functional>
#include <set>
#include <sstream>

namespace lattice_waves::verify {

namespace {

struct CheckInfo {
  const char* name;
  const char* description;
};

constexpr CheckInfo kChecks[] = {
    {"cayley-heat", "closed-form heat solution equals direct stepping on random Cayley graphs"},
    {"cayley-wave", "closed-form wave solution equals direct stepping; nonzero-mean velocity is rejected"},
    {"kernels", "kernel identities: binomial form, masses, evenness, support radii"},
    {"coset", "coset solutions lift to the lifted recurrence and stay coset-constant"},
    {"darboux", "spherical mean of the tree Laplacian equals the radial combination"},
    {"tree", "tree weights, tree stepping and path stepping agree"},
    {"alpha", "alpha coefficients match the Laurent expansion of the symbol powers"},
    {"weights", "tree weight normalisations"},
    {"k2", "2-regular tree solvers reproduce the integer-line solvers"},
    {"quadrature", "trapezoid quadrature of the heat kernel on Z"},
    {"norms", "l2 heat and l1 wave growth bounds along oracle trajectories"},
    {"line", "alpha-coefficient weights equal drifted whole-line stepping from even profiles"},
};

constexpr int kCheckCount = static_cast<int>(std::size(kChecks));

class Tally {
public:
  void expect(bool ok, const std::function<std::string()>& describe) {
    ++cases_;
    if (ok) return;
    if (failures_++ == 0) detail_ = describe();
  }

  void fill(CheckResult& r) const {
    r.cases = cases_;
    r.failures = failures_;
    r.passed = failures_ == 0 && cases_ > 0;
    r.detail = detail_;
  }

private:
  std::size_t cases_ = 0;
  std::size_t failures_ = 0;
  std::string detail_;
};

std::int64_t uniform(Rng& rng, std::int64_t lo, std::int64_t hi) {
  return std::uniform_int_distribution<std::int64_t>(lo, hi)(rng);
}

std::size_t scaled(const Options& o, std::size_t count) {
  const auto c = static_cast<std::size_t>(std::llround(static_cast<double>(count) * o.scale));
  return std::max<std::size_t>(1, c);
}

int horizon(const Options& o, int limit) { return std::max(0, std::min(limit, o.max_n)); }

Rng rng_for(const Options& o, int id) { return Rng(o.seed * 1000003ULL + static_cast<std::uint64_t>(id)); }

std::vector<GroupSpec> cayley_groups() {
  return {make_group(1), make_group(2), make_group(1, {4})};
}

// Z^2 with long generators makes the kernels grow quadratically faster.
std::int64_t coordinate_bound(const GroupSpec& g) { return g.rank() >= 2 ? 1 : 2; }

struct CayleyInstance {
  GeneratorSet s;
  SupportedFunction f;
  SupportedFunction g;
};

std::vector<CayleyInstance> cayley_instances(Rng& rng, std::size_t count, bool solvable) {
  const auto groups = cayley_groups();
  std::vector<CayleyInstance> out;
  for (std::size_t i = 0; i < count; ++i) {
    const GroupSpec& grp = groups[i % groups.size()];
    GeneratorSet s = random_generator_set(grp, rng, 6, coordinate_bound(grp));
    SupportedFunction f = random_function(grp, rng, 8, 3);
    SupportedFunction g = random_function(grp, rng, 8, 3);
    if (solvable) {
      g = zero_mean(std::move(g));
    } else if (trivial_character_sum(g) == 0) {
      g.add(grp.identity(), 1);
    }
    out.push_back({std::move(s), std::move(f), std::move(g)});
  }
  return out;
}

std::string describe_instance(const CayleyInstance& inst, int n) {
  std::ostringstream os;
  os << inst.s.group().to_string() << " S={";
  for (std::size_t i = 0; i < inst.s.degree(); ++i)
    os << (i ? " " : "") << "(" << inst.s.elements()[i].to_string() << ")";
  os << "} n=" << n;
  return os.str();
}

Rational l1_norm(const SupportedFunction& u) {
  Rational t = 0;
  for (const auto& [x, v] : u.entries()) t += abs(v);
  return t;
}

Rational l2_norm_squared(const SupportedFunction& u) {
  Rational t = 0;
  for (const auto& [x, v] : u.entries()) t += v * v;
  return t;
}

bool is_even(const SupportedFunction& u) {
  const GroupSpec& g = u.group();
  for (const auto& [x, v] : u.entries())
    if (u(g.neg(x)) != v) return false;
  return true;
}

bool within_radius(const SupportedFunction& u, const std::unordered_map<GroupElement, int, GroupElementHash>& dist,
                   int radius) {
  for (const auto& [x, v] : u.entries()) {
    auto it = dist.find(x);
    if (it == dist.end() || it->second > radius) return false;
  }
  return true;
}

Rational profile_at_origin(const oracle::PathProfile& p) {
  auto it = p.find(0);
  return it == p.end() ? Rational(0) : it->second;
}

Rational radial_at_origin(const oracle::RadialProfile& p) { return p.empty() ? Rational(0) : p[0]; }

oracle::RadialProfile radial_sum(oracle::RadialProfile a, const oracle::RadialProfile& b) {
  if (a.size() < b.size()) a.resize(b.size(), 0);
  for (std::size_t r = 0; r < b.size(); ++r) a[r] += b[r];
  return a;
}

oracle::PathProfile profile_sum(oracle::PathProfile a, const oracle::PathProfile& b) {
  for (const auto& [r, v] : b) {
    a[r] += v;
    if (a[r] == 0) a.erase(r);
  }
  return a;
}

// ---------------------------------------------------------------- checks

void check_cayley_heat(const Options& o, Tally& t) {
  Rng rng = rng_for(o, 1);
  const int top = horizon(o, 20);
  for (const auto& inst : cayley_instances(rng, scaled(o, 200), true)) {
    const auto traj = oracle::cayley_heat_trajectory(inst.f, inst.s, top);
    for (int n = 0; n <= top; ++n)
      t.expect(heat_solve(inst.f, inst.s, n) == traj[n], [&] { return describe_instance(inst, n); });
  }
}

void check_cayley_wave(const Options& o, Tally& t) {
  Rng rng = rng_for(o, 2);
  const int top = horizon(o, 20);
  for (const auto& inst : cayley_instances(rng, scaled(o, 200), true)) {
    const auto traj = oracle::cayley_wave_trajectory(inst.f, inst.g, inst.s, top);
    for (int n = 0; n <= top; ++n)
      t.expect(wave_solve(inst.f, inst.g, inst.s, n) == traj[n],
               [&] { return describe_instance(inst, n); });
  }
  for (const auto& inst : cayley_instances(rng, scaled(o, 50), false)) {
    const int n = static_cast<int>(uniform(rng, 0, top));
    bool rejected = false;
    try {
      wave_solve(inst.f, inst.g, inst.s, n);
    } catch (const NotSolvableError&) {
      rejected = true;
    }
    t.expect(rejected, [&] { return "nonzero-mean velocity accepted: " + describe_instance(inst, n); });
  }
}

void check_kernels(const Options& o, Tally& t) {
  Rng rng = rng_for(o, 3);
  const int top = horizon(o, 20);
  const auto groups = cayley_groups();
  for (int i = 0; i < 10; ++i) {
    const GroupSpec& grp = groups[static_cast<std::size_t>(i) % groups.size()];
    const GeneratorSet s = random_generator_set(grp, rng, 6, coordinate_bound(grp));
    const auto dist = word_distances(s, top);
    CayleyInstance tag{s, SupportedFunction(grp), SupportedFunction(grp)};
    for (int n = 0; n <= top; ++n) {
      auto what = [&](const char* claim) { return std::string(claim) + ": " + describe_instance(tag, n); };
      const Kernel k = heat_kernel(s, n);
      const auto [f, g] = wave_kernels(s, n);
      t.expect(heat_kernel_binomial(s, n).data == k.data, [&] { return what("binomial form"); });
      t.expect(trivial_character_sum(k.data) == 1, [&] { return what("heat mass"); });
      t.expect(trivial_character_sum(f.data) == 1, [&] { return what("F mass"); });
      t.expect(trivial_character_sum(g.data) == n, [&] { return what("G mass"); });
      t.expect(is_even(k.data) && is_even(f.data) && is_even(g.data), [&] { return what("evenness"); });
      t.expect(within_radius(k.data, dist, n), [&] { return what("heat radius"); });
      t.expect(within_radius(f.data, dist, n / 2), [&] { return what("F radius"); });
      t.expect(n == 0 ? g.data.is_zero() : within_radius(g.data, dist, (n - 1) / 2),
               [&] { return what("G radius"); });
    }
  }
}

struct CosetConfig {
  GroupSpec group;
  std::vector<GroupElement> h;
  std::vector<GroupElement> s;
};

std::vector<CosetConfig> coset_configs() {
  const GroupSpec a = make_group(1, {4});
  const GroupSpec b = make_group(1, {2, 2});
  return {
      {a, {a.element({0, 2})}, {a.element({1, 0}), a.element({-1, 0}), a.element({0, 1}), a.element({0, 3})}},
      {b, {b.element({0, 1, 0})},
       {b.element({1, 0, 0}), b.element({-1, 0, 0}), b.element({0, 0, 1}), b.element({1, 1, 0}),
        b.element({-1, 1, 0})}},
      {b, {b.element({0, 1, 1})},
       {b.element({1, 0, 0}), b.element({-1, 0, 0}), b.element({0, 1, 0}), b.element({0, 0, 1})}},
  };
}

void check_coset(const Options& o, Tally& t) {
  Rng rng = rng_for(o, 4);
  const int top = horizon(o, 15);
  int config_index = 0;
  for (const auto& cfg : coset_configs()) {
    ++config_index;
    const CosetProblem p = build_coset_problem(cfg.group, cfg.h, cfg.s);
    const GroupSpec& q = p.quotient_group();
    for (std::size_t trial = 0; trial < scaled(o, 10); ++trial) {
      const SupportedFunction f = random_function(q, rng, 6, 3);
      const SupportedFunction g = zero_mean(random_function(q, rng, 6, 3));
      auto what = [&](const char* claim, int n) {
        return std::string(claim) + ": coset config " + std::to_string(config_index) + " n=" + std::to_string(n);
      };

      SupportedFunction u = lift(f, p);
      for (int n = 0; n <= top; ++n) {
        if (n > 0) u = oracle::lifted_coset_heat_step(u, p);
        t.expect(oracle::is_coset_constant(u, p), [&] { return what("heat iterate not coset-constant", n); });
        t.expect(lift(coset_heat_solve(f, p, n), p) == u, [&] { return what("heat lift mismatch", n); });
      }

      SupportedFunction prev = lift(f, p);
      SupportedFunction curr = lift(f, p) + lift(g, p);
      for (int n = 0; n <= top; ++n) {
        const SupportedFunction& un = n == 0 ? prev : curr;
        if (n >= 2) {
          SupportedFunction next = oracle::lifted_coset_wave_step(prev, curr, p);
          prev = std::move(curr);
          curr = std::move(next);
        }
        const SupportedFunction& now = n >= 2 ? curr : un;
        t.expect(oracle::is_coset_constant(now, p), [&] { return what("wave iterate not coset-constant", n); });
        t.expect(lift(coset_wave_solve(f, g, p, n), p) == now, [&] { return what("wave lift mismatch", n); });
      }
    }
  }
}

void check_darboux(const Options& o, Tally& t) {
  Rng rng = rng_for(o, 5);
  for (int k : {3, 4, 5}) {
    for (std::size_t trial = 0; trial < scaled(o, 100); ++trial) {
      const TreeFunction phi = random_tree_function(k, rng, 10, 5);
      const TreeVertex x = random_vertex(k, rng, 3);
      const int r = static_cast<int>(uniform(rng, 0, 8));
      const Rational lhs = spherical_mean(oracle::tree_laplacian(phi), x, r);
      const Rational rhs = k * spherical_mean(phi, x, r) - (k - 1) * spherical_mean(phi, x, r + 1) -
                           spherical_mean(phi, x, r - 1);
      t.expect(lhs == rhs, [&] {
        return "k=" + std::to_string(k) + " x=[" + x.to_string() + "] r=" + std::to_string(r) +
               " lhs=" + lhs.get_str() + " rhs=" + rhs.get_str();
      });
    }
  }
}

std::vector<TreeVertex> distinct_vertices(int k, Rng& rng, std::size_t count, int max_depth) {
  std::set<TreeVertex> chosen{TreeVertex{}};
  for (int attempt = 0; chosen.size() < count && attempt < 100; ++attempt)
    chosen.insert(random_vertex(k, rng, max_depth));
  return {chosen.begin(), chosen.end()};
}

void check_tree(const Options& o, Tally& t) {
  Rng rng = rng_for(o, 6);
  const int top = horizon(o, 12);
  for (int k : {2, 3, 4, 5}) {
    for (std::size_t trial = 0; trial < scaled(o, 50); ++trial) {
      const TreeFunction f = random_tree_function(k, rng, 8, 3);
      auto what = [&](const char* claim, const TreeVertex& x, int n) {
        return std::string(claim) + ": k=" + std::to_string(k) + " x=[" + x.to_string() +
               "] n=" + std::to_string(n);
      };

      const std::vector<TreeVertex> eval = distinct_vertices(k, rng, 3, 2);
      const auto heat_traj = oracle::tree_heat_trajectory(f, top, eval);
      std::vector<oracle::RadialProfile> paths;
      for (const auto& x : eval) paths.push_back(path_reduce(f, x));
      for (int n = 0; n <= top; ++n) {
        if (n > 0)
          for (auto& p : paths) p = oracle::radial_heat_step(p, k);
        const TreeFunction closed = tree_heat_solve(f, n, eval);
        for (std::size_t i = 0; i < eval.size(); ++i) {
          const Rational c = closed(eval[i]);
          t.expect(c == heat_traj[n](eval[i]), [&] { return what("heat weights vs stepping", eval[i], n); });
          t.expect(c == radial_at_origin(paths[i]), [&] { return what("heat weights vs path", eval[i], n); });
        }
      }

      const TreeFunction g0 = random_tree_function(k, rng, 8, 3);
      for (const auto& x : distinct_vertices(k, rng, 2, 2)) {
        TreeFunction g = g0;
        g.add(x, -wave_solvability_sum(g0, x));
        const std::vector<TreeVertex> at{x};
        const auto wave_traj = oracle::tree_wave_trajectory(f, g, top, at);
        oracle::RadialProfile prev = path_reduce(f, x);
        oracle::RadialProfile curr = radial_sum(prev, path_reduce(g, x));
        for (int n = 0; n <= top; ++n) {
          if (n >= 2) {
            oracle::RadialProfile next = oracle::radial_wave_step(prev, curr, k);
            prev = std::move(curr);
            curr = std::move(next);
          }
          const Rational path_value = radial_at_origin(n == 0 ? prev : curr);
          const Rational c = tree_wave_solve(f, g, n, at)(x);
          t.expect(c == wave_traj[n](x), [&] { return what("wave weights vs stepping", x, n); });
          t.expect(c == path_value, [&] { return what("wave weights vs path", x, n); });
        }
      }
    }
  }
}

void check_alpha(const Options& o, Tally& t) {
  const int top = horizon(o, 12);
  for (int k = 2; k <= 6; ++k) {
    for (int j = 0; j <= top; ++j) {
      const auto expansion = oracle::symbol_power(k, j);
      for (int s = -j; s <= j; ++s) {
        auto it = expansion.find(s);
        const Integer expected = it == expansion.end() ? Integer(0) : it->second;
        const Integer a = alpha_coeff(j, s, k);
        auto where = [&] {
          return "k=" + std::to_string(k) + " j=" + std::to_string(j) + " s=" + std::to_string(s);
        };
        t.expect(a == expected, [&] { return "expansion mismatch " + where(); });
        if (s > 0) {
          const Integer mirrored = alpha_coeff(j, -s, k);
          t.expect(mirrored == a * ipow(k - 1, static_cast<unsigned long>(s)),
                   [&] { return "reflection mismatch " + where(); });
        }
      }
      t.expect(expansion.empty() || (expansion.begin()->first >= -j && expansion.rbegin()->first <= j),
               [&] { return "expansion degree exceeds j=" + std::to_string(j); });
    }
  }
}

Rational weighted_mass(const WeightTable& w) {
  Rational total = 0;
  for (std::size_t s = 0; s < w.weights.size(); ++s)
    total += w.weights[s] * Rational(sphere_size(w.k, static_cast<int>(s)));
  return total;
}

void check_weights(const Options& o, Tally& t) {
  const int top = horizon(o, 20);
  for (int k = 2; k <= 6; ++k) {
    for (int n = 0; n <= top; ++n) {
      auto where = [&](const char* which) {
        return std::string(which) + " k=" + std::to_string(k) + " n=" + std::to_string(n);
      };
      t.expect(weighted_mass(tree_heat_weights(k, n)) == 1, [&] { return where("heat mass"); });
      const auto [w1, w2] = tree_wave_weights(k, n);
      t.expect(weighted_mass(w1) == 1, [&] { return where("wave F mass"); });
      t.expect(weighted_mass(w2) == n, [&] { return where("wave G mass"); });
      t.expect(weighted_mass(line_heat_weights(k, n)) == 1, [&] { return where("line heat mass"); });
      const auto [l1, l2] = line_wave_weights(k, n);
      t.expect(weighted_mass(l1) == 1, [&] { return where("line wave F mass"); });
      t.expect(weighted_mass(l2) == n, [&] { return where("line wave G mass"); });
    }
  }
}

TreeFunction to_tree(const SupportedFunction& f) {
  TreeFunction out(2);
  for (const auto& [x, v] : f.entries()) out.add(integer_to_vertex(x.coords()[0]), v);
  return out;
}

void check_k2(const Options& o, Tally& t) {
  Rng rng = rng_for(o, 9);
  const int top = horizon(o, 15);
  const GroupSpec z = make_group(1);
  const GeneratorSet s = validate_generators(z, {z.element({1}), z.element({-1})});
  for (std::size_t trial = 0; trial < scaled(o, 20); ++trial) {
    const SupportedFunction f = random_function(z, rng, 6, 3);
    const SupportedFunction g = zero_mean(random_function(z, rng, 6, 3));
    const TreeFunction tf = to_tree(f);
    const TreeFunction tg = to_tree(g);
    for (int n = 0; n <= top; ++n) {
      std::vector<TreeVertex> eval;
      for (std::int64_t m = -(3 + n); m <= 3 + n; ++m) eval.push_back(integer_to_vertex(m));
      const SupportedFunction heat = heat_solve(f, s, n);
      const SupportedFunction wave = wave_solve(f, g, s, n);
      const TreeFunction theat = tree_heat_solve(tf, n, eval);
      const TreeFunction twave = tree_wave_solve(tf, tg, n, eval);
      for (const auto& x : eval) {
        const GroupElement zx = z.element({vertex_to_integer(x)});
        auto where = [&](const char* which) {
          return std::string(which) + " at " + zx.to_string() + " n=" + std::to_string(n);
        };
        t.expect(theat(x) == heat(zx), [&] { return where("heat"); });
        t.expect(twave(x) == wave(zx), [&] { return where("wave"); });
      }
    }
  }
}

void check_quadrature(const Options& o, Tally& t) {
  const int top = horizon(o, 10);
  const GroupSpec z = make_group(1);
  const GeneratorSet s = validate_generators(z, {z.element({1}), z.element({-1})});
  for (int n = 0; n <= top; ++n) {
    const Kernel k = heat_kernel(s, n);
    for (long r = -n; r <= n; ++r) {
      const double exact = to_double(k.data(z.element({r})));
      const double approx = oracle::quadrature_kernel(s, n, r);
      t.expect(std::abs(approx - exact) <= 1e-9, [&] {
        std::ostringstream os;
        os << "n=" << n << " r=" << r << " exact=" << exact << " quadrature=" << approx;
        return os.str();
      });
    }
  }
}

void check_norms(const Options& o, Tally& t) {
  const int top = horizon(o, 20);
  {
    Rng rng = rng_for(o, 1);
    for (const auto& inst : cayley_instances(rng, scaled(o, 200), true)) {
      const Rational factor = Rational(2 * static_cast<long>(inst.s.degree()) - 1);
      const auto traj = oracle::cayley_heat_trajectory(inst.f, inst.s, top);
      for (int n = 0; n + 1 <= top; ++n)
        t.expect(l2_norm_squared(traj[n + 1]) <= factor * factor * l2_norm_squared(traj[n]),
                 [&] { return "heat l2 bound: " + describe_instance(inst, n + 1); });
    }
  }
  {
    Rng rng = rng_for(o, 2);
    for (const auto& inst : cayley_instances(rng, scaled(o, 200), true)) {
      const Rational factor = Rational(2 * static_cast<long>(inst.s.degree()) + 1);
      const auto traj = oracle::cayley_wave_trajectory(inst.f, inst.g, inst.s, top);
      for (int n = 0; n + 2 <= top; ++n)
        t.expect(l1_norm(traj[n + 2]) <= 2 * l1_norm(traj[n + 1]) + factor * l1_norm(traj[n]),
                 [&] { return "wave l1 bound: " + describe_instance(inst, n + 2); });
    }
  }
}

Rational line_value(const WeightTable& w, const std::vector<Rational>& radial) {
  Rational u = 0;
  for (std::size_t s = 0; s < std::min(w.weights.size(), radial.size()); ++s)
    u += w.weights[s] * Rational(sphere_size(w.k, static_cast<int>(s))) * radial[s];
  return u;
}

void check_line(const Options& o, Tally& t) {
  Rng rng = rng_for(o, 12);
  const int top = horizon(o, 12);
  for (int k = 2; k <= 6; ++k) {
    for (std::size_t trial = 0; trial < scaled(o, 10); ++trial) {
      const TreeFunction f = random_tree_function(k, rng, 8, 3);
      const TreeFunction g = random_tree_function(k, rng, 8, 3);
      const std::vector<Rational> fr = path_reduce(f, TreeVertex{});
      const std::vector<Rational> gr = path_reduce(g, TreeVertex{});
      oracle::PathProfile heat = oracle::even_profile(fr);
      oracle::PathProfile prev = heat;
      oracle::PathProfile curr = profile_sum(prev, oracle::even_profile(gr));
      for (int n = 0; n <= top; ++n) {
        auto where = [&](const char* which) {
          return std::string(which) + " k=" + std::to_string(k) + " n=" + std::to_string(n);
        };
        if (n > 0) heat = oracle::path_heat_step(heat, k);
        if (n >= 2) {
          oracle::PathProfile next = oracle::path_wave_step(prev, curr, k);
          prev = std::move(curr);
          curr = std::move(next);
        }
        t.expect(line_value(line_heat_weights(k, n), fr) == profile_at_origin(heat), [&] { return where("heat"); });
        const auto [w1, w2] = line_wave_weights(k, n);
        t.expect(line_value(w1, fr) + line_value(w2, gr) == profile_at_origin(n == 0 ? prev : curr),
                 [&] { return where("wave"); });
      }
    }
  }
}

using CheckFn = void (*)(const Options&, Tally&);

constexpr CheckFn kCheckFns[] = {
    check_cayley_heat, check_cayley_wave, check_kernels, check_coset, check_darboux,  check_tree,
    check_alpha,       check_weights,     check_k2,      check_quadrature, check_norms, check_line,
};

static_assert(std::size(kCheckFns) == std::size(kChecks));

void require_id(int id) {
  if (id < 1 || id > kCheckCount)
    throw Error(ErrorCode::IndexOutOfRange, "no check with id " + std::to_string(id));
}

} // namespace

int check_count() { return kCheckCount; }

std::string check_name(int id) {
  require_id(id);
  return kChecks[id - 1].name;
}

std::string check_description(int id) {
  require_id(id);
  return kChecks[id - 1].description;
}

CheckResult run_check(int id, const Options& options) {
  require_id(id);
  CheckResult result;
  result.id = id;
  result.name = kChecks[id - 1].name;
  result.description = kChecks[id - 1].description;
  Tally tally;
  const auto start = std::chrono::steady_clock::now();
  try {
    kCheckFns[id - 1](options, tally);
    tally.fill(result);
  } catch (const std::exception& e) {
    tally.fill(result);
    result.passed = false;
    result.detail = std::string("unexpected exception: ") + e.what();
  }
  result.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return result;
}

std::vector<std::string> suite_names() {
  std::vector<std::string> names{"all", "cayley", "coset", "tree", "quadrature"};
  for (const auto& c : kChecks)
    if (std::find(names.begin(), names.end(), c.name) == names.end()) names.emplace_back(c.name);
  return names;
}

std::vector<int> suite_checks(const std::string& suite) {
  if (suite == "all") {
    std::vector<int> ids;
    for (int i = 1; i <= kCheckCount; ++i) ids.push_back(i);
    return ids;
  }
  if (suite == "cayley") return {1, 2, 3, 11};
  if (suite == "coset") return {4};
  if (suite == "tree") return {5, 6, 7, 8, 9, 12};
  for (int i = 1; i <= kCheckCount; ++i)
    if (suite == kChecks[i - 1].name) return {i};
  throw Error(ErrorCode::InvalidInput, "unknown suite '" + suite + "'");
}

std::vector<CheckResult> run_suite(const std::string& suite, const Options& options) {
  std::vector<CheckResult> results;
  for (int id : suite_checks(suite)) results.push_back(run_check(id, options));
  return results;
}

// ---------------------------------------------------------------- generators

GroupElement random_element(const GroupSpec& g, Rng& rng, std::int64_t bound) {
  std::vector<std::int64_t> coords;
  for (std::size_t i = 0; i < g.rank(); ++i) coords.push_back(uniform(rng, -bound, bound));
  for (std::int64_t m : g.moduli()) coords.push_back(uniform(rng, 0, m - 1));
  return g.element_from_coords(coords);
}

Rational random_rational(Rng& rng) {
  std::int64_t num = 0;
  while (num == 0) num = uniform(rng, -9, 9);
  Rational q(Integer(static_cast<long>(num)), Integer(static_cast<long>(uniform(rng, 1, 6))));
  q.canonicalize();
  return q;
}

GeneratorSet random_generator_set(const GroupSpec& g, Rng& rng, std::size_t max_size,
                                  std::int64_t bound) {
  const std::size_t min_size = std::min<std::size_t>(max_size, std::max<std::size_t>(1, 2 * g.rank()));
  for (int attempt = 0; attempt < 10000; ++attempt) {
    const auto target = static_cast<std::size_t>(uniform(rng, static_cast<std::int64_t>(min_size),
                                                          static_cast<std::int64_t>(max_size)));
    std::vector<GroupElement> elems;
    for (int tries = 0; elems.size() < target && tries < 64; ++tries) {
      const GroupElement x = random_element(g, rng, bound);
      if (x.is_zero() || std::find(elems.begin(), elems.end(), x) != elems.end()) continue;
      const GroupElement nx = g.neg(x);
      if (nx == x) {
        elems.push_back(x);
      } else if (elems.size() + 2 <= target) {
        elems.push_back(x);
        elems.push_back(nx);
      }
    }
    if (!elems.empty() && generates(g, elems)) return validate_generators(g, std::move(elems));
  }
  throw Error(ErrorCode::DoesNotGenerate, "could not sample a generating set for " + g.to_string());
}

SupportedFunction random_function(const GroupSpec& g, Rng& rng, std::size_t max_support,
                                  std::int64_t bound) {
  SupportedFunction f(g);
  const auto count = uniform(rng, 1, static_cast<std::int64_t>(max_support));
  for (std::int64_t i = 0; i < count; ++i) f.set(random_element(g, rng, bound), random_rational(rng));
  return f;
}

SupportedFunction zero_mean(SupportedFunction f) {
  const Rational total = trivial_character_sum(f);
  if (total == 0) return f;
  const GroupElement anchor = f.is_zero() ? f.group().identity() : f.sorted_entries().front().first;
  f.add(anchor, -total);
  return f;
}

TreeVertex random_vertex(int k, Rng& rng, int max_depth) {
  const auto depth = uniform(rng, 0, max_depth);
  std::vector<int> letters;
  for (std::int64_t i = 0; i < depth; ++i) {
    int letter = 0;
    do letter = static_cast<int>(uniform(rng, 1, k));
    while (!letters.empty() && letter == letters.back());
    letters.push_back(letter);
  }
  return TreeVertex::from_letters(letters, k);
}

TreeFunction random_tree_function(int k, Rng& rng, std::size_t max_support, int max_depth) {
  TreeFunction f(k);
  const auto count = uniform(rng, 1, static_cast<std::int64_t>(max_support));
  for (std::int64_t i = 0; i < count; ++i) f.set(random_vertex(k, rng, max_depth), random_rational(rng));
  return f;
}

TreeVertex integer_to_vertex(std::int64_t n) {
  std::vector<int> letters;
  const int first = n > 0 ? 1 : 2;
  const std::int64_t len = n < 0 ? -n : n;
  for (std::int64_t i = 0; i < len; ++i) letters.push_back(i % 2 == 0 ? first : 3 - first);
  return TreeVertex::from_letters(letters, 2);
}

std::int64_t vertex_to_integer(const TreeVertex& v) {
  if (v.is_root()) return 0;
  const auto len = static_cast<std::int64_t>(v.depth());
  return v.letters().front() == 1 ? len : -len;
}

} // namespace lattice_waves::verify
