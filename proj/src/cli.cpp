#include "lattice_waves/cli.hpp"

#include "lattice_waves/cayley.hpp"
#include "lattice_waves/coset.hpp"
#include "lattice_waves/error.hpp"
#include "lattice_waves/io.hpp"
#include "lattice_waves/oracle.hpp"
#include "lattice_waves/tree.hpp"
#include "lattice_waves/verify.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <map>
#include <optional>
#include <ostream>
#include <set>
#include <sstream>

namespace lattice_waves::cli {

namespace {

using io::Json;

constexpr std::size_t kMaxDefaultTreeBall = 1'000'000;
constexpr std::size_t kReportedMismatches = 20;

struct Settings {
  std::string problem;
  std::string out;
  std::optional<int> n;
  std::string suite = "all";
  std::optional<int> max_n;
  std::uint64_t seed = verify::Options{}.seed;
  double scale = 1.0;
  std::string kind;
  bool inject_fault = false;
};

[[noreturn]] void invalid(const std::string& what) { throw Error(ErrorCode::InvalidInput, what); }

const Json& field(const Json& j, const char* name) {
  if (!j.is_object() || !j.contains(name)) invalid(std::string("problem is missing field '") + name + "'");
  return j.at(name);
}

int int_field(const Json& j, const char* name) {
  const Json& v = field(j, name);
  if (!v.is_number_integer()) invalid(std::string("field '") + name + "' must be an integer");
  return v.get<int>();
}

std::string string_field(const Json& j, const char* name, const std::string& fallback) {
  if (!j.contains(name)) return fallback;
  if (!j.at(name).is_string()) invalid(std::string("field '") + name + "' must be a string");
  return j.at(name).get<std::string>();
}

Json load_problem(const Settings& s) {
  if (s.problem.empty()) invalid("--problem is required");
  std::ifstream in(s.problem);
  if (!in) invalid("cannot read problem file '" + s.problem + "'");
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    invalid(std::string("malformed JSON: ") + e.what());
  }
}

int time_index(const Json& j, const Settings& s) {
  const int n = s.n ? *s.n : int_field(j, "n");
  if (n < 0) invalid("n must be non-negative");
  return n;
}

// Writes to --out when given, to stdout otherwise.
class Sink {
public:
  Sink(const std::string& path, std::ostream& fallback) : fallback_(fallback) {
    if (path.empty()) return;
    file_.open(path);
    if (!file_) invalid("cannot write output file '" + path + "'");
  }

  std::ostream& stream() { return file_.is_open() ? static_cast<std::ostream&>(file_) : fallback_; }

private:
  std::ofstream file_;
  std::ostream& fallback_;
};

std::string comment(const std::string& kind, int n, int k) {
  return "kind=" + kind + " n=" + std::to_string(n) + " k=" + std::to_string(k);
}

std::string fraction(const Rational& q) { return numerator_string(q) + "/" + denominator_string(q); }

// ------------------------------------------------------------ abelian setup

GeneratorSet generator_set(const Json& j, const GroupSpec& g) {
  return validate_generators(g, io::elements_from_json(g, field(j, "generators")));
}

std::optional<std::vector<GroupElement>> eval_keys(const Json& j, const GeneratorSet& s,
                                                   const std::function<GroupElement(const Json&)>& read) {
  if (!j.contains("eval")) return std::nullopt;
  const Json& e = j.at("eval");
  std::vector<GroupElement> keys;
  if (e.contains("vertices")) {
    if (!e.at("vertices").is_array()) invalid("eval.vertices must be an array");
    for (const auto& v : e.at("vertices")) keys.push_back(read(v));
    return keys;
  }
  if (e.contains("ball")) {
    const Json& ball = e.at("ball");
    const GroupElement center = read(field(ball, "center"));
    const int radius = int_field(ball, "radius");
    if (radius < 0) invalid("eval ball radius must be non-negative");
    const GroupSpec& g = s.group();
    for (const auto& [x, d] : word_distances(s, radius)) keys.push_back(g.add(center, x));
    std::sort(keys.begin(), keys.end());
    return keys;
  }
  invalid("eval must contain 'vertices' or 'ball'");
}

void emit(std::ostream& out, const SupportedFunction& u, const std::optional<std::vector<GroupElement>>& keys,
          const std::string& header) {
  if (keys) io::write_csv_rows(out, u, *keys, header);
  else io::write_csv(out, u, header);
}

// ------------------------------------------------------------ coset setup

CosetProblem coset_setup(const Json& j) {
  const GroupSpec g = io::group_from_json(field(j, "group"));
  return build_coset_problem(g, io::elements_from_json(g, field(j, "subgroup")),
                             io::elements_from_json(g, field(j, "generators")));
}

// Initial data is given on elements of G; each value is assigned to its coset.
SupportedFunction coset_data(const Json& fj, const CosetProblem& p) {
  const SupportedFunction base = io::function_from_json(p.base_group, fj);
  SupportedFunction q(p.quotient_group());
  std::set<GroupElement> seen;
  for (const auto& [x, v] : base.sorted_entries()) {
    const GroupElement qx = p.quotient.project(x);
    if (seen.contains(qx) && q(qx) != v)
      throw Error(ErrorCode::CosetInconstant, "initial data takes two values on the coset of " + x.to_string());
    seen.insert(qx);
    q.set(qx, v);
  }
  return q;
}

// ------------------------------------------------------------ tree setup

int tree_degree(const Json& j) {
  const int k = int_field(j, "k");
  if (k < 2) invalid("tree degree k must be at least 2");
  return k;
}

std::vector<TreeVertex> tree_ball(const TreeVertex& center, int radius, int k, std::size_t cap) {
  std::vector<TreeVertex> ball{center};
  std::size_t frontier_begin = 0;
  for (int r = 0; r < radius; ++r) {
    const std::size_t frontier_end = ball.size();
    for (std::size_t i = frontier_begin; i < frontier_end; ++i) {
      for (const auto& y : tree_neighbors(ball[i], k)) {
        if (tree_distance(center, y) != static_cast<std::size_t>(r + 1)) continue;
        ball.push_back(y);
        if (ball.size() > cap)
          invalid("evaluation ball has more than " + std::to_string(cap) +
                  " vertices; give an explicit eval list or a smaller radius");
      }
    }
    frontier_begin = frontier_end;
  }
  std::sort(ball.begin(), ball.end());
  return ball;
}

std::size_t support_depth(const TreeFunction& f) {
  std::size_t depth = 0;
  for (const auto& [x, v] : f.entries()) depth = std::max(depth, x.depth());
  return depth;
}

struct TreeEval {
  std::vector<TreeVertex> vertices;
  bool explicit_list = false;
};

TreeEval tree_eval(const Json& j, int k, int n, std::size_t data_depth) {
  if (!j.contains("eval"))
    return {tree_ball(TreeVertex{}, static_cast<int>(data_depth) + n, k, kMaxDefaultTreeBall), false};
  const Json& e = j.at("eval");
  if (e.contains("vertices")) {
    std::vector<TreeVertex> out;
    if (!e.at("vertices").is_array()) invalid("eval.vertices must be an array");
    for (const auto& v : e.at("vertices")) out.push_back(io::vertex_from_json(v, k));
    return {std::move(out), true};
  }
  if (e.contains("ball")) {
    const Json& ball = e.at("ball");
    const int radius = int_field(ball, "radius");
    if (radius < 0) invalid("eval ball radius must be non-negative");
    return {tree_ball(io::vertex_from_json(field(ball, "center"), k), radius, k, kMaxDefaultTreeBall), true};
  }
  invalid("eval must contain 'vertices' or 'ball'");
}

void emit(std::ostream& out, const TreeFunction& u, const TreeEval& eval, const std::string& header) {
  if (eval.explicit_list) io::write_csv_rows(out, u, eval.vertices, header);
  else io::write_csv(out, u, header);
}

// ------------------------------------------------------------ solver commands

int cmd_heat(const Settings& s, std::ostream& out) {
  const Json j = load_problem(s);
  const GroupSpec g = io::group_from_json(field(j, "group"));
  const GeneratorSet gens = generator_set(j, g);
  const int n = time_index(j, s);
  const SupportedFunction f = io::function_from_json(g, field(j, "f"));
  const auto keys = eval_keys(j, gens, [&](const Json& v) { return io::element_from_json(g, v); });
  const SupportedFunction u = heat_solve(f, gens, n);
  Sink sink(s.out, out);
  emit(sink.stream(), u, keys, comment("heat", n, static_cast<int>(gens.degree())));
  return kSuccess;
}

int cmd_wave(const Settings& s, std::ostream& out) {
  const Json j = load_problem(s);
  const GroupSpec g = io::group_from_json(field(j, "group"));
  const GeneratorSet gens = generator_set(j, g);
  const int n = time_index(j, s);
  const SupportedFunction f = io::function_from_json(g, field(j, "f"));
  const SupportedFunction v = io::function_from_json(g, field(j, "g"));
  const auto keys = eval_keys(j, gens, [&](const Json& e) { return io::element_from_json(g, e); });
  const SupportedFunction u = wave_solve(f, v, gens, n);
  Sink sink(s.out, out);
  emit(sink.stream(), u, keys, comment("wave", n, static_cast<int>(gens.degree())));
  return kSuccess;
}

int cmd_coset(const Settings& s, std::ostream& out, bool wave) {
  const Json j = load_problem(s);
  const CosetProblem p = coset_setup(j);
  const int n = time_index(j, s);
  const SupportedFunction f = coset_data(field(j, "f"), p);
  auto read = [&](const Json& e) { return p.quotient.project(io::element_from_json(p.base_group, e)); };
  const auto keys = eval_keys(j, p.s_tilde, read);
  const SupportedFunction u =
      wave ? coset_wave_solve(f, coset_data(field(j, "g"), p), p, n) : coset_heat_solve(f, p, n);
  Sink sink(s.out, out);
  emit(sink.stream(), u, keys,
       comment(wave ? "coset-wave" : "coset-heat", n, static_cast<int>(p.s_tilde.degree())) +
           " quotient=" + p.quotient_group().to_string());
  return kSuccess;
}

int cmd_tree(const Settings& s, std::ostream& out, bool wave) {
  const Json j = load_problem(s);
  const int k = tree_degree(j);
  const int n = time_index(j, s);
  const TreeFunction f = io::tree_function_from_json(k, field(j, "f"));
  const TreeFunction g = wave ? io::tree_function_from_json(k, field(j, "g")) : TreeFunction(k);
  const TreeEval eval = tree_eval(j, k, n, std::max(support_depth(f), support_depth(g)));
  const TreeFunction u = wave ? tree_wave_solve(f, g, n, eval.vertices) : tree_heat_solve(f, n, eval.vertices);
  Sink sink(s.out, out);
  emit(sink.stream(), u, eval, comment(wave ? "tree-wave" : "tree-heat", n, k));
  return kSuccess;
}

KernelRole kernel_role(const Json& j) {
  const std::string role = string_field(j, "role", "heat");
  if (role == "heat") return KernelRole::Heat;
  if (role == "wave-f") return KernelRole::WaveF;
  if (role == "wave-g") return KernelRole::WaveG;
  invalid("role must be one of heat, wave-f, wave-g");
}

Kernel kernel_for(const GeneratorSet& gens, int n, KernelRole role) {
  if (role == KernelRole::Heat) return heat_kernel(gens, n);
  auto [f, g] = wave_kernels(gens, n);
  return role == KernelRole::WaveF ? f : g;
}

int cmd_kernel(const Settings& s, std::ostream& out) {
  const Json j = load_problem(s);
  const GroupSpec g = io::group_from_json(field(j, "group"));
  const GeneratorSet gens = generator_set(j, g);
  const int n = time_index(j, s);
  const KernelRole role = kernel_role(j);
  const Kernel kernel = kernel_for(gens, n, role);
  Sink sink(s.out, out);
  io::write_csv(sink.stream(), kernel.data,
                comment("kernel", n, static_cast<int>(gens.degree())) + " role=" +
                    std::string(kernel_role_name(role)),
                "elem");
  return kSuccess;
}

int cmd_weights(const Settings& s, std::ostream& out) {
  const Json j = load_problem(s);
  const int k = tree_degree(j);
  const int n = time_index(j, s);
  const KernelRole role = kernel_role(j);
  const std::string variant = string_field(j, "variant", "tree");
  if (variant != "tree" && variant != "line") invalid("variant must be 'tree' or 'line'");
  const bool line = variant == "line";
  WeightTable table;
  if (role == KernelRole::Heat) {
    table = line ? line_heat_weights(k, n) : tree_heat_weights(k, n);
  } else {
    auto [w1, w2] = line ? line_wave_weights(k, n) : tree_wave_weights(k, n);
    table = role == KernelRole::WaveF ? w1 : w2;
  }
  Sink sink(s.out, out);
  std::ostream& os = sink.stream();
  os << "# " << comment("weights", n, k) << " role=" << kernel_role_name(role) << " variant=" << variant << '\n';
  os << "s,num,den\n";
  for (std::size_t r = 0; r < table.weights.size(); ++r)
    os << r << ',' << numerator_string(table.weights[r]) << ',' << denominator_string(table.weights[r]) << '\n';
  return kSuccess;
}

// ------------------------------------------------------------ verify

int cmd_verify(const Settings& s, std::ostream& out) {
  verify::Options options;
  if (s.max_n) options.max_n = *s.max_n;
  if (options.max_n < 0) invalid("--max-n must be non-negative");
  if (!(s.scale > 0)) invalid("--scale must be positive");
  options.seed = s.seed;
  options.scale = s.scale;
  verify::suite_checks(s.suite);  // validates the name before any work

  std::size_t passed = 0;
  std::vector<verify::CheckResult> results;
  out << std::left << std::setw(4) << "id" << std::setw(13) << "check" << std::right << std::setw(9) << "cases"
      << std::setw(10) << "failures" << std::setw(10) << "seconds" << "  result\n";
  for (int id : verify::suite_checks(s.suite)) {
    const verify::CheckResult r = verify::run_check(id, options);
    if (r.passed) ++passed;
    out << std::left << std::setw(4) << r.id << std::setw(13) << r.name << std::right << std::setw(9) << r.cases
        << std::setw(10) << r.failures << std::setw(10) << std::fixed << std::setprecision(2) << r.seconds << "  "
        << (r.passed ? "PASS" : "FAIL") << '\n';
    if (!r.passed) out << "    " << r.detail << '\n';
    out.flush();
    results.push_back(r);
  }
  out << "summary: " << passed << "/" << results.size() << " checks passed\n";

  if (!s.out.empty()) {
    Sink sink(s.out, out);
    std::ostream& os = sink.stream();
    os << "id,check,cases,failures,seconds,passed\n";
    for (const auto& r : results)
      os << r.id << ',' << r.name << ',' << r.cases << ',' << r.failures << ',' << r.seconds << ','
         << (r.passed ? "true" : "false") << '\n';
  }
  return passed == results.size() ? kSuccess : kInternal;
}

// ------------------------------------------------------------ compare

struct Comparison {
  std::size_t points = 0;
  Rational max_abs_diff = 0;
  Json mismatches = Json::array();

  void add(const std::string& where, const Rational& closed, const Rational& reference) {
    ++points;
    const Rational d = abs(closed - reference);
    if (d == 0) return;
    if (d > max_abs_diff) max_abs_diff = d;
    if (mismatches.size() < kReportedMismatches)
      mismatches.push_back({{"vertex", where}, {"closed", fraction(closed)}, {"oracle", fraction(reference)}});
  }

  void add_all(const SupportedFunction& closed, const SupportedFunction& reference) {
    std::set<GroupElement> keys;
    for (const auto& [x, v] : closed.entries()) keys.insert(x);
    for (const auto& [x, v] : reference.entries()) keys.insert(x);
    for (const auto& x : keys) add(x.to_string(), closed(x), reference(x));
  }
};

void flip_at_identity(SupportedFunction& k) {
  const GroupElement e = k.group().identity();
  k.set(e, k(e) == 0 ? Rational(1) : Rational(-k(e)));
}

SupportedFunction lifted_heat_run(const SupportedFunction& f, const CosetProblem& p, int n) {
  SupportedFunction u = lift(f, p);
  for (int m = 0; m < n; ++m) u = oracle::lifted_coset_heat_step(u, p);
  return u;
}

SupportedFunction lifted_wave_run(const SupportedFunction& f, const SupportedFunction& g, const CosetProblem& p,
                                  int n) {
  SupportedFunction prev = lift(f, p);
  if (n == 0) return prev;
  SupportedFunction curr = prev + lift(g, p);
  for (int m = 1; m < n; ++m) {
    SupportedFunction next = oracle::lifted_coset_wave_step(prev, curr, p);
    prev = std::move(curr);
    curr = std::move(next);
  }
  return curr;
}

int cmd_compare(const Settings& s, std::ostream& out) {
  const Json j = load_problem(s);
  const std::string kind = !s.kind.empty() ? s.kind : string_field(j, "kind", "");
  if (kind.empty()) invalid("compare needs --kind or a 'kind' field in the problem");
  const int n = time_index(j, s);
  const bool fault = s.inject_fault;

  Comparison c;
  Json report{{"kind", kind}, {"n", n}};
  bool quadrature_ok = true;

  if (kind == "heat" || kind == "wave" || kind == "kernel") {
    const GroupSpec g = io::group_from_json(field(j, "group"));
    const GeneratorSet gens = generator_set(j, g);
    if (kind == "heat") {
      const SupportedFunction f = io::function_from_json(g, field(j, "f"));
      SupportedFunction closed = heat_solve(f, gens, n);
      if (fault) {
        Kernel k = heat_kernel(gens, n);
        flip_at_identity(k.data);
        closed = convolve(k.data, f);
      }
      c.add_all(closed, oracle::cayley_heat_trajectory(f, gens, n).back());
    } else if (kind == "wave") {
      const SupportedFunction f = io::function_from_json(g, field(j, "f"));
      const SupportedFunction v = io::function_from_json(g, field(j, "g"));
      SupportedFunction closed = wave_solve(f, v, gens, n);
      if (fault) {
        auto [kf, kg] = wave_kernels(gens, n);
        flip_at_identity(kf.data);
        closed = convolve(kf.data, f) + convolve(kg.data, v);
      }
      c.add_all(closed, oracle::cayley_wave_trajectory(f, v, gens, n).back());
    } else {
      const KernelRole role = kernel_role(j);
      Kernel k = kernel_for(gens, n, role);
      if (fault) flip_at_identity(k.data);
      const SupportedFunction delta = SupportedFunction::delta(g, g.identity());
      const SupportedFunction zero(g);
      const SupportedFunction reference =
          role == KernelRole::Heat    ? oracle::cayley_heat_trajectory(delta, gens, n).back()
          : role == KernelRole::WaveF ? oracle::cayley_wave_trajectory(delta, zero, gens, n).back()
                                      : oracle::cayley_wave_trajectory(zero, delta, gens, n).back();
      c.add_all(k.data, reference);
      if (role == KernelRole::Heat && g.rank() == 1 && g.moduli().empty()) {
        double worst = 0.0;
        for (long r = -n; r <= n; ++r) {
          const double exact = to_double(k.data(g.element({r})));
          worst = std::max(worst, std::abs(oracle::quadrature_kernel(gens, n, r) - exact));
        }
        quadrature_ok = worst <= 1e-9;
        report["quadrature_max_abs_diff"] = worst;
      }
    }
  } else if (kind == "coset-heat" || kind == "coset-wave") {
    const CosetProblem p = coset_setup(j);
    const SupportedFunction f = coset_data(field(j, "f"), p);
    SupportedFunction closed(p.quotient_group());
    SupportedFunction reference(p.base_group);
    if (kind == "coset-heat") {
      closed = coset_heat_solve(f, p, n);
      if (fault) {
        Kernel k = heat_kernel(p.s_tilde, n);
        flip_at_identity(k.data);
        closed = convolve(k.data, f);
      }
      reference = lifted_heat_run(f, p, n);
    } else {
      const SupportedFunction v = coset_data(field(j, "g"), p);
      closed = coset_wave_solve(f, v, p, n);
      if (fault) {
        auto [kf, kg] = wave_kernels(p.s_tilde, n);
        flip_at_identity(kf.data);
        closed = convolve(kf.data, f) + convolve(kg.data, v);
      }
      reference = lifted_wave_run(f, v, p, n);
    }
    c.add_all(lift(closed, p), reference);
  } else if (kind == "tree-heat" || kind == "tree-wave") {
    const bool wave = kind == "tree-wave";
    const int k = tree_degree(j);
    const TreeFunction f = io::tree_function_from_json(k, field(j, "f"));
    const TreeFunction g = wave ? io::tree_function_from_json(k, field(j, "g")) : TreeFunction(k);
    const TreeEval eval = tree_eval(j, k, n, std::max(support_depth(f), support_depth(g)));
    TreeFunction closed = wave ? tree_wave_solve(f, g, n, eval.vertices) : tree_heat_solve(f, n, eval.vertices);
    if (fault && !eval.vertices.empty()) closed.set(eval.vertices.front(), -closed(eval.vertices.front()) + 1);
    const auto traj = wave ? oracle::tree_wave_trajectory(f, g, n, eval.vertices)
                           : oracle::tree_heat_trajectory(f, n, eval.vertices);
    for (const auto& x : eval.vertices) c.add("[" + x.to_string() + "]", closed(x), traj.back()(x));
  } else {
    invalid("cannot compare kind '" + kind + "'");
  }

  report["points"] = c.points;
  report["max_abs_diff"] = fraction(c.max_abs_diff);
  report["mismatches"] = c.mismatches;
  const bool ok = c.max_abs_diff == 0 && quadrature_ok;
  report["agree"] = ok;
  Sink sink(s.out, out);
  sink.stream() << report.dump(2) << '\n';
  return ok ? kSuccess : kInternal;
}

// ------------------------------------------------------------ errors

void report_error(std::ostream& err, std::string_view code, const std::string& detail, Json extra = Json::object()) {
  extra["error"] = code;
  extra["detail"] = detail;
  err << extra.dump() << '\n';
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact heat and wave solvers on Cayley graphs, coset graphs and regular trees", "lattice-waves"};
  app.require_subcommand(1);
  Settings s;

  auto solver = [&](const char* name, const char* help) {
    CLI::App* sub = app.add_subcommand(name, help);
    sub->add_option("--problem", s.problem, "problem instance (JSON)")->required();
    sub->add_option("--out", s.out, "output CSV path (stdout when omitted)");
    sub->add_option("--n", s.n, "time index, overrides the problem's n");
    return sub;
  };
  CLI::App* heat = solver("heat", "heat equation on a Cayley graph of Z^r x Z_m1 x ...");
  CLI::App* wave = solver("wave", "wave equation on a Cayley graph");
  CLI::App* coset_heat = solver("coset-heat", "heat equation on a coset graph G/H");
  CLI::App* coset_wave = solver("coset-wave", "wave equation on a coset graph G/H");
  CLI::App* tree_heat = solver("tree-heat", "heat equation on the k-regular tree");
  CLI::App* tree_wave = solver("tree-wave", "wave equation on the k-regular tree");
  CLI::App* kernel = solver("kernel", "heat or wave convolution kernel");
  CLI::App* weights = solver("weights", "radial tree weights");
  CLI::App* compare = solver("compare", "closed form against the direct-stepping oracle");
  compare->add_option("--kind", s.kind, "kind to compare (defaults to the problem's 'kind')");
  compare->add_flag("--inject-fault", s.inject_fault)->group("");

  CLI::App* verify_cmd = app.add_subcommand("verify", "run the verification suite");
  verify_cmd->add_option("--suite", s.suite, "suite name")->capture_default_str();
  verify_cmd->add_option("--max-n", s.max_n, "cap on every time horizon");
  verify_cmd->add_option("--seed", s.seed, "random seed")->capture_default_str();
  verify_cmd->add_option("--scale", s.scale, "multiplier on instance counts")->capture_default_str();
  verify_cmd->add_option("--out", s.out, "also write results as CSV");

  std::vector<const char*> argv{"lattice-waves"};
  for (const auto& a : args) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e, out, err);
    report_error(err, error_code_name(ErrorCode::InvalidInput), e.what());
    return kValidation;
  }

  try {
    if (heat->parsed()) return cmd_heat(s, out);
    if (wave->parsed()) return cmd_wave(s, out);
    if (coset_heat->parsed()) return cmd_coset(s, out, false);
    if (coset_wave->parsed()) return cmd_coset(s, out, true);
    if (tree_heat->parsed()) return cmd_tree(s, out, false);
    if (tree_wave->parsed()) return cmd_tree(s, out, true);
    if (kernel->parsed()) return cmd_kernel(s, out);
    if (weights->parsed()) return cmd_weights(s, out);
    if (compare->parsed()) return cmd_compare(s, out);
    if (verify_cmd->parsed()) return cmd_verify(s, out);
    return kInternal;
  } catch (const NotSolvableError& e) {
    Json extra{{"sum", e.sum()}};
    if (!e.where().empty()) extra["vertex"] = e.where();
    report_error(err, error_code_name(e.code()), e.what(), std::move(extra));
    return kUnsolvable;
  } catch (const Error& e) {
    report_error(err, error_code_name(e.code()), e.what());
    return kValidation;
  } catch (const std::exception& e) {
    report_error(err, "INTERNAL", e.what());
    return kInternal;
  }
}

} // namespace lattice_waves::cli
