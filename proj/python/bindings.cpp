#include "lattice_waves/cayley.hpp"
#include "lattice_waves/coset.hpp"
#include "lattice_waves/error.hpp"
#include "lattice_waves/parallel.hpp"
#include "lattice_waves/tree.hpp"
#include "lattice_waves/verify.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <set>

namespace py = pybind11;
using namespace lattice_waves;

namespace {

using Coords = std::vector<std::int64_t>;
using Fraction = std::pair<std::string, std::string>;
using Entries = std::vector<std::pair<Coords, Fraction>>;
using TreeEntries = std::vector<std::pair<std::vector<int>, Fraction>>;

Fraction to_pair(const Rational& q) { return {numerator_string(q), denominator_string(q)}; }

SupportedFunction to_function(const GroupSpec& g, const Entries& entries) {
  SupportedFunction f(g);
  for (const auto& [x, v] : entries) f.add(g.element_from_coords(x), make_rational(v.first, v.second));
  return f;
}

Entries from_function(const SupportedFunction& f) {
  Entries out;
  for (const auto& [x, v] : f.sorted_entries()) out.emplace_back(x.coords(), to_pair(v));
  return out;
}

TreeFunction to_tree(int k, const TreeEntries& entries) {
  TreeFunction f(k);
  for (const auto& [w, v] : entries) f.add(TreeVertex::from_letters(w, k), make_rational(v.first, v.second));
  return f;
}

TreeEntries from_tree(const TreeFunction& f) {
  TreeEntries out;
  for (const auto& [x, v] : f.sorted_entries()) out.emplace_back(x.letters(), to_pair(v));
  return out;
}

std::vector<TreeVertex> vertices(int k, const std::vector<std::vector<int>>& words) {
  std::vector<TreeVertex> out;
  for (const auto& w : words) out.push_back(TreeVertex::from_letters(w, k));
  return out;
}

std::vector<GroupElement> elements(const GroupSpec& g, const std::vector<Coords>& xs) {
  std::vector<GroupElement> out;
  for (const auto& x : xs) out.push_back(g.element_from_coords(x));
  return out;
}

GeneratorSet generators(const GroupSpec& g, const std::vector<Coords>& s) {
  return validate_generators(g, elements(g, s));
}

std::vector<Fraction> table(const WeightTable& w) {
  std::vector<Fraction> out;
  for (const auto& v : w.weights) out.push_back(to_pair(v));
  return out;
}

CosetProblem coset(const GroupSpec& g, const std::vector<Coords>& h, const std::vector<Coords>& s) {
  return build_coset_problem(g, elements(g, h), elements(g, s));
}

SupportedFunction on_quotient(const CosetProblem& p, const Entries& entries) {
  const SupportedFunction base = to_function(p.base_group, entries);
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

void raise(const char* cls_name, const Error& e, py::object extra = py::none()) {
  py::object cls = py::module_::import("lattice_waves.errors").attr(cls_name);
  py::object exc = cls(std::string(error_code_name(e.code())), e.what(), extra);
  PyErr_SetObject(cls.ptr(), exc.ptr());
}

} // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact heat and wave solvers on Cayley graphs, coset graphs and regular trees";

  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const NotSolvableError& e) {
      py::dict info;
      info["sum"] = e.sum();
      info["vertex"] = e.where();
      raise("NotSolvableError", e, info);
    } catch (const Error& e) {
      raise("LatticeWavesError", e);
    }
  });

  m.def("heat_solve", [](std::int64_t rank, const Coords& moduli, const std::vector<Coords>& s,
                         const Entries& f, int n) {
    const GroupSpec g = make_group(rank, moduli);
    return from_function(heat_solve(to_function(g, f), generators(g, s), n));
  });
  m.def("wave_solve", [](std::int64_t rank, const Coords& moduli, const std::vector<Coords>& s,
                         const Entries& f, const Entries& v, int n) {
    const GroupSpec g = make_group(rank, moduli);
    return from_function(wave_solve(to_function(g, f), to_function(g, v), generators(g, s), n));
  });
  m.def("heat_kernel", [](std::int64_t rank, const Coords& moduli, const std::vector<Coords>& s, int n) {
    const GroupSpec g = make_group(rank, moduli);
    return from_function(heat_kernel(generators(g, s), n).data);
  });
  m.def("wave_kernels", [](std::int64_t rank, const Coords& moduli, const std::vector<Coords>& s, int n) {
    const GroupSpec g = make_group(rank, moduli);
    auto [f, h] = wave_kernels(generators(g, s), n);
    return std::make_pair(from_function(f.data), from_function(h.data));
  });
  m.def("coset_heat_solve", [](std::int64_t rank, const Coords& moduli, const std::vector<Coords>& h,
                               const std::vector<Coords>& s, const Entries& f, int n) {
    const CosetProblem p = coset(make_group(rank, moduli), h, s);
    return from_function(coset_heat_solve(on_quotient(p, f), p, n));
  });
  m.def("coset_wave_solve", [](std::int64_t rank, const Coords& moduli, const std::vector<Coords>& h,
                               const std::vector<Coords>& s, const Entries& f, const Entries& v, int n) {
    const CosetProblem p = coset(make_group(rank, moduli), h, s);
    return from_function(coset_wave_solve(on_quotient(p, f), on_quotient(p, v), p, n));
  });
  m.def("tree_heat_solve", [](int k, const TreeEntries& f, int n, const std::vector<std::vector<int>>& at) {
    return from_tree(tree_heat_solve(to_tree(k, f), n, vertices(k, at)));
  });
  m.def("tree_wave_solve", [](int k, const TreeEntries& f, const TreeEntries& g, int n,
                              const std::vector<std::vector<int>>& at) {
    return from_tree(tree_wave_solve(to_tree(k, f), to_tree(k, g), n, vertices(k, at)));
  });
  m.def("tree_heat_weights", [](int k, int n) { return table(tree_heat_weights(k, n)); });
  m.def("tree_wave_weights", [](int k, int n) {
    auto [a, b] = tree_wave_weights(k, n);
    return std::make_pair(table(a), table(b));
  });
  m.def("alpha_coeff", [](int j, int s, int k) { return alpha_coeff(j, s, k).get_str(); });
  m.def("sphere_size", [](int k, int r) { return sphere_size(k, r).get_str(); });
  m.def("set_max_threads", [](std::size_t n) { set_max_threads(n); });
  m.def("max_threads", [] { return max_threads(); });

  m.def(
      "verify",
      [](const std::string& suite, std::optional<int> max_n, double scale, std::optional<std::uint64_t> seed) {
        verify::Options o;
        if (max_n) o.max_n = *max_n;
        if (seed) o.seed = *seed;
        o.scale = scale;
        std::vector<py::dict> out;
        std::vector<verify::CheckResult> results;
        {
          py::gil_scoped_release release;
          results = verify::run_suite(suite, o);
        }
        for (const auto& r : results) {
          py::dict d;
          d["id"] = r.id;
          d["name"] = r.name;
          d["passed"] = r.passed;
          d["cases"] = r.cases;
          d["failures"] = r.failures;
          d["seconds"] = r.seconds;
          d["detail"] = r.detail;
          out.push_back(d);
        }
        return out;
      },
      py::arg("suite") = "all", py::arg("max_n") = py::none(), py::arg("scale") = 1.0,
      py::arg("seed") = py::none());
}
