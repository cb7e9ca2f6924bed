#include "lattice_waves/coset.hpp"

#include "lattice_waves/cayley.hpp"
#include "lattice_waves/error.hpp"

#include <algorithm>

namespace lattice_waves {

namespace {

void require_quotient(const SupportedFunction& f, const CosetProblem& p) {
  if (!(f.group() == p.quotient_group()))
    throw Error(ErrorCode::GroupMismatch, "function lives on " + f.group().to_string() +
                                              ", expected the quotient " +
                                              p.quotient_group().to_string());
}

} // namespace

CosetProblem build_coset_problem(const GroupSpec& g, std::vector<GroupElement> h_gens,
                                 std::vector<GroupElement> s) {
  if (s.empty()) throw Error(ErrorCode::ShapeMismatch, "generating set is empty");
  Quotient q = quotient(g, h_gens);

  std::vector<GroupElement> images, reps;
  for (const auto& x : s) {
    GroupElement y = q.project(x);
    if (y.is_zero())
      throw Error(ErrorCode::SInsideH, "generator (" + x.to_string() + ") lies in H");
    if (std::find(images.begin(), images.end(), y) == images.end()) {
      images.push_back(std::move(y));
      reps.push_back(x);
    }
  }
  GeneratorSet s_tilde = validate_generators(q.target(), std::move(images));
  return CosetProblem{g, std::move(h_gens), std::move(s), std::move(q), std::move(s_tilde),
                      std::move(reps)};
}

SupportedFunction lift(const SupportedFunction& f, const CosetProblem& p) {
  require_quotient(f, p);
  SupportedFunction out(p.base_group);
  for (const auto& [q, v] : f.entries())
    for (const auto& x : p.quotient.fiber(q)) out.set(x, v);
  return out;
}

SupportedFunction descend(const SupportedFunction& lifted, const CosetProblem& p) {
  if (!(lifted.group() == p.base_group))
    throw Error(ErrorCode::GroupMismatch, "lifted function must live on the base group");
  SupportedFunction out(p.quotient_group());
  for (const auto& [x, v] : lifted.entries()) {
    for (const auto& h : p.quotient.subgroup())
      if (lifted(p.base_group.add(x, h)) != v)
        throw Error(ErrorCode::CosetInconstant,
                    "function is not constant on the coset of (" + x.to_string() + ")");
    out.set(p.quotient.project(x), v);
  }
  return out;
}

SupportedFunction coset_heat_solve(const SupportedFunction& f, const CosetProblem& p, int n) {
  require_quotient(f, p);
  return heat_solve(f, p.s_tilde, n);
}

SupportedFunction coset_wave_solve(const SupportedFunction& f, const SupportedFunction& g,
                                   const CosetProblem& p, int n) {
  require_quotient(f, p);
  require_quotient(g, p);
  return wave_solve(f, g, p.s_tilde, n);
}

} // namespace lattice_waves
