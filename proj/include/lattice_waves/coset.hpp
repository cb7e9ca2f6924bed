#pragma once

#include "lattice_waves/abelian_group.hpp"
#include "lattice_waves/supported_function.hpp"

#include <vector>

namespace lattice_waves {

// Coset graph Coset(G, H, S) of an abelian G by a finite subgroup H. Left and
// right cosets coincide, so the coset graph is the Cayley graph of G/H with
// the distinct images S~ of S.
struct CosetProblem {
  GroupSpec base_group;
  std::vector<GroupElement> subgroup_gens;
  std::vector<GroupElement> generators;       // S as given, in G
  Quotient quotient;
  GeneratorSet s_tilde;                       // on quotient.target()
  std::vector<GroupElement> representatives;  // representatives[i] in S projects to s_tilde[i]

  const GroupSpec& quotient_group() const { return quotient.target(); }
  std::size_t h_order() const { return quotient.subgroup_order(); }
};

// Throws InfiniteSubgroup, SInsideH, and the validation errors of S~ on the
// quotient (NotSymmetric, DoesNotGenerate).
CosetProblem build_coset_problem(const GroupSpec& g, std::vector<GroupElement> h_gens,
                                 std::vector<GroupElement> s);

// f~(x) = f(x + H): constant on every fiber of the projection.
SupportedFunction lift(const SupportedFunction& f, const CosetProblem& p);

// Inverse of lift for functions constant on cosets; throws CosetInconstant
// otherwise.
SupportedFunction descend(const SupportedFunction& lifted, const CosetProblem& p);

SupportedFunction coset_heat_solve(const SupportedFunction& f, const CosetProblem& p, int n);

// Throws NotSolvableError unless g sums to zero on the quotient (equivalently
// its lift sums to zero on G, the lift sum being |H| times larger).
SupportedFunction coset_wave_solve(const SupportedFunction& f, const SupportedFunction& g,
                                   const CosetProblem& p, int n);

} // namespace lattice_waves
