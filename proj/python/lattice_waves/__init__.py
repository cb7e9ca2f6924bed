"""Exact heat and wave equation solvers on Cayley graphs of finitely generated
abelian groups, their coset graphs, and regular trees.

Values are :class:`fractions.Fraction`. Group elements are coordinate tuples
(free coordinates first, then torsion). Tree vertices are tuples of letters
in ``1..k`` describing the reduced path from the root.
"""

from fractions import Fraction

from . import _core
from .errors import LatticeWavesError, NotSolvableError

__all__ = [
    "Group",
    "LatticeWavesError",
    "NotSolvableError",
    "heat_solve",
    "wave_solve",
    "heat_kernel",
    "wave_kernels",
    "coset_heat_solve",
    "coset_wave_solve",
    "tree_heat_solve",
    "tree_wave_solve",
    "tree_heat_weights",
    "tree_wave_weights",
    "alpha_coeff",
    "sphere_size",
    "verify",
]


class Group:
    """Z^rank x Z/m_1 x ... x Z/m_t."""

    def __init__(self, rank, moduli=()):
        self.rank = int(rank)
        self.moduli = [int(m) for m in moduli]

    def __repr__(self):
        return f"Group(rank={self.rank}, moduli={self.moduli})"


def _frac(v):
    v = Fraction(v)
    return (str(v.numerator), str(v.denominator))


def _entries(f):
    return [([int(c) for c in x], _frac(v)) for x, v in f.items()]


def _tree_entries(f):
    return [([int(c) for c in x], _frac(v)) for x, v in f.items()]


def _out(rows):
    return {tuple(x): Fraction(int(n), int(d)) for x, (n, d) in rows}


def _table(rows):
    return [Fraction(int(n), int(d)) for n, d in rows]


def _gens(s):
    return [[int(c) for c in x] for x in s]


def heat_solve(group, generators, f, n):
    return _out(_core.heat_solve(group.rank, group.moduli, _gens(generators), _entries(f), n))


def wave_solve(group, generators, f, g, n):
    return _out(
        _core.wave_solve(group.rank, group.moduli, _gens(generators), _entries(f), _entries(g), n)
    )


def heat_kernel(group, generators, n):
    return _out(_core.heat_kernel(group.rank, group.moduli, _gens(generators), n))


def wave_kernels(group, generators, n):
    f, g = _core.wave_kernels(group.rank, group.moduli, _gens(generators), n)
    return _out(f), _out(g)


def coset_heat_solve(group, subgroup, generators, f, n):
    """f is given on elements of the group; the result is keyed by quotient coordinates."""
    return _out(
        _core.coset_heat_solve(
            group.rank, group.moduli, _gens(subgroup), _gens(generators), _entries(f), n
        )
    )


def coset_wave_solve(group, subgroup, generators, f, g, n):
    return _out(
        _core.coset_wave_solve(
            group.rank, group.moduli, _gens(subgroup), _gens(generators), _entries(f), _entries(g), n
        )
    )


def tree_heat_solve(k, f, n, at):
    return _out(_core.tree_heat_solve(k, _tree_entries(f), n, _gens(at)))


def tree_wave_solve(k, f, g, n, at):
    return _out(_core.tree_wave_solve(k, _tree_entries(f), _tree_entries(g), n, _gens(at)))


def tree_heat_weights(k, n):
    return _table(_core.tree_heat_weights(k, n))


def tree_wave_weights(k, n):
    f, g = _core.tree_wave_weights(k, n)
    return _table(f), _table(g)


def alpha_coeff(j, s, k):
    return int(_core.alpha_coeff(j, s, k))


def sphere_size(k, r):
    return int(_core.sphere_size(k, r))


def verify(suite="all", max_n=None, scale=1.0, seed=None):
    return _core.verify(suite, max_n, scale, seed)
