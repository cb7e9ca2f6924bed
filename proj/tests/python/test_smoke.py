from fractions import Fraction

import pytest

import lattice_waves as lw

Z = lw.Group(1)
LINE = [(1,), (-1,)]


def test_heat_on_integers():
    u = lw.heat_solve(Z, LINE, {(0,): 1}, 2)
    assert u == {(-2,): 1, (-1,): -2, (0,): 3, (1,): -2, (2,): 1}
    assert all(isinstance(v, Fraction) for v in u.values())


def test_heat_kernel_matches_solve():
    f = {(0,): Fraction(1, 3), (2,): Fraction(-5, 7)}
    k = lw.heat_kernel(Z, LINE, 3)
    direct = lw.heat_solve(Z, LINE, f, 3)
    conv = {}
    for x, a in f.items():
        for y, b in k.items():
            key = (x[0] + y[0],)
            conv[key] = conv.get(key, 0) + a * b
    assert {x: v for x, v in conv.items() if v} == direct


def test_wave_first_step():
    f = {(0,): 1}
    g = {(1,): 1, (-1,): -1}
    u1 = lw.wave_solve(Z, LINE, f, g, 1)
    assert u1 == {(0,): 1, (1,): 1, (-1,): -1}


def test_wave_not_solvable():
    with pytest.raises(lw.NotSolvableError) as info:
        lw.wave_solve(Z, LINE, {(0,): 1}, {(0,): Fraction(1, 2)}, 3)
    assert info.value.code == "NOT_SOLVABLE"
    assert info.value.sum == Fraction(1, 2)


def test_invalid_generators():
    with pytest.raises(lw.LatticeWavesError) as info:
        lw.heat_solve(Z, [(1,)], {(0,): 1}, 1)
    assert info.value.code != "NOT_SOLVABLE"


def test_finite_group_mass():
    g = lw.Group(0, [5])
    u = lw.heat_solve(g, [(1,), (4,)], {(0,): 1, (3,): Fraction(2, 3)}, 4)
    assert sum(u.values()) == Fraction(5, 3)


def test_coset_reduces_to_quotient():
    g = lw.Group(1, [4])
    u = lw.coset_heat_solve(g, [(0, 2)], [(1, 0), (-1, 0), (0, 1), (0, 3)], {(0, 0): 1, (0, 2): 1}, 2)
    assert sum(u.values()) == 1
    assert all(len(x) == 2 for x in u)


def test_tree_k2_agrees_with_line():
    line = lw.heat_solve(Z, LINE, {(0,): 1}, 3)
    tree = lw.tree_heat_solve(2, {(): 1}, 3, [(), (1,), (2,), (1, 2), (2, 1)])
    assert tree[()] == line[(0,)]
    assert tree[(1,)] == line[(1,)]
    assert tree[(2, 1)] == line[(-2,)]


def test_tree_weights():
    w = lw.tree_heat_weights(3, 2)
    tree = lw.tree_heat_solve(3, {(): 1}, 2, [()])
    assert w[0] == tree[()]
    f, g = lw.tree_wave_weights(3, 2)
    assert f[0] == 1 - 3
    assert g[0] == 2


def test_tree_wave_not_solvable_names_vertex():
    with pytest.raises(lw.NotSolvableError) as info:
        lw.tree_wave_solve(3, {(): 1}, {(1,): 1}, 2, [()])
    assert info.value.vertex


def test_counting():
    assert lw.sphere_size(3, 0) == 1
    assert lw.sphere_size(3, 2) == 6
    assert lw.alpha_coeff(0, 0, 3) == 1


def test_verify_small():
    results = lw.verify("kernels", max_n=6, scale=0.2)
    assert results and all(r["passed"] for r in results)
