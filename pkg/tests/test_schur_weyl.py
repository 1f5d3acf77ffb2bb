import random

import numpy as np
import pytest

from stabrep.charring import FiniteGroup, dim
from stabrep.diagrams import AlgebraElement, all_diagrams, compose, contraction, identity, make_diagram
from stabrep.krings import SimpleLabel, littlewood_complex
from stabrep.partitions import pad
from stabrep.schur_weyl import (
    ResourceError, action_matrix, centralizer_check, commutant_dimension,
    commutes, composition_scalar, exact_rank, group_generators,
    permutation_orbit_count, symplectic_form, orthogonal_form,
    traceless_decomposition,
)

CELLS = [(k, n, 0, d) for k in ("brauer", "set_partition") for n in (1, 2, 3) for d in (2, 3, 4)] + \
    [("signed_brauer", n, 0, d) for n in (1, 2, 3) for d in (2, 4)] + \
    [("walled_brauer", n, n, d) for n in (1, 2) for d in (2, 3, 4)]


def test_identity_acts_as_identity():
    for kind in ("brauer", "signed_brauer", "set_partition"):
        assert np.array_equal(action_matrix(identity(kind, 2), 2), np.eye(4, dtype=np.int64))
    assert np.array_equal(action_matrix(identity("walled_brauer", 2, 1), 2), np.eye(4, dtype=np.int64))


def test_contraction_trace():
    e = contraction("brauer", 2, 0)
    assert int(np.trace(action_matrix(e, 3))) == 3


def test_forms():
    w = symplectic_form(4)
    assert np.array_equal(w.T, -w)
    g = orthogonal_form(4)
    assert np.array_equal(g, g.T) and np.array_equal(g @ g, np.eye(4, dtype=np.int64))
    assert np.array_equal(orthogonal_form(3), np.eye(3, dtype=np.int64))


def test_walled_example_action():
    g = make_diagram("walled_brauer", 6, 6, [(0, 8), (1, 5), (2, 3), (4, 11), (6, 10), (7, 9)], wall=3)
    h = make_diagram("walled_brauer", 6, 6, [(0, 4), (1, 6), (2, 3), (5, 9), (7, 11), (8, 10)], wall=3)
    comp = compose(g, h)
    lhs = action_matrix(g, 2) @ action_matrix(h, 2)
    assert np.array_equal(lhs, 2 * action_matrix(comp.diagram, 2))


@pytest.mark.parametrize("kind,n,m,d", CELLS)
def test_homomorphism(kind, n, m, d):
    rng = random.Random(hash((kind, n, m, d)) & 0xFFFF)
    pool = all_diagrams(kind, n, m)
    for _ in range(10):
        a, b = rng.choice(pool), rng.choice(pool)
        ab, scalar = composition_scalar(a, b, d)
        assert np.array_equal(action_matrix(a, d) @ action_matrix(b, d), scalar * action_matrix(ab, d))


def test_algebra_element_action():
    for kind, d in (("signed_brauer", 4), ("brauer", 3), ("set_partition", 3)):
        pool = all_diagrams(kind, 2)
        x = AlgebraElement.of(pool[1]) + AlgebraElement.of(pool[-1])
        y = AlgebraElement.of(pool[2]) - AlgebraElement.of(pool[0])
        assert np.array_equal(action_matrix(x * y, d), action_matrix(x, d) @ action_matrix(y, d))
    with pytest.raises(ValueError):
        action_matrix(identity("signed_brauer", 1), 3)


@pytest.mark.parametrize("kind,n,m,d", [c for c in CELLS if c[3] ** (c[1] + c[2]) <= 27])
def test_commutation(kind, n, m, d):
    gens = group_generators(kind, n, d, m)
    assert gens
    for g in all_diagrams(kind, n, m):
        x = action_matrix(g, d)
        assert all(commutes(x, r) for _, r in gens)


def test_exact_rank():
    assert exact_rank([[1, 2], [2, 4]]) == 1
    assert exact_rank([{0: 3}, {1: 5}, {0: 1, 1: 1}]) == 2
    assert exact_rank([]) == 0
    big = 10 ** 30
    assert exact_rank([[big, 1], [big + 1, 1]]) == 2


@pytest.mark.parametrize("kind,n,m,d,expected", [
    ("set_partition", 2, 0, 5, (15, 15)),
    ("brauer", 2, 0, 3, (3, 3)),
    ("walled_brauer", 1, 1, 2, (2, 2)),
    ("brauer", 3, 0, 3, (15, 15)),
    ("signed_brauer", 2, 0, 4, (3, 3)),
    ("walled_brauer", 2, 1, 3, (6, 6)),
])
def test_centralizer_equality(kind, n, m, d, expected):
    assert centralizer_check(kind, n, d, m) == expected


@pytest.mark.parametrize("kind,n,m,d", [
    ("set_partition", 2, 0, 3), ("set_partition", 2, 0, 4), ("set_partition", 1, 0, 2),
    ("brauer", 2, 0, 2), ("brauer", 3, 0, 2), ("signed_brauer", 2, 0, 2),
    ("walled_brauer", 1, 1, 3), ("walled_brauer", 2, 1, 2),
])
def test_centralizer_inequality(kind, n, m, d):
    image, commutant = centralizer_check(kind, n, d, m)
    assert image <= commutant


def test_symmetric_commutant_is_orbit_count():
    for n, d in ((1, 3), (2, 2), (2, 3), (2, 5)):
        assert commutant_dimension("set_partition", n, d) == permutation_orbit_count(n, d)


def test_resource_guard():
    with pytest.raises(ResourceError):
        centralizer_check("brauer", 4, 4)


def _gl_dim(lam, lamp, d):
    if len(lam) + len(lamp) > d:
        return 0
    w = tuple(lam) + (0,) * (d - len(lam) - len(lamp)) + tuple(-x for x in reversed(lamp))
    return dim(FiniteGroup("gl", d), w)


def _o_dim_by_resolution(lam, d):
    # alternating sum of GL(d) Schur functor dimensions over the O Littlewood complex
    total = 0
    for i, level in enumerate(littlewood_complex(SimpleLabel("osp", lam), "o")):
        for nu, c in level.items():
            total += (-1) ** i * c * _gl_dim(nu, (), d)
    return total


def test_traceless_examples():
    assert traceless_decomposition("gl", 1, 3, 1) == {((1,), (1,)): 8}
    assert traceless_decomposition("o", 2, 3) == {(2,): 5, (1, 1): 3}
    assert traceless_decomposition("sym", 1, 3) == {(1,): 2}


@pytest.mark.parametrize("kind,n,m,d", [
    ("gl", 1, 1, 3), ("gl", 2, 1, 3), ("gl", 2, 0, 2), ("o", 2, 3, 0), ("o", 3, 3, 0),
    ("sp", 2, 4, 0), ("sym", 2, 5, 0), ("sym", 1, 3, 0), ("sym", 2, 4, 0),
])
def test_traceless_dimensions_match_formulas(kind, n, m, d):
    if kind != "gl":
        d, m = m, 0
    found = traceless_decomposition(kind, n, d, m)
    assert found
    for lab, value in found.items():
        if kind == "gl":
            expected = _gl_dim(lab[0], lab[1], d)
        elif kind == "sp":
            expected = dim(FiniteGroup("sp", d // 2), lab)
        elif kind == "sym":
            expected = dim(FiniteGroup("sym", d), pad(lab, d - sum(lab)))
        else:
            expected = _o_dim_by_resolution(lab, d)
        assert value == expected, lab
