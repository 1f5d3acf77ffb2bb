import itertools

import pytest
from hypothesis import given, strategies as st

from stabrep.charring import (
    FiniteClass, FiniteGroup, LaurentChar, character_of, decompose, dim,
    gl_character, irreducible_character, sp_character,
)
from stabrep.partitions import partitions_up_to
from stabrep.specialize import _schur_sp
from stabrep.symfunc import schur_polynomial


def test_gl_character_examples():
    assert gl_character((1, 0), 2).coeffs == {(1, 0): 1, (0, 1): 1}
    assert gl_character((2, 0), 2).coeffs == {(2, 0): 1, (1, 1): 1, (0, 2): 1}
    adjoint = gl_character((1, 0, -1), 3)
    assert len(adjoint.coeffs) == 7 and adjoint.dimension() == 8
    with pytest.raises(ValueError):
        gl_character((0, 1), 2)


def test_sp_character_examples():
    assert sp_character((1,), 1).coeffs == {(1,): 1, (-1,): 1}
    assert sp_character((1, 1), 2).dimension() == 5
    for k in (1, 2, 3):
        assert sp_character((), k).coeffs == {(0,) * k: 1}
    with pytest.raises(ValueError):
        sp_character((1, 1, 1), 2)


def test_gl_character_matches_tableau_sum():
    for d in (1, 2, 3, 4):
        for lam in partitions_up_to(5):
            if len(lam) > d:
                continue
            w = tuple(lam) + (0,) * (d - len(lam))
            assert gl_character(w, d).coeffs == schur_polynomial(lam, d).coeffs


def test_decompose_examples():
    g = FiniteGroup("gl", 3)
    assert decompose(gl_character((2, 0, -1), 3), g).terms == {(2, 0, -1): 1}
    sp2 = FiniteGroup("sp", 2)
    assert decompose(_schur_sp((1, 1), 2), sp2).terms == {(1, 1): 1, (): 1}
    prod = sp_character((2, 1), 2) * sp_character((1, 1), 2)
    assert decompose(prod, sp2).terms == {(3, 2): 1, (3,): 1, (2, 1): 1, (1,): 1}
    with pytest.raises(ValueError):
        decompose(LaurentChar(2, {(1, 0): 1}), FiniteGroup("gl", 2))


def test_dim_examples():
    assert dim(FiniteGroup("gl", 3), (1, 0, -1)) == 8
    assert dim(FiniteGroup("sym", 3), (2, 1)) == 2
    for group, triv in ((FiniteGroup("gl", 3), (0, 0, 0)), (FiniteGroup("sp", 2), ()),
                        (FiniteGroup("sym", 4), (4,))):
        assert dim(group, triv) == 1


def _gl_weights(d, size):
    out = []
    for lam in partitions_up_to(size):
        if len(lam) <= d:
            w = tuple(lam) + (0,) * (d - len(lam))
            out.extend(tuple(x - s for x in w) for s in (0, 1))
    return out


def _sp_labels(k, size):
    return [lam for lam in partitions_up_to(size) if len(lam) <= k]


def test_dim_equals_character_dimension():
    for d in (1, 2, 3):
        g = FiniteGroup("gl", d)
        for w in _gl_weights(d, 5):
            assert dim(g, w) == gl_character(w, d).dimension()
    for k in (1, 2, 3):
        g = FiniteGroup("sp", k)
        for lam in _sp_labels(k, 4):
            assert dim(g, lam) == sp_character(lam, k).dimension()


@st.composite
def combinations(draw):
    kind = draw(st.sampled_from(["gl", "sp"]))
    rank = draw(st.integers(1, 3))
    pool = _gl_weights(rank, 4 if rank == 3 else 5) if kind == "gl" else _sp_labels(rank, 4)
    labels = draw(st.lists(st.sampled_from(pool), min_size=1, max_size=3, unique=True))
    mults = draw(st.lists(st.integers(1, 3), min_size=len(labels), max_size=len(labels)))
    return FiniteGroup(kind, rank), dict(zip(labels, mults))


@given(combinations())
def test_decompose_round_trip(case):
    group, terms = case
    x = FiniteClass(group, terms)
    assert decompose(character_of(x), group) == x


@pytest.mark.parametrize("kind,rank", [("gl", 2), ("sp", 1), ("sp", 2)])
def test_products_are_genuine(kind, rank):
    group = FiniteGroup(kind, rank)
    pool = _gl_weights(rank, 3) if kind == "gl" else _sp_labels(rank, 3)
    for a, b in itertools.combinations_with_replacement(pool, 2):
        chi = irreducible_character(group, a) * irreducible_character(group, b)
        assert chi.is_invariant(kind)
        result = decompose(chi, group)
        assert result.is_genuine()
        assert sum(dim(group, k) * v for k, v in result.terms.items()) == chi.dimension()
