"""Diagram algebras acting on tensor space, exactly.

Matrices act on row vectors: entry M[i, j] is indexed by a basis tensor i of
the top row (input) and a basis tensor j of the bottom row (output).  With
this convention stacking diagram a over diagram b matches the matrix product
M(a) @ M(b).  Group elements are transposed to match.

All matrices are integer numpy arrays; ranks are computed exactly by
fraction-free elimination over Python integers.
"""

from __future__ import annotations

import itertools
from math import gcd
from typing import Iterable, Union

import numpy as np

from .diagrams import (
    AlgebraElement, Diagram, all_diagrams, compose,
)
from .partitions import Partition, partitions_of
from .symfunc import character_row

MAX_ENTRIES = 20_000


class ResourceError(ValueError):
    pass


# ---------------------------------------------------------------------------
# bilinear forms


def orthogonal_form(d: int) -> np.ndarray:
    """Pairs coordinates (1,2), (3,4), ... for even d; the dot product for odd d."""
    if d % 2:
        return np.eye(d, dtype=np.int64)
    g = np.zeros((d, d), dtype=np.int64)
    for k in range(0, d, 2):
        g[k, k + 1] = g[k + 1, k] = 1
    return g


def symplectic_form(d: int) -> np.ndarray:
    if d % 2:
        raise ValueError("the symplectic form needs even dimension")
    w = np.zeros((d, d), dtype=np.int64)
    for k in range(0, d, 2):
        w[k, k + 1] = 1
        w[k + 1, k] = -1
    return w


def _form_and_coform(kind: str, d: int) -> tuple[np.ndarray, np.ndarray]:
    # A cap evaluates the form on the two strands; a cup inserts the element
    # sum_ab C[a, b] e_a (x) e_b.  For the orthogonal form G^2 = 1, so C = G is
    # the invariant element dual to it.  For the symplectic form the cup inserts
    # the same matrix as the cap, so a cup-then-cap loop yields trace(W W^T) = d
    # while a zigzag yields W W = -1: the parameter is -d after the sign
    # bookkeeping in diagrams.compose.
    if kind == "brauer":
        g = orthogonal_form(d)
        return g, g
    if kind == "signed_brauer":
        w = symplectic_form(d)
        return w, w
    raise ValueError(kind)


# ---------------------------------------------------------------------------
# action matrices


def _all_equal(order: int, d: int) -> np.ndarray:
    t = np.zeros((d,) * order, dtype=np.int64)
    for i in range(d):
        t[(i,) * order] = 1
    return t


def _diagram_tensor(g: Diagram, d: int) -> np.ndarray:
    nv = g.n_top + g.n_bot
    out = np.ones((1,) * nv, dtype=np.int64)
    if g.kind in ("brauer", "signed_brauer"):
        form, coform = _form_and_coform(g.kind, d)
    for blk in g.blocks:
        if g.kind in ("brauer", "signed_brauer") and g.is_horizontal(blk):
            factor = form if g.is_top(blk[0]) else coform
        else:
            factor = _all_equal(len(blk), d)
        shape = [1] * nv
        for v in blk:
            shape[v] = d
        out = out * factor.reshape(shape)
    return out


def action_matrix(x: Union[Diagram, AlgebraElement], d: int) -> np.ndarray:
    """The matrix of a diagram, or of an algebra element with t specialized
    (t = d, or t = -d for the signed flavor), on tensor space."""
    if d < 1:
        raise ValueError("d must be positive")
    if isinstance(x, AlgebraElement):
        kind, nt, nb, _ = x.shape
        param = -d if kind == "signed_brauer" else d
        total = np.zeros((d ** nt, d ** nb), dtype=np.int64)
        for g, poly in x.terms.items():
            scalar = sum(c * param ** k for k, c in poly.items())
            total = total + scalar * action_matrix(g, d)
        return total
    if x.kind == "signed_brauer" and d % 2:
        raise ValueError("the signed Brauer action needs even d")
    if d ** (x.n_top + x.n_bot) > MAX_ENTRIES * 16:
        raise ResourceError("tensor space too large")
    t = _diagram_tensor(x, d)
    full = np.broadcast_to(t, (d,) * (x.n_top + x.n_bot))
    return x.sign * np.ascontiguousarray(full).reshape(d ** x.n_top, d ** x.n_bot)


def composition_scalar(a: Diagram, b: Diagram, d: int) -> tuple[Diagram, int]:
    """compose(a, b) with its loop count and sign turned into one integer."""
    comp = compose(a, b)
    param = -d if a.kind == "signed_brauer" else d
    return comp.diagram, comp.sign * param ** comp.loops


# ---------------------------------------------------------------------------
# exact rank


def exact_rank(rows: Iterable) -> int:
    """Rank over Q of integer rows (sequences or {column: value} dicts)."""
    pivots: dict[int, dict[int, int]] = {}
    for raw in rows:
        if isinstance(raw, dict):
            r = {int(k): int(v) for k, v in raw.items() if v}
        else:
            r = {i: int(v) for i, v in enumerate(raw) if v}
        while r:
            c = min(r)
            p = pivots.get(c)
            if p is None:
                g = 0
                for v in r.values():
                    g = gcd(g, v)
                pivots[c] = {k: v // g for k, v in r.items()}
                break
            a, b = p[c], r[c]
            new = {}
            for k in set(r) | set(p):
                v = a * r.get(k, 0) - b * p.get(k, 0)
                if v:
                    new[k] = v
            g = 0
            for v in new.values():
                g = gcd(g, v)
            r = {k: v // g for k, v in new.items()} if g > 1 else new
    return len(pivots)


def _sparse_rows(m: np.ndarray) -> list[dict[int, int]]:
    out = []
    for row in m:
        nz = np.nonzero(row)[0]
        out.append({int(j): int(row[j]) for j in nz})
    return out


def matrix_rank(m: np.ndarray) -> int:
    return exact_rank(_sparse_rows(np.asarray(m)))


# ---------------------------------------------------------------------------
# group generators (transposed for the row-vector convention)


def _kron_all(mats: list[np.ndarray]) -> np.ndarray:
    out = np.ones((1, 1), dtype=np.int64)
    for m in mats:
        out = np.kron(out, m)
    return out


def _derivation(x: np.ndarray, xdual: np.ndarray, n: int, m: int) -> np.ndarray:
    d = x.shape[0]
    eye = np.eye(d, dtype=np.int64)
    total = np.zeros((d ** (n + m),) * 2, dtype=np.int64)
    for k in range(n + m):
        mats = [eye] * (n + m)
        mats[k] = x if k < n else xdual
        total = total + _kron_all(mats)
    return total


def lie_generators(group: str, d: int) -> list[np.ndarray]:
    """Matrices (column convention) spanning or generating the Lie algebra."""
    mats = []
    if group == "gl":
        for i in range(d - 1):
            for a, b in ((i, i + 1), (i + 1, i)):
                e = np.zeros((d, d), dtype=np.int64)
                e[a, b] = 1
                mats.append(e)
        if d == 1:
            mats.append(np.ones((1, 1), dtype=np.int64))
        return mats
    if group == "o":
        g = orthogonal_form(d)
        inv = g  # g is its own inverse
        for i, j in itertools.combinations(range(d), 2):
            a = np.zeros((d, d), dtype=np.int64)
            a[i, j], a[j, i] = 1, -1
            mats.append(inv @ a)
        return mats
    if group == "sp":
        w = symplectic_form(d)
        inv = -w
        for i, j in itertools.combinations_with_replacement(range(d), 2):
            s = np.zeros((d, d), dtype=np.int64)
            s[i, j] = s[j, i] = 1
            mats.append(inv @ s)
        return mats
    raise ValueError(group)


def _permutation_matrix(perm: list[int]) -> np.ndarray:
    d = len(perm)
    p = np.zeros((d, d), dtype=np.int64)
    for i, j in enumerate(perm):
        p[j, i] = 1
    return p


def group_generators(kind: str, n: int, d: int, m: int = 0) -> list[tuple[str, np.ndarray]]:
    """Generators acting on tensor space in the row-vector convention.

    Each entry is ("lie", X) for a derivation (commutant: Y X = X Y) or
    ("group", P) for a group element (same condition).
    """
    if kind == "set_partition":
        out = []
        for i in range(d - 1):
            perm = list(range(d))
            perm[i], perm[i + 1] = perm[i + 1], perm[i]
            p = _permutation_matrix(perm)
            out.append(("group", _kron_all([p] * n).T))
        return out
    group = {"walled_brauer": "gl", "brauer": "o", "signed_brauer": "sp"}[kind]
    out = []
    for x in lie_generators(group, d):
        out.append(("lie", _derivation(x, -x.T, n, m).T))
    return out


def commutes(a: np.ndarray, b: np.ndarray) -> bool:
    return np.array_equal(a @ b, b @ a)


# ---------------------------------------------------------------------------
# centralizer


def _kind_sizes(kind: str, n: int, m: int) -> tuple[int, int]:
    if kind == "walled_brauer":
        return n, m
    return n, 0


def image_dimension(kind: str, n: int, d: int, m: int = 0) -> int:
    mats = [action_matrix(g, d) for g in all_diagrams(kind, n, m)]
    return exact_rank(_sparse_rows(np.array([x.ravel() for x in mats])))


def commutant_dimension(kind: str, n: int, d: int, m: int = 0) -> int:
    size = d ** (n + m)
    if size * size > MAX_ENTRIES:
        raise ResourceError(f"commutant has {size * size} unknowns")
    gens = group_generators(kind, n, d, m)
    # unknown Y[i, j] has index i*size + j; (Y R - R Y)[i, k] = sum_j Y[i,j] R[j,k] - R[i,j] Y[j,k]
    rows = []
    for _, r in gens:
        nz = [(int(a), int(b), int(r[a, b])) for a, b in zip(*np.nonzero(r))]
        by_row: dict[int, list] = {}
        by_col: dict[int, list] = {}
        for a, b, v in nz:
            by_row.setdefault(a, []).append((b, v))
            by_col.setdefault(b, []).append((a, v))
        for i in range(size):
            for k in range(size):
                eq: dict[int, int] = {}
                for j, v in by_col.get(k, []):
                    eq[i * size + j] = eq.get(i * size + j, 0) + v
                for j, v in by_row.get(i, []):
                    eq[j * size + k] = eq.get(j * size + k, 0) - v
                eq = {c: v for c, v in eq.items() if v}
                if eq:
                    rows.append(eq)
    return size * size - exact_rank(rows)


def centralizer_check(kind: str, n: int, d: int, m: int = 0) -> tuple[int, int]:
    """(rank of the diagram image, dimension of the group commutant)."""
    if kind not in ("brauer", "signed_brauer", "walled_brauer", "set_partition"):
        raise ValueError(f"unknown kind {kind!r}")
    n_, m_ = _kind_sizes(kind, n, m)
    return image_dimension(kind, n_, d, m_), commutant_dimension(kind, n_, d, m_)


def permutation_orbit_count(n: int, d: int) -> int:
    """Orbits of S_d on pairs of n-tuples: the commutant of S_d on tensors."""
    seen = set()
    for pair in itertools.product(range(d), repeat=2 * n):
        relabel: dict[int, int] = {}
        key = tuple(relabel.setdefault(x, len(relabel)) for x in pair)
        seen.add(key)
    return len(seen)


# ---------------------------------------------------------------------------
# traceless tensors


def _index_tuples(d: int, n: int) -> list[tuple[int, ...]]:
    return list(itertools.product(range(d), repeat=n))


def _contraction_maps(kind: str, n: int, m: int, d: int) -> list[np.ndarray]:
    """Column-convention matrices T -> smaller tensor space."""
    src = _index_tuples(d, n + m)
    maps = []

    def build(target_len: int, fn) -> np.ndarray:
        mat = np.zeros((d ** target_len, len(src)), dtype=np.int64)
        for col, idx in enumerate(src):
            for tgt, coeff in fn(idx):
                row = 0
                for x in tgt:
                    row = row * d + x
                mat[row, col] += coeff
        return mat

    if kind == "gl":
        for i in range(n):
            for j in range(n, n + m):
                maps.append(build(n + m - 2, lambda idx, i=i, j=j: (
                    [(tuple(x for k, x in enumerate(idx) if k not in (i, j)), 1)]
                    if idx[i] == idx[j] else [])))
        return maps
    if kind in ("o", "sp"):
        form = orthogonal_form(d) if kind == "o" else symplectic_form(d)
        for i, j in itertools.combinations(range(n), 2):
            maps.append(build(n - 2, lambda idx, i=i, j=j: (
                [(tuple(x for k, x in enumerate(idx) if k not in (i, j)),
                  int(form[idx[i], idx[j]]))] if form[idx[i], idx[j]] else [])))
        return maps
    if kind == "sym":
        for i in range(n):
            maps.append(build(n - 1, lambda idx, i=i: [
                (tuple(x for k, x in enumerate(idx) if k != i), 1)]))
        for i, j in itertools.combinations(range(n), 2):
            maps.append(build(n - 1, lambda idx, i=i, j=j: (
                [(tuple(x for k, x in enumerate(idx) if k not in (i, j)) + (idx[i],), 1)]
                if idx[i] == idx[j] else [])))
        return maps
    raise ValueError(kind)


def _slot_permutation(perm: tuple[int, ...], d: int, offset: int, total: int) -> np.ndarray:
    """Permute tensor slots offset..offset+len(perm)-1 (column convention)."""
    idxs = _index_tuples(d, total)
    mat = np.zeros((len(idxs), len(idxs)), dtype=np.int64)
    for col, idx in enumerate(idxs):
        new = list(idx)
        for k, p in enumerate(perm):
            new[offset + p] = idx[offset + k]
        row = 0
        for x in new:
            row = row * d + x
        mat[row, col] = 1
    return mat


def _cycle_type(perm: tuple[int, ...]) -> Partition:
    seen, lengths = set(), []
    for s in range(len(perm)):
        if s in seen:
            continue
        k, x = 0, s
        while x not in seen:
            seen.add(x)
            x = perm[x]
            k += 1
        lengths.append(k)
    return tuple(sorted(lengths, reverse=True))


def _isotypic_operator(lam: Partition, d: int, offset: int, total: int) -> np.ndarray:
    n = sum(lam)
    row = dict(zip(partitions_of(n), character_row(lam)))
    acc = np.zeros((d ** total,) * 2, dtype=np.int64)
    for perm in itertools.permutations(range(n)):
        chi = row[_cycle_type(perm)]
        if chi:
            acc = acc + chi * _slot_permutation(perm, d, offset, total)
    return acc


def traceless_decomposition(kind: str, n: int, d: int, m: int = 0) -> dict:
    """Dimensions of the finite-rank simples cut out of traceless tensors.

    Returns {lam: dim} ({(lam, lam'): dim} for gl), counting only nonzero
    multiplicities.
    """
    total = n + m if kind == "gl" else n
    if kind != "gl" and m:
        raise ValueError("only gl takes a second tensor degree")
    if kind == "sp" and d % 2:
        raise ValueError("sp needs even d")
    if (d ** total) ** 2 > MAX_ENTRIES * 4:
        raise ResourceError("tensor space too large")
    maps = _contraction_maps(kind, n, m, d)
    stacked = np.vstack(maps) if maps else np.zeros((0, d ** total), dtype=np.int64)
    out = {}
    labels: list = []
    if kind == "gl":
        labels = [(a, b) for a in partitions_of(n) for b in partitions_of(m)]
    else:
        labels = list(partitions_of(n))
    for lab in labels:
        if kind == "gl":
            q = _isotypic_operator(lab[0], d, 0, total) @ _isotypic_operator(lab[1], d, n, total) \
                if m else _isotypic_operator(lab[0], d, 0, total)
            mdim = character_row(lab[0])[-1] * (character_row(lab[1])[-1] if lab[1] else 1)
        else:
            q = _isotypic_operator(lab, d, 0, total)
            mdim = character_row(lab)[-1]
        r_q = matrix_rank(q)
        r_cq = matrix_rank(stacked @ q) if len(stacked) else 0
        kernel_dim = r_q - r_cq
        if kernel_dim % mdim:
            raise ArithmeticError("isotypic kernel not a multiple of the irrep dimension")
        if kernel_dim:
            out[lab] = kernel_dim // mdim
    return out
