"""Specialization of stable classes to finite rank.

``specialize_simple`` is the degree-zero functor.  ``euler_specialize``
computes the derived specialization at the level of Euler characteristics:
each term of the Littlewood resolution is a Schur functor, whose character
at finite rank is a Schur polynomial, and the alternating sum is decomposed
into irreducibles.  ``derived_specialize_sym`` implements the symmetric group
border-strip rule on the padded shape.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Union

from .charring import FiniteClass, FiniteGroup, LaurentChar, decompose
from .krings import KClass, SimpleLabel, littlewood_complex, stable_tensor
from .partitions import Partition, border_strips, pad, part, transpose
from .symfunc import schur_polynomial

MAX_RANK = 4


@dataclass(frozen=True)
class SpecResult:
    """Either zero, or a single irreducible placed in one cohomological degree."""
    degree: Optional[int] = None
    label: Optional[Partition] = None

    @property
    def is_zero(self) -> bool:
        return self.label is None

    def __str__(self) -> str:
        if self.is_zero:
            return "0"
        return f"H^{self.degree} = M{list(self.label)}"


def specialize_simple(x: SimpleLabel, rank: int, variant: Optional[str] = None):
    """The degree-zero specialization of a simple, or None when it vanishes.

    gl and glpol: a dominant GL(rank) weight; osp with variant "sp": a
    partition labelling an Sp(2 * rank) irreducible; osp with variant "o": a
    partition labelling an O(rank) irreducible; sym: a partition of rank.
    """
    if x.cat == "gl":
        lam, lamp = x.data
        if len(lam) + len(lamp) > rank:
            return None
        zeros = rank - len(lam) - len(lamp)
        return tuple(lam) + (0,) * zeros + tuple(-p for p in reversed(lamp))
    if x.cat == "glpol":
        if len(x.data) > rank:
            return None
        return tuple(x.data) + (0,) * (rank - len(x.data))
    if x.cat == "osp":
        if variant == "sp":
            return x.data if len(x.data) <= rank else None
        if variant == "o":
            cols = transpose(x.data)
            first_two = sum(cols[:2])
            return x.data if first_two <= rank else None
        raise ValueError("osp needs variant 'o' or 'sp'")
    if x.cat == "sym":
        return pad(x.data, rank - sum(x.data))
    raise ValueError(f"no specialization for {x.cat}")


def derived_specialize_sym(lam: Partition, d: int) -> SpecResult:
    """Derived specialization of a symmetric group simple to S_d.

    The strip rule runs on the padded shape (N - |lam|, lam) for N large:
    find the border strip through the last box of the first row whose
    removal leaves d boxes.  Its height is the degree and the remaining
    shape labels the S_d irreducible.  For d >= |lam| + lam_1 the strip lies
    in the first row and this is the closed form lam[d - |lam|].
    """
    if d < 1:
        raise ValueError("d must be positive")
    n = sum(lam)
    # any N with N - n >= lam_1 and N > d gives the same answer
    big_n = n + part(lam, 0) + d + 1
    found = border_strips(pad(lam, big_n - n), big_n - d, anchor_last_box_first_row=True)
    if not found:
        return SpecResult()
    if len(found) > 1:
        raise ArithmeticError(f"several anchored strips for {lam}, d={d}")
    strip, rest = found[0]
    return SpecResult(strip.height, rest)


# ---------------------------------------------------------------------------
# Euler characteristics


def _schur_gl(lam: Partition, d: int, invert: bool = False) -> LaurentChar:
    if len(lam) > d:
        return LaurentChar(d, {})
    sign = -1 if invert else 1
    return LaurentChar(d, {tuple(sign * e for e in w): c
                           for w, c in schur_polynomial(lam, d).coeffs.items()})


def _schur_sp(lam: Partition, k: int) -> LaurentChar:
    # variables x_1, 1/x_1, ..., x_k, 1/x_k
    if len(lam) > 2 * k:
        return LaurentChar(k, {})
    out: dict = {}
    for e, c in schur_polynomial(lam, 2 * k).coeffs.items():
        w = tuple(e[2 * i] - e[2 * i + 1] for i in range(k))
        out[w] = out.get(w, 0) + c
    return LaurentChar(k, out)


def _group_for(x: Union[SimpleLabel, KClass], rank: int, variant: Optional[str]) -> FiniteGroup:
    if rank > MAX_RANK:
        raise ValueError(f"rank {rank} exceeds the limit {MAX_RANK}")
    if x.cat == "gl":
        return FiniteGroup("gl", rank)
    if x.cat == "osp" and (variant or "sp") in ("o", "sp"):
        return FiniteGroup("sp", rank)
    raise ValueError("Euler specialization supports gl and osp")


def euler_specialize(x: Union[SimpleLabel, KClass], rank: int,
                     variant: Optional[str] = None) -> FiniteClass:
    """Alternating sum of the finite-rank Littlewood resolution, decomposed.

    osp classes are specialized to Sp(2 * rank).  Under the O reading a label
    is first transposed, since transposition matches the two readings.
    """
    group = _group_for(x, rank, variant)
    if x.cat == "osp" and variant == "o":
        if isinstance(x, KClass):
            flipped = KClass("osp", {transpose(k): v for k, v in x.terms.items()})
        else:
            flipped = SimpleLabel("osp", transpose(x.data))
        return euler_specialize(flipped, rank, "sp")
    if isinstance(x, KClass):
        total = FiniteClass(group, {})
        for data, mult in x.terms.items():
            total = total + euler_specialize(SimpleLabel(x.cat, data), rank, variant).scale(mult)
        return total
    chi = LaurentChar(rank, {})
    for i, level in enumerate(littlewood_complex(x, "sp" if x.cat == "osp" else None)):
        for lab, mult in level.items():
            if x.cat == "gl":
                term = _schur_gl(lab[0], rank) * _schur_gl(lab[1], rank, invert=True)
            else:
                term = _schur_sp(lab, rank)
            chi = chi + term.scale((-1) ** i * mult)
    return decompose(chi, group)


def finite_tensor_via_stable(x: SimpleLabel, y: SimpleLabel, rank: int) -> FiniteClass:
    """Stable product followed by term-wise Euler specialization."""
    if x.cat != y.cat:
        raise ValueError("category mismatch")
    prod = stable_tensor(KClass.simple(x), KClass.simple(y))
    return euler_specialize(prod, rank, "sp" if x.cat == "osp" else None)
