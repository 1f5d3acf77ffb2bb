"""Exact characters of GL(d) and Sp(2k), and decomposition into irreducibles.

Characters are Laurent polynomials stored as {weight tuple: coefficient}.
GL(d) uses d variables; Sp(2k) uses k variables x_i standing for the torus
eigenvalue pairs x_i, 1/x_i.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from math import factorial, prod

from .partitions import Partition, hook_lengths, normalize

Weight = tuple[int, ...]

GROUP_KINDS = ("gl", "sp", "sym")


@dataclass(frozen=True)
class FiniteGroup:
    """GL(rank), Sp(2 * rank) or the symmetric group on rank letters."""
    kind: str
    rank: int

    def __post_init__(self):
        if self.kind not in GROUP_KINDS:
            raise ValueError(f"unknown group kind {self.kind!r}")
        if self.rank < 1:
            raise ValueError("rank must be positive")

    def __str__(self) -> str:
        name = {"gl": "GL", "sp": "Sp", "sym": "S"}[self.kind]
        n = 2 * self.rank if self.kind == "sp" else self.rank
        return f"{name}({n})"


@dataclass(frozen=True)
class LaurentChar:
    rank: int
    coeffs: dict = field(default_factory=dict)

    def __post_init__(self):
        for w in self.coeffs:
            if len(w) != self.rank:
                raise ValueError("weight length does not match rank")
        object.__setattr__(self, "coeffs", {w: c for w, c in self.coeffs.items() if c})

    def __add__(self, other: "LaurentChar") -> "LaurentChar":
        out = dict(self.coeffs)
        for w, c in other.coeffs.items():
            out[w] = out.get(w, 0) + c
        return LaurentChar(self.rank, out)

    def scale(self, c: int) -> "LaurentChar":
        return LaurentChar(self.rank, {w: c * v for w, v in self.coeffs.items()})

    def __sub__(self, other: "LaurentChar") -> "LaurentChar":
        return self + other.scale(-1)

    def __mul__(self, other: "LaurentChar") -> "LaurentChar":
        if self.rank != other.rank:
            raise ValueError("rank mismatch")
        out: dict = {}
        for a, x in self.coeffs.items():
            for b, y in other.coeffs.items():
                w = tuple(p + q for p, q in zip(a, b))
                out[w] = out.get(w, 0) + x * y
        return LaurentChar(self.rank, out)

    def dimension(self) -> int:
        return sum(self.coeffs.values())

    def is_invariant(self, kind: str) -> bool:
        for w, c in self.coeffs.items():
            for image in _weyl_orbit(w, kind):
                if self.coeffs.get(image, 0) != c:
                    return False
        return True


def _weyl_orbit(w: Weight, kind: str) -> set[Weight]:
    perms = set(itertools.permutations(w))
    if kind == "gl":
        return perms
    out = set()
    for p in perms:
        for signs in itertools.product((1, -1), repeat=len(p)):
            out.add(tuple(s * x for s, x in zip(signs, p)))
    return out


@dataclass(frozen=True)
class FiniteClass:
    """Integer combination of irreducibles of a finite group.

    Labels are dominant weights for GL, partitions with at most rank parts
    for Sp, and partitions of rank for the symmetric group.
    """
    group: FiniteGroup
    terms: dict = field(default_factory=dict)

    def __post_init__(self):
        object.__setattr__(self, "terms", {k: v for k, v in self.terms.items() if v})

    def __add__(self, other: "FiniteClass") -> "FiniteClass":
        if self.group != other.group:
            raise ValueError("group mismatch")
        out = dict(self.terms)
        for k, v in other.terms.items():
            out[k] = out.get(k, 0) + v
        return FiniteClass(self.group, out)

    def scale(self, c: int) -> "FiniteClass":
        return FiniteClass(self.group, {k: c * v for k, v in self.terms.items()})

    def __mul__(self, other: "FiniteClass") -> "FiniteClass":
        if self.group != other.group:
            raise ValueError("group mismatch")
        return decompose(character_of(self) * character_of(other), self.group)

    def is_genuine(self) -> bool:
        return all(v > 0 for v in self.terms.values())

    def sorted_terms(self) -> list:
        return sorted(self.terms.items(), key=lambda kv: (sum(abs(x) for x in kv[0]), kv[0]))


# ---------------------------------------------------------------------------
# exact division by binomials


def _divide_binomial(p: dict, lead: Weight, trail: Weight) -> dict:
    """Exact quotient of p by (x^lead - x^trail), lead > trail lexicographically."""
    if not p:
        return {}
    # the lowest term of a true quotient q satisfies q_min + trail = p_min
    floor = tuple(a - b for a, b in zip(min(p), trail))
    rem = dict(p)
    quot: dict = {}
    while rem:
        top = max(rem)
        c = rem.pop(top)
        q = tuple(a - b for a, b in zip(top, lead))
        if q < floor:
            raise ArithmeticError("division by binomial is not exact")
        quot[q] = quot.get(q, 0) + c
        w = tuple(a + b for a, b in zip(q, trail))
        v = rem.get(w, 0) + c
        if v:
            rem[w] = v
        else:
            rem.pop(w, None)
    return {k: v for k, v in quot.items() if v}


def _unit(rank: int, i: int, value: int = 1) -> Weight:
    return tuple(value if j == i else 0 for j in range(rank))


def _alternant(exps: list[int], rank: int, symplectic: bool) -> dict:
    out: dict = {}
    for perm in itertools.permutations(range(rank)):
        sign = _perm_sign(perm)
        if symplectic:
            for flips in itertools.product((1, -1), repeat=rank):
                w = tuple(flips[i] * exps[perm[i]] for i in range(rank))
                s = sign * prod(flips)
                out[w] = out.get(w, 0) + s
        else:
            w = tuple(exps[perm[i]] for i in range(rank))
            out[w] = out.get(w, 0) + sign
    return {k: v for k, v in out.items() if v}


def _perm_sign(perm: tuple[int, ...]) -> int:
    sign = 1
    seen = [False] * len(perm)
    for i in range(len(perm)):
        if seen[i]:
            continue
        j, length = i, 0
        while not seen[j]:
            seen[j] = True
            j = perm[j]
            length += 1
        if length % 2 == 0:
            sign = -sign
    return sign


# ---------------------------------------------------------------------------
# characters


def gl_character(w: Weight, d: int) -> LaurentChar:
    """The irreducible GL(d) character with highest weight w (bialternant)."""
    w = tuple(int(x) for x in w)
    if len(w) != d or any(a < b for a, b in zip(w, w[1:])):
        raise ValueError(f"{w} is not a dominant weight for GL({d})")
    shift = w[-1]
    lam = [x - shift for x in w]
    num = _alternant([lam[i] + d - 1 - i for i in range(d)], d, symplectic=False)
    for i in range(d):
        for j in range(i + 1, d):
            num = _divide_binomial(num, _unit(d, i), _unit(d, j))
    return LaurentChar(d, {tuple(x + shift for x in e): c for e, c in num.items()})


def sp_character(mu: Partition, k: int) -> LaurentChar:
    """The irreducible Sp(2k) character with highest weight mu."""
    mu = normalize(mu)
    if len(mu) > k:
        raise ValueError(f"{mu} has more than {k} parts")
    lam = list(mu) + [0] * (k - len(mu))
    num = _alternant([lam[i] + k - i for i in range(k)], k, symplectic=True)
    # denominator: prod_i (x_i - 1/x_i) prod_{i<j} (x_i - x_j)(1 - 1/(x_i x_j))
    for i in range(k):
        num = _divide_binomial(num, _unit(k, i), _unit(k, i, -1))
    for i in range(k):
        for j in range(i + 1, k):
            num = _divide_binomial(num, _unit(k, i), _unit(k, j))
            zero = (0,) * k
            both = tuple(-1 if t in (i, j) else 0 for t in range(k))
            num = _divide_binomial(num, zero, both)
    return LaurentChar(k, num)


def irreducible_character(group: FiniteGroup, label) -> LaurentChar:
    if group.kind == "gl":
        return gl_character(label, group.rank)
    if group.kind == "sp":
        return sp_character(label, group.rank)
    raise ValueError("symmetric group characters are class functions, not torus characters")


def character_of(x: FiniteClass) -> LaurentChar:
    total = LaurentChar(x.group.rank, {})
    for label, mult in x.terms.items():
        total = total + irreducible_character(x.group, label).scale(mult)
    return total


def decompose(chi: LaurentChar, group: FiniteGroup) -> FiniteClass:
    """Peel off irreducibles by lexicographically greatest weight."""
    if group.kind == "sym":
        raise ValueError("decompose works on torus characters")
    if chi.rank != group.rank:
        raise ValueError("rank mismatch")
    if not chi.is_invariant(group.kind):
        raise ValueError("character is not Weyl-group invariant")
    rem = dict(chi.coeffs)
    out: dict = {}
    while rem:
        top = max(rem)
        c = rem[top]
        label = top if group.kind == "gl" else normalize(top)
        out[label] = c
        for w, v in irreducible_character(group, label).coeffs.items():
            left = rem.get(w, 0) - c * v
            if left:
                rem[w] = left
            else:
                rem.pop(w, None)
    return FiniteClass(group, out)


def dim(group: FiniteGroup, label) -> int:
    """Dimension of an irreducible, by the Weyl or hook length formula."""
    if group.kind == "gl":
        w = tuple(label)
        d = group.rank
        if len(w) != d or any(a < b for a, b in zip(w, w[1:])):
            raise ValueError(f"{w} is not dominant for {group}")
        num = prod(w[i] - w[j] + j - i for i in range(d) for j in range(i + 1, d))
        den = prod(j - i for i in range(d) for j in range(i + 1, d))
        return num // den
    if group.kind == "sp":
        mu = normalize(label)
        k = group.rank
        if len(mu) > k:
            raise ValueError(f"{mu} has more than {k} parts")
        lam = list(mu) + [0] * (k - len(mu))
        l = [lam[i] + k - i for i in range(k)]
        m = [k - i for i in range(k)]
        val = Fraction(1)
        for i in range(k):
            val *= Fraction(l[i], m[i])
            for j in range(i + 1, k):
                val *= Fraction(l[i] ** 2 - l[j] ** 2, m[i] ** 2 - m[j] ** 2)
        return int(val)
    lam = normalize(label)
    if sum(lam) != group.rank:
        raise ValueError(f"{lam} is not a partition of {group.rank}")
    return factorial(group.rank) // prod(hook_lengths(lam))
