"""Littlewood-Richardson coefficients, symmetric group characters and
Kronecker coefficients.

Two independent routes to the Schur structure constants live here: the
tableau count in ``lr_coeff`` and the monomial expansion in
``schur_product_oracle``.  They share no code beyond partition utilities.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from functools import lru_cache
from fractions import Fraction
from math import comb, factorial
from typing import Union

from .partitions import (
    Partition, border_strips, contains, normalize, pad, part,
    partitions_of, subpartitions,
)

Exponent = tuple[int, ...]


@dataclass(frozen=True)
class CycleType:
    cycles: Partition

    @property
    def size(self) -> int:
        return sum(self.cycles)


@dataclass(frozen=True)
class SymPolynomial:
    """Polynomial in a fixed number of variables, stored as exponent -> coeff."""
    nvars: int
    coeffs: dict

    def __post_init__(self):
        for e, c in self.coeffs.items():
            if len(e) != self.nvars:
                raise ValueError("exponent length mismatch")
            if c == 0:
                raise ValueError("zero coefficient stored")


# ---------------------------------------------------------------------------
# Littlewood-Richardson rule


@lru_cache(maxsize=None)
def _lr(lam: Partition, mu: Partition, nu: Partition) -> int:
    # Fill lam/mu in reading order (rows top to bottom, right to left) with a
    # semistandard filling of content nu whose reading word is a lattice word.
    cells = [(r, c) for r in range(len(lam))
             for c in range(lam[r] - 1, part(mu, r) - 1, -1)]
    filled: dict[tuple[int, int], int] = {}
    counts = [0] * (len(nu) + 1)
    total = 0

    def rec(i: int) -> None:
        nonlocal total
        if i == len(cells):
            total += 1
            return
        r, c = cells[i]
        hi = len(nu)
        right = filled.get((r, c + 1))
        if right is not None:
            hi = min(hi, right)
        lo = 1
        above = filled.get((r - 1, c))
        if above is not None:
            lo = above + 1
        for v in range(lo, hi + 1):
            if counts[v] >= nu[v - 1]:
                continue
            if v > 1 and counts[v] >= counts[v - 1]:
                continue
            counts[v] += 1
            filled[(r, c)] = v
            rec(i + 1)
            del filled[(r, c)]
            counts[v] -= 1

    rec(0)
    return total


def lr_coeff(lam: Partition, mu: Partition, nu: Partition) -> int:
    """The Littlewood-Richardson coefficient c^lam_{mu,nu}."""
    if sum(mu) + sum(nu) != sum(lam):
        return 0
    if not contains(lam, mu) or not contains(lam, nu):
        return 0
    if not nu:
        return 1 if lam == mu else 0
    if not mu:
        return 1 if lam == nu else 0
    return _lr(lam, mu, nu)


@lru_cache(maxsize=None)
def _lr_product(mu: Partition, nu: Partition) -> tuple[tuple[Partition, int], ...]:
    n = sum(mu) + sum(nu)
    out = []
    for lam in partitions_of(n):
        c = lr_coeff(lam, mu, nu)
        if c:
            out.append((lam, c))
    return tuple(out)


def lr_product(mu: Partition, nu: Partition) -> dict[Partition, int]:
    """The expansion of s_mu * s_nu in the Schur basis."""
    if sum(mu) > sum(nu) or (sum(mu) == sum(nu) and mu > nu):
        mu, nu = nu, mu
    return dict(_lr_product(mu, nu))


@lru_cache(maxsize=None)
def _skew(lam: Partition, mu: Partition) -> tuple[tuple[Partition, int], ...]:
    if not contains(lam, mu):
        return ()
    out = []
    for nu in subpartitions(lam, sum(lam) - sum(mu)):
        c = lr_coeff(lam, mu, nu)
        if c:
            out.append((nu, c))
    return tuple(out)


def skew_expand(lam: Partition, mu: Partition) -> dict[Partition, int]:
    """Schur expansion of the skew function s_{lam/mu}: {nu: c^lam_{mu,nu}}."""
    return dict(_skew(lam, mu))


# ---------------------------------------------------------------------------
# Monomial oracle


def _ssyt_monomials(shape: Partition, nvars: int) -> Counter:
    """Monomial expansion of s_shape in nvars variables, one tableau at a time."""
    cells = [(r, c) for r in range(len(shape)) for c in range(shape[r])]
    filled: dict[tuple[int, int], int] = {}
    weight = [0] * nvars
    out: Counter = Counter()

    def rec(i: int) -> None:
        if i == len(cells):
            out[tuple(weight)] += 1
            return
        r, c = cells[i]
        lo = 1
        if c > 0:
            lo = filled[(r, c - 1)]
        if r > 0:
            lo = max(lo, filled[(r - 1, c)] + 1)
        # leave room for the rest of the column below
        hi = nvars - (len([1 for rr in range(r + 1, len(shape)) if shape[rr] > c]))
        for v in range(lo, hi + 1):
            filled[(r, c)] = v
            weight[v - 1] += 1
            rec(i + 1)
            weight[v - 1] -= 1
        filled.pop((r, c), None)

    rec(0)
    return out


@lru_cache(maxsize=None)
def _schur_poly(shape: Partition, nvars: int) -> dict:
    return dict(_ssyt_monomials(shape, nvars))


def schur_polynomial(shape: Partition, nvars: int) -> SymPolynomial:
    """s_shape(x_1, ..., x_nvars) as a dense exponent map."""
    return SymPolynomial(nvars, dict(_schur_poly(shape, nvars)))


def _dominant_exponents(n: int, nvars: int) -> list[Exponent]:
    out = []
    for lam in partitions_of(n):
        if len(lam) <= nvars:
            out.append(lam + (0,) * (nvars - len(lam)))
    return out


def schur_product_oracle(mu: Partition, nu: Partition, nvars: int) -> dict[Partition, int]:
    """Schur expansion of s_mu * s_nu by monomial expansion and peeling.

    The product is symmetric, so only its coefficients on weakly decreasing
    exponents are formed.  The lexicographically greatest of those with a
    nonzero coefficient is the leading term of a unique Schur polynomial,
    which is subtracted off; this repeats until nothing remains.
    """
    n = sum(mu) + sum(nu)
    if nvars < n:
        raise ValueError(f"need at least {n} variables, got {nvars}")
    smu = _schur_poly(mu, nvars)
    snu = _schur_poly(nu, nvars)
    remaining: dict[Exponent, int] = {}
    for alpha in _dominant_exponents(n, nvars):
        total = 0
        for a, ca in smu.items():
            b = tuple(x - y for x, y in zip(alpha, a))
            if any(x < 0 for x in b):
                continue
            cb = snu.get(b)
            if cb:
                total += ca * cb
        if total:
            remaining[alpha] = total
    return schur_decompose(remaining, nvars)


def schur_decompose(poly: dict, nvars: int) -> dict[Partition, int]:
    """Schur expansion of a symmetric polynomial given by its coefficients on
    weakly decreasing exponents (other exponents are ignored)."""
    remaining = {e: c for e, c in poly.items()
                 if c and all(x >= y for x, y in zip(e, e[1:]))}
    result: dict[Partition, int] = {}
    while remaining:
        top = max(remaining)
        c = remaining[top]
        lam = normalize(top)
        result[lam] = c
        for alpha, k in _schur_poly(lam, nvars).items():
            if any(x < y for x, y in zip(alpha, alpha[1:])):
                continue
            left = remaining.get(alpha, 0) - c * k
            if left:
                remaining[alpha] = left
            else:
                remaining.pop(alpha, None)
    return result


# ---------------------------------------------------------------------------
# Symmetric group characters


def _cycles(ct: Union[CycleType, Partition]) -> Partition:
    if isinstance(ct, CycleType):
        return ct.cycles
    return normalize(sorted(ct, reverse=True))


@lru_cache(maxsize=None)
def _mn(lam: Partition, rho: Partition) -> int:
    if not rho:
        return 1 if not lam else 0
    r = rho[0]
    total = 0
    for strip, rest in border_strips(lam, r):
        val = _mn(rest, rho[1:])
        if val:
            total += -val if strip.height % 2 else val
    return total


def character_mn(lam: Partition, ct: Union[CycleType, Partition]) -> int:
    """The irreducible character chi^lam at the class of the given cycle type."""
    rho = _cycles(ct)
    if sum(rho) != sum(lam):
        raise ValueError(f"size mismatch: |{lam}| != |{rho}|")
    return _mn(lam, rho)


def centralizer_order(rho: Partition) -> int:
    """z_rho = prod_i i^{m_i} m_i!."""
    z = 1
    for i, m in Counter(rho).items():
        z *= i ** m * factorial(m)
    return z


def class_size(rho: Partition) -> int:
    return factorial(sum(rho)) // centralizer_order(rho)


@lru_cache(maxsize=None)
def character_row(lam: Partition) -> tuple[int, ...]:
    """chi^lam on every class of S_n, in the order of partitions_of(n)."""
    return tuple(_mn(lam, rho) for rho in partitions_of(sum(lam)))


def kronecker(lam: Partition, mu: Partition, nu: Partition) -> int:
    """The Kronecker coefficient, via the character inner product."""
    n = sum(lam)
    if sum(mu) != n or sum(nu) != n:
        raise ValueError("Kronecker coefficient needs partitions of one size")
    a, b, c = character_row(lam), character_row(mu), character_row(nu)
    total = 0
    for rho, x, y, z in zip(partitions_of(n), a, b, c):
        if x and y and z:
            total += class_size(rho) * x * y * z
    q, r = divmod(total, factorial(n))
    if r:
        raise ArithmeticError("character inner product is not an integer")
    return q


class StabilizationError(ArithmeticError):
    pass


def stabilization_point(lam: Partition, mu: Partition, nu: Partition) -> int:
    return sum(lam) + sum(mu) + sum(nu) + max(part(lam, 0), part(mu, 0), part(nu, 0)) + 1


def padded_kronecker(lam: Partition, mu: Partition, nu: Partition, n: int) -> int:
    """g at size n of the three shapes with a first row prepended."""
    shapes = [pad(x, n - sum(x)) for x in (lam, mu, nu)]
    if any(s is None for s in shapes):
        raise ValueError(f"n={n} too small to pad")
    return kronecker(*shapes)


def stable_kronecker(lam: Partition, mu: Partition, nu: Partition) -> int:
    """The stable (reduced) Kronecker coefficient.

    Evaluated at a conservative size n0 and again at n0 + 1; a disagreement
    means the stabilization bound was wrong and raises.
    """
    n0 = stabilization_point(lam, mu, nu)
    first = padded_kronecker(lam, mu, nu, n0)
    second = padded_kronecker(lam, mu, nu, n0 + 1)
    if first != second:
        raise StabilizationError(
            f"Kronecker values differ at n={n0} ({first}) and n={n0 + 1} ({second})")
    return first


# ---------------------------------------------------------------------------
# Character polynomials
#
# A polynomial in the cycle counts m_1, m_2, ... is stored in the basis
# B_rho = prod_j binom(m_j, m_j(rho)), keyed by rho.  For n >= |lam| + lam_1
# the character of S_n on the padded shape lam[n - |lam|] is the polynomial
# q_lam = sum_i (-1)^i sum_{rho |- |lam| - i} chi^{lam/(1^i)}(rho) B_rho,
# from expanding the first row of the Jacobi-Trudi determinant and inducing.


def _multiplicities(rho: Partition) -> dict[int, int]:
    return dict(Counter(rho))


def _from_multiplicities(mult: dict[int, int]) -> Partition:
    return tuple(sorted((j for j, k in mult.items() for _ in range(k)), reverse=True))


@lru_cache(maxsize=None)
def _binom_product(a: int, b: int) -> tuple[tuple[int, int], ...]:
    # binom(m, a) binom(m, b) = sum_k binom(k, a) binom(a, k - b) binom(m, k)
    return tuple((k, comb(k, a) * comb(a, k - b)) for k in range(max(a, b), a + b + 1)
                 if comb(a, k - b))


@lru_cache(maxsize=None)
def _basis_product(rho: Partition, sigma: Partition) -> tuple[tuple[Partition, int], ...]:
    mr, ms = _multiplicities(rho), _multiplicities(sigma)
    parts = sorted(set(mr) | set(ms))
    terms: dict[Partition, int] = {(): 1}
    for j in parts:
        options = _binom_product(mr.get(j, 0), ms.get(j, 0))
        new: dict[Partition, int] = {}
        for key, c in terms.items():
            for k, e in options:
                nk = tuple(sorted(key + (j,) * k, reverse=True))
                new[nk] = new.get(nk, 0) + c * e
        terms = new
    return tuple((k, v) for k, v in terms.items() if v)


def _skew_character(lam: Partition, i: int, rho: Partition) -> int:
    return sum(c * _mn(beta, rho) for beta, c in _skew(lam, (1,) * i))


@lru_cache(maxsize=None)
def character_polynomial(lam: Partition) -> tuple[tuple[Partition, int], ...]:
    """q_lam in the binomial basis, as (rho, coefficient) pairs."""
    out: dict[Partition, int] = {}
    for i in range(len(lam) + 1):
        for rho in partitions_of(sum(lam) - i):
            c = _skew_character(lam, i, rho)
            if c:
                out[rho] = out.get(rho, 0) + (-1) ** i * c
    return tuple((k, v) for k, v in out.items() if v)


def evaluate_character_polynomial(lam: Partition, cycle_type: Partition) -> int:
    """q_lam at a permutation with the given cycle type."""
    m = _multiplicities(cycle_type)
    total = 0
    for rho, c in character_polynomial(lam):
        term = c
        for j, k in _multiplicities(rho).items():
            term *= comb(m.get(j, 0), k)
        total += term
    return total


def reduced_kronecker_product(lam: Partition, mu: Partition) -> dict[Partition, int]:
    """{nu: stable Kronecker coefficient} via character polynomials.

    Independent of ``stable_kronecker``: no characters of large symmetric
    groups are formed, only of S_k for k <= |lam| + |mu|.
    """
    poly: dict[Partition, int] = {}
    for rho, a in character_polynomial(lam):
        for sigma, b in character_polynomial(mu):
            for tau, e in _basis_product(rho, sigma):
                poly[tau] = poly.get(tau, 0) + a * b * e
    poly = {k: v for k, v in poly.items() if v}
    result: dict[Partition, int] = {}
    for deg in range(sum(lam) + sum(mu), -1, -1):
        top = {rho: c for rho, c in poly.items() if sum(rho) == deg}
        if not top:
            continue
        for nu in partitions_of(deg):
            g = Fraction(0)
            for rho, c in top.items():
                g += Fraction(c * _mn(nu, rho), centralizer_order(rho))
            if g.denominator != 1:
                raise ArithmeticError("non-integral reduced Kronecker coefficient")
            g = int(g)
            if not g:
                continue
            result[nu] = g
            for rho, c in character_polynomial(nu):
                v = poly.get(rho, 0) - g * c
                if v:
                    poly[rho] = v
                else:
                    poly.pop(rho, None)
        if any(sum(rho) == deg for rho in poly):
            raise ArithmeticError("character polynomial did not peel cleanly")
    if poly:
        raise ArithmeticError("character polynomial did not peel cleanly")
    return result
