"""Stable Grothendieck rings and the branching operations between them.

Categories: "glpol" (polynomial GL), "ga" (general affine, same ring as
glpol), "gl" (mixed tensors, labels are pairs of partitions), "osp" (the
orthogonal and symplectic categories, which share one ring; operations that
tell them apart take ``variant="o"`` or ``variant="sp"``) and "sym" (the
infinite symmetric group).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterator, Optional, Union

from .partitions import (
    EMPTY, Partition, contains, format_partition, in_Q, parse,
    partitions_of, partitions_up_to, subpartitions, transpose,
)
from .symfunc import lr_coeff, lr_product, reduced_kronecker_product, skew_expand

CATEGORIES = ("glpol", "ga", "gl", "osp", "sym")
VARIANTS = ("o", "sp")

Label = Union[Partition, tuple[Partition, Partition]]


class CategoryError(ValueError):
    pass


def _check_cat(cat: str) -> str:
    cat = cat.lower()
    if cat not in CATEGORIES:
        raise CategoryError(f"unknown category {cat!r}")
    return cat


def _check_variant(variant: str) -> str:
    variant = variant.lower()
    if variant not in VARIANTS:
        raise CategoryError(f"variant must be 'o' or 'sp', not {variant!r}")
    return variant


@dataclass(frozen=True)
class SimpleLabel:
    cat: str
    data: Label

    def __post_init__(self):
        object.__setattr__(self, "cat", _check_cat(self.cat))
        if self.cat == "gl":
            if not (isinstance(self.data, tuple) and len(self.data) == 2
                    and all(isinstance(x, tuple) for x in self.data)):
                raise CategoryError("gl labels are pairs of partitions")
        elif not all(isinstance(x, int) for x in self.data):
            raise CategoryError(f"{self.cat} labels are partitions")

    @property
    def size(self) -> int:
        if self.cat == "gl":
            return sum(self.data[0]) + sum(self.data[1])
        return sum(self.data)

    def __str__(self) -> str:
        return format_label(self.cat, self.data)


def format_label(cat: str, data: Label) -> str:
    if cat == "gl":
        return f"{format_partition(data[0])}|{format_partition(data[1])}"
    return format_partition(data)


def parse_label(cat: str, text: str) -> SimpleLabel:
    """"2,1" for one-partition categories; "2,1|1" for gl."""
    cat = _check_cat(cat)
    if cat == "gl":
        if "|" not in text:
            raise CategoryError("gl labels are written 'lam|lam_prime'")
        a, b = text.split("|", 1)
        return SimpleLabel(cat, (parse(a), parse(b)))
    if "|" in text:
        raise CategoryError(f"{cat} labels are single partitions")
    return SimpleLabel(cat, parse(text))


def unit_label(cat: str) -> Label:
    return (EMPTY, EMPTY) if _check_cat(cat) == "gl" else EMPTY


@dataclass(frozen=True)
class KClass:
    """Finite integer combination of simple classes of one category."""
    cat: str
    terms: dict = field(default_factory=dict)

    def __post_init__(self):
        object.__setattr__(self, "cat", _check_cat(self.cat))
        object.__setattr__(self, "terms", {k: v for k, v in self.terms.items() if v})

    @staticmethod
    def simple(label: SimpleLabel) -> "KClass":
        return KClass(label.cat, {label.data: 1})

    @staticmethod
    def of(cat: str, data: Label, mult: int = 1) -> "KClass":
        return KClass(cat, {SimpleLabel(cat, data).data: mult})

    @staticmethod
    def one(cat: str) -> "KClass":
        return KClass(cat, {unit_label(cat): 1})

    def _same(self, other: "KClass") -> None:
        if self.cat != other.cat:
            raise CategoryError(f"category mismatch: {self.cat} vs {other.cat}")

    def __add__(self, other: "KClass") -> "KClass":
        self._same(other)
        terms = dict(self.terms)
        for k, v in other.terms.items():
            terms[k] = terms.get(k, 0) + v
        return KClass(self.cat, terms)

    def __neg__(self) -> "KClass":
        return KClass(self.cat, {k: -v for k, v in self.terms.items()})

    def __sub__(self, other: "KClass") -> "KClass":
        return self + (-other)

    def scale(self, c: int) -> "KClass":
        return KClass(self.cat, {k: c * v for k, v in self.terms.items()})

    def __mul__(self, other: "KClass") -> "KClass":
        return stable_tensor(self, other)

    def __getitem__(self, data: Label) -> int:
        return self.terms.get(data, 0)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, KClass):
            return NotImplemented
        return self.cat == other.cat and self.terms == other.terms

    def __hash__(self) -> int:
        return hash((self.cat, frozenset(self.terms.items())))

    def sorted_terms(self) -> list[tuple[Label, int]]:
        return sorted(self.terms.items(), key=lambda kv: _label_key(self.cat, kv[0]))

    def to_json(self) -> dict:
        out = []
        for data, mult in self.sorted_terms():
            if self.cat == "gl":
                label = [format_partition(data[0]), format_partition(data[1])]
            else:
                label = [format_partition(data)]
            out.append({"label": label, "mult": mult})
        return {"cat": self.cat, "terms": out}

    @staticmethod
    def from_json(obj: dict) -> "KClass":
        cat = _check_cat(obj["cat"])
        terms: dict = {}
        for t in obj["terms"]:
            lab = t["label"]
            data = (parse(lab[0]), parse(lab[1])) if cat == "gl" else parse(lab[0])
            terms[data] = terms.get(data, 0) + int(t["mult"])
        return KClass(cat, terms)

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for data, mult in self.sorted_terms():
            name = f"V[{format_label(self.cat, data)}]"
            parts.append(name if mult == 1 else f"{mult}*{name}")
        return " + ".join(parts)


def _label_key(cat: str, data: Label) -> tuple:
    if cat == "gl":
        return (sum(data[0]) + sum(data[1]), data)
    return (sum(data), data)


def _accumulate(out: dict, key, value: int) -> None:
    if value:
        out[key] = out.get(key, 0) + value


# ---------------------------------------------------------------------------
# simple x simple products


def _osp_product(lam: Partition, mu: Partition) -> dict[Partition, int]:
    # sum over alpha, beta, gamma of c^lam_{alpha beta} c^mu_{beta gamma} c^nu_{alpha gamma}
    out: dict[Partition, int] = {}
    for alpha in subpartitions(lam):
        for beta, c1 in skew_expand(lam, alpha).items():
            if not contains(mu, beta):
                continue
            for gamma, c2 in skew_expand(mu, beta).items():
                for nu, c3 in lr_product(alpha, gamma).items():
                    _accumulate(out, nu, c1 * c2 * c3)
    return out


def _splittings(lam: Partition) -> Iterator[tuple[Partition, Partition, int]]:
    """(alpha, beta, c^lam_{alpha beta}) for all nonzero coefficients."""
    for alpha in subpartitions(lam):
        for beta, c in skew_expand(lam, alpha).items():
            yield alpha, beta, c


def _gl_product(x: tuple[Partition, Partition], y: tuple[Partition, Partition]
                ) -> dict[tuple[Partition, Partition], int]:
    lam, lamp = x
    mu, mup = y
    out: dict = {}
    for alpha, beta, c1 in _splittings(lam):
        if not contains(mup, beta):
            continue
        for alphap, betap, c2 in _splittings(lamp):
            if not contains(mu, betap):
                continue
            for gamma, c3 in skew_expand(mu, betap).items():
                for gammap, c4 in skew_expand(mup, beta).items():
                    base = c1 * c2 * c3 * c4
                    left = lr_product(alpha, gamma)
                    right = lr_product(alphap, gammap)
                    for nu, c5 in left.items():
                        for nup, c6 in right.items():
                            _accumulate(out, (nu, nup), base * c5 * c6)
    return out


def simple_product(cat: str, x: Label, y: Label) -> dict:
    cat = _check_cat(cat)
    if cat in ("glpol", "ga"):
        return lr_product(x, y)
    if cat == "osp":
        return _osp_product(x, y)
    if cat == "gl":
        return _gl_product(x, y)
    return reduced_kronecker_product(x, y)


def stable_tensor(x: KClass, y: KClass) -> KClass:
    """Product in the stable Grothendieck ring."""
    x._same(y)
    out: dict = {}
    for a, ca in x.terms.items():
        for b, cb in y.terms.items():
            for nu, c in simple_product(x.cat, a, b).items():
                _accumulate(out, nu, ca * cb * c)
    return KClass(x.cat, out)


# ---------------------------------------------------------------------------
# coproduct, restriction, polarization


def _doublings_inside(lam: Partition, variant: str) -> Iterator[Partition]:
    """Doubled shapes (2 beta, or its transpose for sp) contained in lam."""
    for shape in subpartitions(lam):
        rows = shape if variant == "o" else transpose(shape)
        if all(r % 2 == 0 for r in rows):
            yield shape


def _doublings_inside_transposed(lam: Partition, variant: str) -> Iterator[Partition]:
    # (2 beta)^t for o, 2 beta for sp: used by polarization
    return _doublings_inside(lam, "sp" if variant == "o" else "o")


def comultiply(x: KClass, variant: Optional[str] = None) -> dict:
    """Coproduct multiplicities {(left, right): n}.

    For gl, labels are pairs; for osp, the variant selects the doubling."""
    out: dict = {}
    if x.cat == "gl":
        for (lam, lamp), coeff in x.terms.items():
            for gamma in subpartitions(lam):
                if not contains(lamp, gamma):
                    continue
                for alpha, c1 in skew_expand(lam, gamma).items():
                    for beta, c2 in skew_expand(lamp, gamma).items():
                        for mu, nu, c3 in _splittings(alpha):
                            for mup, nup, c4 in _splittings(beta):
                                _accumulate(out, ((mu, mup), (nu, nup)), coeff * c1 * c2 * c3 * c4)
        return out
    if x.cat != "osp":
        raise CategoryError("comultiply is defined for gl and osp")
    variant = _check_variant(variant or "")
    for lam, coeff in x.terms.items():
        for shape in _doublings_inside(lam, variant):
            for alpha, c1 in skew_expand(lam, shape).items():
                for mu, nu, c2 in _splittings(alpha):
                    _accumulate(out, (mu, nu), coeff * c1 * c2)
    return out


def restrict(x: KClass, variant: str) -> KClass:
    """Restriction from gl to the orthogonal or symplectic subgroup."""
    if x.cat != "gl":
        raise CategoryError("restrict takes a gl class")
    variant = _check_variant(variant)
    out: dict = {}
    for (lam, lamp), coeff in x.terms.items():
        for s1 in _doublings_inside(lam, variant):
            for alpha, c1 in skew_expand(lam, s1).items():
                for s2 in _doublings_inside(lamp, variant):
                    for beta, c2 in skew_expand(lamp, s2).items():
                        for mu, c3 in lr_product(alpha, beta).items():
                            _accumulate(out, mu, coeff * c1 * c2 * c3)
    return KClass("osp", out)


def polarize(x: KClass, variant: str) -> KClass:
    """Polarization from osp to gl."""
    if x.cat != "osp":
        raise CategoryError("polarize takes an osp class")
    variant = _check_variant(variant)
    out: dict = {}
    for lam, coeff in x.terms.items():
        for shape in _doublings_inside_transposed(lam, variant):
            for alpha, c1 in skew_expand(lam, shape).items():
                for mu, mup, c2 in _splittings(alpha):
                    _accumulate(out, (mu, mup), coeff * c1 * c2)
    return KClass("gl", out)


# ---------------------------------------------------------------------------
# Ext, blocks


def ext_dim(source: SimpleLabel, target: SimpleLabel, i: int,
            variant: Optional[str] = None) -> int:
    """dim Ext^i(source, target)."""
    if source.cat != target.cat:
        raise CategoryError("category mismatch")
    if i < 0:
        return 0
    cat = source.cat
    if cat == "gl":
        (mu, mup), (lam, lamp) = source.data, target.data
        total = 0
        for nu in partitions_of(i):
            total += lr_coeff(lam, mu, nu) * lr_coeff(lamp, mup, transpose(nu))
        return total
    if cat == "osp":
        sign = 1 if _check_variant(variant or "") == "o" else -1
        mu, lam = source.data, target.data
        return sum(lr_coeff(lam, mu, nu) for nu in partitions_of(2 * i) if in_Q(nu, sign))
    if cat == "ga":
        return lr_coeff(target.data, source.data, (1,) * i)
    raise CategoryError(f"no Ext formula for {cat}")


def same_block(a: SimpleLabel, b: SimpleLabel) -> bool:
    if a.cat != b.cat:
        raise CategoryError("category mismatch")
    if a.cat == "gl":
        (lam, lamp), (mu, mup) = a.data, b.data
        return sum(lam) - sum(lamp) == sum(mu) - sum(mup)
    if a.cat == "osp":
        return (sum(a.data) - sum(b.data)) % 2 == 0
    if a.cat == "ga":
        return True
    raise CategoryError(f"no block description for {a.cat}")


# ---------------------------------------------------------------------------
# graph calculus


@dataclass(frozen=True)
class LabeledGraph:
    vertices: tuple
    edges: tuple  # (vertex, vertex, Partition)

    def __post_init__(self):
        touched = {v for e in self.edges for v in e[:2]}
        if set(self.vertices) - touched:
            raise ValueError("every vertex needs an incident edge")
        if touched - set(self.vertices):
            raise ValueError("edge endpoint is not a vertex")


def _intersect(a: Partition, b: Partition) -> Partition:
    return tuple(x for x in (min(p, q) for p, q in zip(a, b)) if x)


def lr_graph_eval(g: LabeledGraph) -> int:
    """Sum over vertex labelings of the product of LR coefficients on edges."""
    bound: dict = {}
    for u, v, lab in g.edges:
        for w in (u, v):
            bound[w] = lab if w not in bound else _intersect(bound[w], lab)
    order = sorted(g.vertices, key=lambda v: (sum(bound[v]), str(v)))
    assigned: dict = {}
    total = 0

    def rec(k: int, acc: int) -> None:
        nonlocal total
        if k == len(order):
            total += acc
            return
        v = order[k]
        for lab in subpartitions(bound[v]):
            assigned[v] = lab
            val = acc
            for a, b, edge in g.edges:
                if v not in (a, b):
                    continue
                other = b if a == v else a
                if other not in assigned:
                    continue
                val *= lr_coeff(edge, assigned[a], assigned[b])
                if not val:
                    break
            if val:
                rec(k + 1, val)
            del assigned[v]

    rec(0, 1)
    return total


def hexagon(lam: Partition, lamp: Partition, mu: Partition, mup: Partition,
            nu: Partition, nup: Partition) -> LabeledGraph:
    """The six-cycle whose evaluation is [V_{nu,nu'} : V_{lam,lam'} (x) V_{mu,mu'}].

    Vertices a, b, c, a', b', c' in cyclic order a, b, c', a', b', c.
    """
    edges = (("a", "b", lam), ("b", "c'", mup), ("c'", "a'", nup),
             ("a'", "b'", lamp), ("b'", "c", mu), ("c", "a", nu))
    return LabeledGraph(("a", "b", "c", "a'", "b'", "c'"), edges)


# ---------------------------------------------------------------------------
# Littlewood complexes and injectives


def littlewood_complex(x: SimpleLabel, variant: Optional[str] = None) -> list[dict]:
    """Terms of the minimal injective resolution of a simple, by degree.

    Entry i maps injective labels (the Schur functor S_nu(V), or
    S_nu(V) (x) S_nu'(V_*) for gl) to multiplicities.
    """
    terms: list[dict] = []
    if x.cat == "gl":
        lam, lamp = x.data
        for i in range(min(sum(lam), sum(lamp)) + 1):
            level: dict = {}
            for mu in partitions_of(i):
                mut = transpose(mu)
                if not contains(lam, mu) or not contains(lamp, mut):
                    continue
                for nu, c1 in skew_expand(lam, mu).items():
                    for nup, c2 in skew_expand(lamp, mut).items():
                        _accumulate(level, (nu, nup), c1 * c2)
            terms.append(level)
    elif x.cat == "osp":
        sign = 1 if _check_variant(variant or "") == "o" else -1
        lam = x.data
        for i in range(sum(lam) // 2 + 1):
            level = {}
            for mu in partitions_of(2 * i):
                if in_Q(mu, sign) and contains(lam, mu):
                    for nu, c in skew_expand(lam, mu).items():
                        _accumulate(level, nu, c)
            terms.append(level)
    elif x.cat == "ga":
        lam = x.data
        for i in range(len(lam) + 1):
            terms.append(dict(skew_expand(lam, (1,) * i)))
    else:
        raise CategoryError(f"no Littlewood complex for {x.cat}")
    while terms and not terms[-1]:
        terms.pop()
    return terms


def injective_to_simple(inj: SimpleLabel, variant: Optional[str] = None) -> KClass:
    """The class of an indecomposable injective in the basis of simples."""
    if inj.cat == "gl":
        lam, lamp = inj.data
        out: dict = {}
        for beta in subpartitions(lam):
            if not contains(lamp, beta):
                continue
            for mu, c1 in skew_expand(lam, beta).items():
                for mup, c2 in skew_expand(lamp, beta).items():
                    _accumulate(out, (mu, mup), c1 * c2)
        return KClass("gl", out)
    if inj.cat == "osp":
        variant = _check_variant(variant or "")
        out = {}
        for shape in _doublings_inside(inj.data, variant):
            for mu, c in skew_expand(inj.data, shape).items():
                _accumulate(out, mu, c)
        return KClass("osp", out)
    if inj.cat == "ga":
        return _ga_injective(inj.data)
    raise CategoryError(f"injective decomposition unavailable for {inj.cat}")


def _ga_injective(lam: Partition) -> KClass:
    # The Littlewood complex gives [V_lam] = sum_i (-1)^i [S_{lam/(1^i)}]; the
    # transition matrix is unitriangular by size, so invert it by recursion:
    # [S_lam] = [V_lam] - sum_{i >= 1} (-1)^i sum_nu c [S_nu].
    return KClass("ga", dict(_ga_injective_terms(lam)))


_GA_CACHE: dict[Partition, tuple] = {}


def _ga_injective_terms(lam: Partition) -> tuple:
    if lam in _GA_CACHE:
        return _GA_CACHE[lam]
    out: dict = {lam: 1}
    for i in range(1, len(lam) + 1):
        for nu, c in skew_expand(lam, (1,) * i).items():
            for mu, k in _ga_injective_terms(nu):
                _accumulate(out, mu, (-1) ** (i + 1) * c * k)
    result = tuple((k, v) for k, v in out.items() if v)
    _GA_CACHE[lam] = result
    return result


def ga_injective_closed_form(lam: Partition) -> KClass:
    """[S_lam] = sum over horizontal strips lam/mu of [V_mu]."""
    out: dict = {}
    for j in range(sum(lam) + 1):
        for mu, c in skew_expand(lam, (j,) if j else ()).items():
            _accumulate(out, mu, c)
    return KClass("ga", out)


def euler_characteristic(x: SimpleLabel, variant: Optional[str] = None) -> KClass:
    """sum_i (-1)^i [L_i] in the basis of simples; equals [V_x]."""
    total = KClass(x.cat, {})
    for i, level in enumerate(littlewood_complex(x, variant)):
        for lab, mult in level.items():
            term = injective_to_simple(SimpleLabel(x.cat, lab), variant)
            total = total + term.scale((-1) ** i * mult)
    return total


def labels_up_to(cat: str, n: int) -> list[SimpleLabel]:
    """All simple labels of total size at most n."""
    cat = _check_cat(cat)
    if cat == "gl":
        out = []
        for k in range(n + 1):
            for a in range(k + 1):
                for lam in partitions_of(a):
                    for lamp in partitions_of(k - a):
                        out.append(SimpleLabel(cat, (lam, lamp)))
        return out
    return [SimpleLabel(cat, lam) for lam in partitions_up_to(n)]
