"""Brauer, signed Brauer, walled Brauer and partition diagrams, their
composition, the associated algebras over Z[t], and the morphisms of the
downwards diagram categories.

Vertex numbering: top vertices are 0..n_top-1, bottom vertices are
n_top..n_top+n_bot-1.  In JSON they are written "t0", "t1", ... and
"b0", "b1", ...  A walled diagram stores ``wall = k``: vertices 0..k-1 of
each row are on the left of the wall (copies of V), the rest on the right
(copies of the dual).
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field, replace
from typing import Iterable, Iterator, Optional, Sequence

KINDS = ("brauer", "signed_brauer", "walled_brauer", "set_partition")
MATCHING_KINDS = ("brauer", "signed_brauer", "walled_brauer")

Block = tuple[int, ...]


class DiagramError(ValueError):
    pass


@dataclass(frozen=True)
class Diagram:
    kind: str
    n_top: int
    n_bot: int
    blocks: tuple[Block, ...]
    wall: Optional[int] = None
    sign: int = 1

    # -- vertex helpers ----------------------------------------------------
    def is_top(self, v: int) -> bool:
        return v < self.n_top

    def label(self, v: int) -> str:
        return f"t{v}" if v < self.n_top else f"b{v - self.n_top}"

    def is_horizontal(self, block: Block) -> bool:
        rows = {self.is_top(v) for v in block}
        return len(rows) == 1

    def left_of_wall(self, v: int) -> bool:
        idx = v if v < self.n_top else v - self.n_top
        return idx < self.wall

    @property
    def shape(self) -> tuple:
        return (self.kind, self.n_top, self.n_bot, self.wall)

    def unsigned(self) -> "Diagram":
        return replace(self, sign=1)

    def flip(self, block_index: int) -> "Diagram":
        """Reverse one horizontal edge of a signed diagram (negates it)."""
        if self.kind != "signed_brauer":
            raise DiagramError("only signed Brauer edges carry orientation")
        blk = self.blocks[block_index]
        if not self.is_horizontal(blk):
            raise DiagramError("vertical edges are unoriented")
        return replace(self, sign=-self.sign)

    def __str__(self) -> str:
        parts = ["{" + ",".join(self.label(v) for v in b) + "}" for b in self.blocks]
        s = "-" if self.sign < 0 else ""
        return f"{s}{self.kind}[{' '.join(parts)}]"


def make_diagram(kind: str, n_top: int, n_bot: int,
                 blocks: Iterable[Sequence[int]], wall: Optional[int] = None,
                 sign: int = 1) -> Diagram:
    """Validate and canonicalize.

    For signed diagrams a two-element horizontal block (a, b) is read as the
    edge oriented from a to b; canonical form orients every horizontal edge
    from the lower vertex index to the higher, flipping the sign once per
    reversed edge.
    """
    if kind not in KINDS:
        raise DiagramError(f"unknown diagram kind {kind!r}")
    blocks = [tuple(b) for b in blocks]
    total = n_top + n_bot
    seen = sorted(v for b in blocks for v in b)
    if seen != list(range(total)):
        raise DiagramError("blocks must partition all vertices exactly once")
    if any(len(b) == 0 for b in blocks):
        raise DiagramError("empty block")
    if kind in MATCHING_KINDS and any(len(b) != 2 for b in blocks):
        raise DiagramError(f"{kind} diagrams are perfect matchings")
    if kind == "walled_brauer":
        if wall is None or not (0 <= wall <= min(n_top, n_bot)):
            raise DiagramError("walled diagrams need a wall position")
        if n_top != n_bot:
            raise DiagramError("walled diagrams have equal rows")
    elif wall is not None:
        raise DiagramError("only walled diagrams carry a wall")
    canon = []
    for b in blocks:
        top = [v for v in b if v < n_top]
        bot = [v for v in b if v >= n_top]
        if kind == "signed_brauer" and (not top or not bot):
            if b[0] > b[1]:
                sign = -sign
        canon.append(tuple(sorted(b)))
    canon.sort()
    d = Diagram(kind, n_top, n_bot, tuple(canon), wall, sign)
    if kind == "walled_brauer":
        for b in d.blocks:
            crosses = d.left_of_wall(b[0]) != d.left_of_wall(b[1])
            if d.is_horizontal(b) and not crosses:
                raise DiagramError("horizontal walled edges must cross the wall")
            if not d.is_horizontal(b) and crosses:
                raise DiagramError("vertical walled edges may not cross the wall")
    return d


# ---------------------------------------------------------------------------
# union-find


class _UnionFind:
    def __init__(self, n: int):
        self.parent = list(range(n))

    def find(self, x: int) -> int:
        while self.parent[x] != x:
            self.parent[x] = self.parent[self.parent[x]]
            x = self.parent[x]
        return x

    def union(self, a: int, b: int) -> None:
        ra, rb = self.find(a), self.find(b)
        if ra != rb:
            self.parent[max(ra, rb)] = min(ra, rb)


@dataclass(frozen=True)
class Composite:
    diagram: Diagram
    loops: int
    sign: int

    def __iter__(self):
        return iter((self.diagram, self.loops, self.sign))


def _check_composable(a: Diagram, b: Diagram) -> None:
    if a.kind != b.kind:
        raise DiagramError("cannot compose diagrams of different kinds")
    if a.n_bot != b.n_top:
        raise DiagramError(f"shape mismatch: {a.n_bot} bottom vs {b.n_top} top vertices")
    if a.wall != b.wall:
        raise DiagramError("wall positions differ")


def compose(a: Diagram, b: Diagram) -> Composite:
    """Stack a over b, trace through the shared middle row.

    Returns the reduced diagram (sign +1), the number of components lying
    entirely in the middle row, and the overall sign.  For signed diagrams
    the sign collects the inputs' signs, one -1 for every middle edge that
    has to be reversed to orient each traced path or cycle coherently, and
    one -1 for every cup of ``a`` meeting a cap of ``b`` in the middle row,
    except one per closed loop.
    """
    _check_composable(a, b)
    nt, nm, nb = a.n_top, a.n_bot, b.n_bot
    total = nt + nm + nb
    uf = _UnionFind(total)
    edges_a = [tuple(v for v in blk) for blk in a.blocks]
    edges_b = [tuple(v + nt for v in blk) for blk in b.blocks]
    for blk in edges_a + edges_b:
        for v in blk[1:]:
            uf.union(blk[0], v)
    comps: dict[int, list[int]] = {}
    for v in range(total):
        comps.setdefault(uf.find(v), []).append(v)

    def outer(v: int) -> Optional[int]:
        if v < nt:
            return v
        if v >= nt + nm:
            return v - nm
        return None

    blocks = []
    loops = 0
    for members in comps.values():
        out = [outer(v) for v in members if outer(v) is not None]
        if out:
            blocks.append(tuple(sorted(out)))
        else:
            loops += 1
    sign = a.sign * b.sign
    if a.kind == "signed_brauer":
        sign *= _signed_trace_sign(edges_a, edges_b, nt, nm)
    diagram = make_diagram(a.kind, nt, nb, blocks, a.wall)
    return Composite(diagram, loops, sign)


def _signed_trace_sign(edges_a, edges_b, nt: int, nm: int) -> int:
    # Each vertex of the stacked graph has degree 1 (outer) or 2 (middle), so
    # components are paths or cycles.  Walking one, a middle edge traversed
    # against its orientation costs a sign, and every pair of consecutive
    # middle edges (a cup of ``a`` meeting a cap of ``b``) multiplies the form
    # by itself, which is minus the identity.  A path with h middle edges thus
    # contributes h // 2; a cycle with h edges contributes h/2 - 1, the last
    # sign being absorbed into the parameter -d.
    adj: dict[int, list[tuple[int, tuple[int, int]]]] = {}
    for e in edges_a + edges_b:
        u, v = e
        adj.setdefault(u, []).append((v, e))
        adj.setdefault(v, []).append((u, e))

    def is_middle(v: int) -> bool:
        return nt <= v < nt + nm

    used: set[int] = set()
    exponent = 0

    def walk(start: int) -> tuple[int, int]:
        flips = horizontals = 0
        v = start
        while True:
            nxt = [(w, e) for w, e in adj[v] if id(e) not in used]
            if not nxt:
                return flips, horizontals
            w, e = nxt[0]
            used.add(id(e))
            if is_middle(e[0]) and is_middle(e[1]):
                horizontals += 1
                if (e[0], e[1]) != (v, w):
                    flips += 1
            v = w
            if v == start:
                return flips, horizontals

    # paths are walked from their smaller outer endpoint so that a resulting
    # horizontal edge comes out oriented low -> high
    for v in sorted(adj):
        if is_middle(v) or all(id(e) in used for _, e in adj[v]):
            continue
        flips, h = walk(v)
        exponent += flips + h // 2
    for v in range(nt, nt + nm):
        if any(id(e) not in used for _, e in adj.get(v, [])):
            flips, h = walk(v)
            exponent += flips + h // 2 - 1
    return -1 if exponent % 2 else 1


# ---------------------------------------------------------------------------
# algebra over Z[t]

TPoly = dict  # degree -> integer coefficient


def _poly_add(p: TPoly, q: TPoly, scale: int = 1, shift: int = 0) -> TPoly:
    out = dict(p)
    for k, c in q.items():
        v = out.get(k + shift, 0) + scale * c
        if v:
            out[k + shift] = v
        else:
            out.pop(k + shift, None)
    return out


def _poly_mul(p: TPoly, q: TPoly) -> TPoly:
    out: TPoly = {}
    for i, a in p.items():
        for j, b in q.items():
            out[i + j] = out.get(i + j, 0) + a * b
    return {k: v for k, v in out.items() if v}


@dataclass(frozen=True)
class AlgebraElement:
    """Finite Z[t]-combination of diagrams of one kind and shape."""
    shape: tuple
    terms: dict = field(default_factory=dict)

    @staticmethod
    def of(d: Diagram, coeff: Optional[TPoly] = None) -> "AlgebraElement":
        poly = {0: 1} if coeff is None else dict(coeff)
        if d.sign < 0:
            poly = {k: -v for k, v in poly.items()}
        poly = {k: v for k, v in poly.items() if v}
        terms = {d.unsigned(): poly} if poly else {}
        return AlgebraElement(d.shape, terms)

    @staticmethod
    def unit(kind: str, n: int, wall: Optional[int] = None) -> "AlgebraElement":
        return AlgebraElement.of(identity(kind, n, wall))

    def __add__(self, other: "AlgebraElement") -> "AlgebraElement":
        if self.shape != other.shape:
            raise DiagramError("shape mismatch")
        terms = dict(self.terms)
        for d, p in other.terms.items():
            q = _poly_add(terms.get(d, {}), p)
            if q:
                terms[d] = q
            else:
                terms.pop(d, None)
        return AlgebraElement(self.shape, terms)

    def __neg__(self) -> "AlgebraElement":
        return AlgebraElement(self.shape, {d: {k: -v for k, v in p.items()}
                                           for d, p in self.terms.items()})

    def __sub__(self, other: "AlgebraElement") -> "AlgebraElement":
        return self + (-other)

    def scale(self, poly: TPoly) -> "AlgebraElement":
        terms = {}
        for d, p in self.terms.items():
            q = _poly_mul(p, poly)
            if q:
                terms[d] = q
        return AlgebraElement(self.shape, terms)

    def __mul__(self, other: "AlgebraElement") -> "AlgebraElement":
        return algebra_multiply(self, other)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, AlgebraElement):
            return NotImplemented
        return self.shape == other.shape and self.terms == other.terms

    def __hash__(self) -> int:
        return hash((self.shape, frozenset((d, frozenset(p.items()))
                                           for d, p in self.terms.items())))


def algebra_multiply(a: AlgebraElement, b: AlgebraElement) -> AlgebraElement:
    """Bilinear extension of X_G X_H = sign * t^loops * X_{GH}."""
    if a.shape[0] != b.shape[0] or a.shape[3] != b.shape[3] or a.shape[2] != b.shape[1]:
        raise DiagramError("shape mismatch")
    kind, nt, _, wall = a.shape
    out = AlgebraElement((kind, nt, b.shape[2], wall), {})
    for da, pa in a.terms.items():
        for db, pb in b.terms.items():
            comp = compose(da, db)
            coeff = _poly_mul(pa, pb)
            coeff = {k + comp.loops: comp.sign * v for k, v in coeff.items()}
            out = out + AlgebraElement.of(comp.diagram, coeff)
    return out


# ---------------------------------------------------------------------------
# constructors and enumeration


def identity(kind: str, n: int, wall: Optional[int] = None) -> Diagram:
    return make_diagram(kind, n, n, [(i, n + i) for i in range(n)], wall)


def _perfect_matchings(vertices: list[int]) -> Iterator[list[tuple[int, int]]]:
    if not vertices:
        yield []
        return
    first, rest = vertices[0], vertices[1:]
    for i, other in enumerate(rest):
        for m in _perfect_matchings(rest[:i] + rest[i + 1:]):
            yield [(first, other)] + m


def _set_partitions(vertices: list[int]) -> Iterator[list[tuple[int, ...]]]:
    if not vertices:
        yield []
        return
    first, rest = vertices[0], vertices[1:]
    for p in _set_partitions(rest):
        yield [(first,)] + p
        for i in range(len(p)):
            yield p[:i] + [(first,) + p[i]] + p[i + 1:]


def all_diagrams(kind: str, n: int, m: int = 0) -> list[Diagram]:
    """Every diagram of the given kind on n top and n bottom vertices.

    For walled diagrams the rows have n + m vertices with the wall after n.
    """
    if kind == "walled_brauer":
        size, wall = n + m, n
    else:
        size, wall = n, None
    vertices = list(range(2 * size))
    out = []
    if kind == "set_partition":
        for p in _set_partitions(vertices):
            out.append(make_diagram(kind, size, size, p))
        return out
    for match in _perfect_matchings(vertices):
        try:
            out.append(make_diagram(kind, size, size, match, wall))
        except DiagramError:
            continue
    return out


def swap(kind: str, n: int, i: int, wall: Optional[int] = None) -> Diagram:
    """The transposition of strands i and i+1 (0-based)."""
    blocks = []
    for j in range(n):
        tgt = {i: i + 1, i + 1: i}.get(j, j)
        blocks.append((j, n + tgt))
    return make_diagram(kind, n, n, blocks, wall)


def contraction(kind: str, n: int, i: int, j: Optional[int] = None,
                wall: Optional[int] = None) -> Diagram:
    """The diagram with a cap on top vertices i, j and a cup on the bottom
    vertices i, j, all other strands vertical."""
    if j is None:
        j = i + 1
    blocks = [(i, j), (n + i, n + j)]
    blocks += [(k, n + k) for k in range(n) if k not in (i, j)]
    return make_diagram(kind, n, n, blocks, wall)


def partition_generator(n: int, name: str, i: int) -> Diagram:
    """Generators of the partition algebra (0-based strand index i).

    name "s": swap strands i, i+1; "p": isolate vertex i top and bottom;
    "p_half": merge strands i and i+1 into one block.
    """
    through = [(k, n + k) for k in range(n)]
    if name == "s":
        return swap("set_partition", n, i)
    if name == "p":
        blocks = [b for b in through if b[0] != i] + [(i,), (n + i,)]
        return make_diagram("set_partition", n, n, blocks)
    if name == "p_half":
        blocks = [b for b in through if b[0] not in (i, i + 1)]
        blocks.append((i, i + 1, n + i, n + i + 1))
        return make_diagram("set_partition", n, n, blocks)
    raise DiagramError(f"unknown generator {name!r}")


# ---------------------------------------------------------------------------
# JSON


def diagram_to_json(d: Diagram) -> dict:
    out = {"kind": d.kind, "top": d.n_top, "bot": d.n_bot,
           "blocks": [[d.label(v) for v in b] for b in d.blocks]}
    if d.wall is not None:
        out["wall"] = d.wall
    if d.kind == "signed_brauer":
        out["orient"] = [[d.label(b[0]), d.label(b[1])]
                         for b in d.blocks if d.is_horizontal(b)]
    if d.sign != 1:
        out["sign"] = d.sign
    return out


def _parse_vertex(tok: str, n_top: int, n_bot: int) -> int:
    if len(tok) < 2 or tok[0] not in "tb" or not tok[1:].isdigit():
        raise DiagramError(f"bad vertex label {tok!r}")
    k = int(tok[1:])
    limit = n_top if tok[0] == "t" else n_bot
    if k >= limit:
        raise DiagramError(f"vertex {tok!r} out of range")
    return k if tok[0] == "t" else n_top + k


def diagram_from_json(obj: dict) -> Diagram:
    try:
        kind, n_top, n_bot = obj["kind"], int(obj["top"]), int(obj["bot"])
        raw_blocks = obj["blocks"]
    except (KeyError, TypeError, ValueError) as exc:
        raise DiagramError(f"malformed diagram JSON: {exc}") from None
    blocks = [[_parse_vertex(v, n_top, n_bot) for v in b] for b in raw_blocks]
    if kind == "signed_brauer" and "orient" in obj:
        wanted = {}
        for tail, head in obj["orient"]:
            u, v = _parse_vertex(tail, n_top, n_bot), _parse_vertex(head, n_top, n_bot)
            wanted[frozenset((u, v))] = (u, v)
        blocks = [list(wanted.get(frozenset(b), b)) for b in blocks]
    return make_diagram(kind, n_top, n_bot, blocks, obj.get("wall"),
                        int(obj.get("sign", 1)))


# ---------------------------------------------------------------------------
# downwards categories

FLAVORS = ("dwb", "db", "dsb", "ds", "dp")


@dataclass(frozen=True)
class DownMorphism:
    """A morphism source -> target in one of the downwards categories.

    Objects are finite sets {0, ..., n-1}; for dwb they are bisets written
    (n_plus, n_minus) with elements 0..n_plus-1 positive and the rest
    negative.  ``matching`` holds the edges (ordered pairs for dsb),
    ``removed`` the deleted subset for ds, ``bijection`` maps the leftover
    source elements to the target.  For dp, ``parts`` is a set partition of
    the disjoint union, with source elements written ("s", i) and target
    elements ("t", j).
    """
    flavor: str
    source: object
    target: object
    matching: tuple = ()
    removed: tuple = ()
    bijection: tuple = ()
    parts: tuple = ()


def _set_size(obj) -> int:
    return sum(obj) if isinstance(obj, tuple) else obj


def _polarity(obj, x: int) -> int:
    if isinstance(obj, tuple):
        return 1 if x < obj[0] else -1
    return 0


def make_down(flavor: str, source, target, matching=(), removed=(), bijection=None,
              parts=()) -> DownMorphism:
    if flavor not in FLAVORS:
        raise DiagramError(f"unknown flavor {flavor!r}")
    if (flavor == "dwb") != isinstance(source, tuple) or \
            (flavor == "dwb") != isinstance(target, tuple):
        raise DiagramError("dwb objects are bisets (n_plus, n_minus); others are sets")
    if flavor == "dp":
        canon = []
        for p in parts:
            elems = tuple(sorted((str(k), int(i)) for k, i in p))
            if not any(k == "s" for k, _ in elems):
                raise DiagramError("every part must meet the source")
            canon.append(elems)
        flat = sorted(e for p in canon for e in p)
        want = sorted([("s", i) for i in range(source)] + [("t", j) for j in range(target)])
        if flat != want:
            raise DiagramError("parts must partition source and target")
        return DownMorphism("dp", source, target, parts=tuple(sorted(canon)))
    n_src, n_tgt = _set_size(source), _set_size(target)
    if flavor == "dsb":
        edges = tuple(sorted(tuple(e) for e in matching))
    else:
        edges = tuple(sorted(tuple(sorted(e)) for e in matching))
    used = [x for e in edges for x in e] + list(removed)
    if len(set(used)) != len(used) or any(not 0 <= x < n_src for x in used):
        raise DiagramError("matching must use distinct source elements")
    if flavor == "ds" and edges:
        raise DiagramError("ds morphisms delete a subset, they carry no matching")
    if flavor != "ds" and removed:
        raise DiagramError("only ds morphisms delete a subset")
    if flavor == "dwb":
        for u, v in edges:
            if _polarity(source, u) == _polarity(source, v):
                raise DiagramError("dwb matchings join a positive and a negative element")
    rest = [x for x in range(n_src) if x not in set(used)]
    if bijection is None:
        bijection = tuple(zip(rest, range(n_tgt)))
    bij = tuple(sorted((int(a), int(b)) for a, b in dict(bijection).items())) \
        if isinstance(bijection, dict) else tuple(sorted(tuple(p) for p in bijection))
    if sorted(a for a, _ in bij) != rest or sorted(b for _, b in bij) != list(range(n_tgt)):
        raise DiagramError("bijection must match leftover source with target")
    if flavor == "dwb":
        for a, b in bij:
            if _polarity(source, a) != _polarity(target, b):
                raise DiagramError("dwb bijections respect the biset halves")
    return DownMorphism(flavor, source, target, matching=edges,
                        removed=tuple(sorted(removed)), bijection=bij)


def compose_down(f: DownMorphism, g: DownMorphism) -> DownMorphism:
    """The composite g . f of f: L -> L' and g: L' -> L''."""
    if f.flavor != g.flavor:
        raise DiagramError("flavor mismatch")
    if f.target != g.source:
        raise DiagramError("target of the first morphism must be the source of the second")
    if f.flavor == "dp":
        return _compose_dp(f, g)
    inv = {b: a for a, b in f.bijection}
    edges = list(f.matching) + [tuple(inv[x] for x in e) for e in g.matching]
    removed = list(f.removed) + [inv[x] for x in g.removed]
    gmap = dict(g.bijection)
    bij = [(a, gmap[b]) for a, b in f.bijection if b in gmap]
    return make_down(f.flavor, f.source, g.target, edges, removed, bij)


def _compose_dp(f: DownMorphism, g: DownMorphism) -> DownMorphism:
    # stacked elements: f-source ("s", i), middle ("m", j), g-target ("t", k)
    nodes = [("s", i) for i in range(f.source)] + [("m", j) for j in range(f.target)] + \
            [("t", k) for k in range(g.target)]
    index = {v: i for i, v in enumerate(nodes)}
    uf = _UnionFind(len(nodes))
    for p in f.parts:
        ids = [index[("s", i) if k == "s" else ("m", i)] for k, i in p]
        for x in ids[1:]:
            uf.union(ids[0], x)
    for p in g.parts:
        ids = [index[("m", i) if k == "s" else ("t", i)] for k, i in p]
        for x in ids[1:]:
            uf.union(ids[0], x)
    groups: dict[int, list] = {}
    for v in nodes:
        if v[0] != "m":
            groups.setdefault(uf.find(index[v]), []).append(v)
    return make_down("dp", f.source, g.target, parts=[tuple(p) for p in groups.values()])


@dataclass(frozen=True)
class DpClass:
    mono: bool
    epi: bool
    proper: bool
    rectangular: bool
    transpose: Optional[DownMorphism]


def classify_dp(f: DownMorphism) -> DpClass:
    if f.flavor != "dp":
        raise DiagramError("classification applies to dp morphisms")
    counts = [(sum(1 for k, _ in p if k == "s"), sum(1 for k, _ in p if k == "t"))
              for p in f.parts]
    proper = all(t > 0 for _, t in counts)
    mono = all(t > 0 and s == 1 for s, t in counts)
    epi = all(t <= 1 for _, t in counts)
    rectangular = all(s == t for s, t in counts)
    transpose = None
    if proper:
        flipped = [tuple(("t" if k == "s" else "s", i) for k, i in p) for p in f.parts]
        transpose = make_down("dp", f.target, f.source, parts=flipped)
    return DpClass(mono, epi, proper, rectangular, transpose)


def identity_down(flavor: str, obj) -> DownMorphism:
    n = _set_size(obj)
    if flavor == "dp":
        return make_down("dp", n, n, parts=[(("s", i), ("t", i)) for i in range(n)])
    return make_down(flavor, obj, obj)


def hom_set(flavor: str, source, target) -> list[DownMorphism]:
    """All morphisms source -> target, by direct enumeration."""
    out = []
    if flavor == "dp":
        elems = [("s", i) for i in range(source)] + [("t", j) for j in range(target)]
        for p in _set_partitions(list(range(len(elems)))):
            parts = [tuple(elems[i] for i in blk) for blk in p]
            if all(any(k == "s" for k, _ in blk) for blk in parts):
                out.append(make_down("dp", source, target, parts=parts))
        return out
    n_src, n_tgt = _set_size(source), _set_size(target)
    k = n_src - n_tgt
    if k < 0 or (flavor != "ds" and k % 2):
        return out
    for chosen in itertools.combinations(range(n_src), k):
        rest = [x for x in range(n_src) if x not in chosen]
        if flavor == "ds":
            shapes = [((), chosen)]
        else:
            shapes = []
            for m in _perfect_matchings(list(chosen)):
                if flavor == "dsb":
                    for bits in itertools.product((0, 1), repeat=len(m)):
                        shapes.append((tuple(e if b == 0 else e[::-1]
                                             for e, b in zip(m, bits)), ()))
                else:
                    shapes.append((tuple(m), ()))
        for edges, removed in shapes:
            for perm in itertools.permutations(range(n_tgt)):
                try:
                    out.append(make_down(flavor, source, target, edges, removed,
                                         tuple(zip(rest, perm))))
                except DiagramError:
                    continue
    return out
