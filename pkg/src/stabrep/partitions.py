"""Partition and Young diagram combinatorics.

Partitions are plain tuples of positive integers in weakly decreasing order,
with no trailing zeros, so they can be used directly as dictionary keys.
Boxes use 1-based (row, col) coordinates in English notation.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Iterator, NamedTuple, Optional, Sequence

Partition = tuple[int, ...]

EMPTY: Partition = ()


class Box(NamedTuple):
    row: int
    col: int


@dataclass(frozen=True)
class BorderStrip:
    boxes: frozenset[Box]
    height: int

    @property
    def size(self) -> int:
        return len(self.boxes)


def normalize(parts: Iterable[int]) -> Partition:
    """Validate a weakly decreasing sequence and drop trailing zeros."""
    seq = tuple(int(p) for p in parts)
    for a, b in zip(seq, seq[1:]):
        if a < b:
            raise ValueError(f"not weakly decreasing: {seq}")
    if seq and seq[-1] < 0:
        raise ValueError(f"negative part: {seq}")
    while seq and seq[-1] == 0:
        seq = seq[:-1]
    return seq


def parse(text: str) -> Partition:
    """Parse "3,1,1"; the empty string or "-" denote the empty partition."""
    text = text.strip()
    if text in ("", "-"):
        return EMPTY
    try:
        parts = [int(tok) for tok in text.split(",")]
    except ValueError:
        raise ValueError(f"malformed partition: {text!r}") from None
    if any(p <= 0 for p in parts):
        raise ValueError(f"malformed partition: {text!r}")
    return normalize(parts)


def format_partition(lam: Partition) -> str:
    return ",".join(str(p) for p in lam) if lam else "-"


def size(lam: Partition) -> int:
    return sum(lam)


def part(lam: Partition, i: int) -> int:
    """The i-th part (0-based), zero past the end."""
    return lam[i] if i < len(lam) else 0


def transpose(lam: Partition) -> Partition:
    if not lam:
        return EMPTY
    return tuple(sum(1 for p in lam if p >= j) for j in range(1, lam[0] + 1))


def pad(lam: Partition, k: int) -> Optional[Partition]:
    """Prepend a row of length k; None when the result is not a partition."""
    if lam and k < lam[0]:
        return None
    if k < 0:
        return None
    return normalize((k,) + lam)


def contains(lam: Partition, mu: Partition) -> bool:
    """True if the diagram of mu sits inside the diagram of lam."""
    return len(mu) <= len(lam) and all(m <= l for m, l in zip(mu, lam))


def boxes(lam: Partition) -> list[Box]:
    return [Box(r + 1, c + 1) for r, row in enumerate(lam) for c in range(row)]


def doubled(lam: Partition) -> Partition:
    """Every row length doubled."""
    return tuple(2 * p for p in lam)


def hook_lengths(lam: Partition) -> list[int]:
    conj = transpose(lam)
    return [lam[r] - c + conj[c] - r - 1 for r in range(len(lam)) for c in range(lam[r])]


def in_Q(lam: Partition, sign: int) -> bool:
    """Membership in Q_1 (sign +1) or Q_-1 (sign -1).

    For sign +1 every diagonal box must have arm = leg + 1; for sign -1,
    leg = arm + 1.
    """
    if sign not in (1, -1):
        raise ValueError("sign must be +1 or -1")
    conj = transpose(lam)
    for i in range(len(lam)):
        if lam[i] <= i:
            break
        arm = lam[i] - i - 1
        leg = conj[i] - i - 1
        if sign == 1 and arm != leg + 1:
            return False
        if sign == -1 and leg != arm + 1:
            return False
    return True


@lru_cache(maxsize=None)
def partitions_of(n: int, max_part: Optional[int] = None) -> tuple[Partition, ...]:
    """All partitions of n in reverse lexicographic order."""
    if n < 0:
        return ()
    if max_part is None or max_part > n:
        max_part = n
    if n == 0:
        return (EMPTY,)
    out: list[Partition] = []
    for first in range(max_part, 0, -1):
        for rest in partitions_of(n - first, first):
            out.append((first,) + rest)
    return tuple(out)


def partitions_up_to(n: int) -> Iterator[Partition]:
    """Partitions of size 0..n, ordered by size then reverse lex."""
    for k in range(n + 1):
        yield from partitions_of(k)


@lru_cache(maxsize=None)
def subpartitions(lam: Partition, k: Optional[int] = None) -> tuple[Partition, ...]:
    """Partitions contained in lam, optionally restricted to size k."""
    out: list[Partition] = []

    def rec(i: int, bound: int, acc: tuple[int, ...], total: int) -> None:
        if k is None or total == k:
            out.append(acc)
        if i == len(lam) or (k is not None and total >= k):
            return
        for p in range(1, min(bound, lam[i]) + 1):
            rec(i + 1, p, acc + (p,), total + p)

    rec(0, lam[0] if lam else 0, EMPTY, 0)
    out.sort(key=sort_key)
    return tuple(out)


def sort_key(lam: Partition) -> tuple:
    """Order by size, then lexicographically."""
    return (sum(lam), lam)


def _is_border_strip(cells: set[Box]) -> bool:
    for b in cells:
        if Box(b.row + 1, b.col) in cells and Box(b.row, b.col + 1) in cells \
                and Box(b.row + 1, b.col + 1) in cells:
            return False
    start = next(iter(cells))
    seen = {start}
    stack = [start]
    while stack:
        b = stack.pop()
        for nb in (Box(b.row + 1, b.col), Box(b.row - 1, b.col),
                   Box(b.row, b.col + 1), Box(b.row, b.col - 1)):
            if nb in cells and nb not in seen:
                seen.add(nb)
                stack.append(nb)
    return len(seen) == len(cells)


@lru_cache(maxsize=None)
def _strips(lam: Partition, k: int) -> tuple[tuple[BorderStrip, Partition], ...]:
    n = sum(lam)
    if k < 1 or k > n:
        return ()
    found = []
    for mu in subpartitions(lam, n - k):
        cells = {Box(r + 1, c + 1) for r in range(len(lam))
                 for c in range(part(mu, r), lam[r])}
        if _is_border_strip(cells):
            height = len({b.row for b in cells}) - 1
            found.append((BorderStrip(frozenset(cells), height), mu))
    return tuple(found)


def border_strips(lam: Partition, size: int,
                  anchor_last_box_first_row: bool = False
                  ) -> list[tuple[BorderStrip, Partition]]:
    """Border strips of the given size whose removal leaves a partition.

    Each result pairs the strip with the remaining shape.  With the anchor
    flag, only strips containing the box (1, lam_1) are returned.
    """
    if size < 1:
        raise ValueError("strip size must be positive")
    out = list(_strips(lam, size))
    if anchor_last_box_first_row:
        if not lam:
            return []
        corner = Box(1, lam[0])
        out = [(s, mu) for s, mu in out if corner in s.boxes]
    return out


def as_partition(seq: Sequence[int]) -> Partition:
    """Accept any weakly decreasing int sequence (list, tuple) as a partition."""
    return normalize(seq)
