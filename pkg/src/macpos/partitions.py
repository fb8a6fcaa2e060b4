"""Partitions, boxes, tableaux and strip relations.

Partitions are plain tuples of positive integers in weakly decreasing order,
with no trailing zeros; ``()`` is the empty partition.  Boxes are 1-based
``(row, col)`` pairs in English convention.
"""
from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from functools import lru_cache
from typing import Iterator, Optional, Sequence

Partition = tuple[int, ...]
Box = tuple[int, int]

#: Default refusal threshold for eager enumeration.
MAX_ENUMERATION_SIZE = 40


def make_partition(parts: Sequence[int]) -> Partition:
    """Validate ``parts`` and return it as a canonical partition tuple.

    Trailing zeros are stripped; anything else that is not weakly
    decreasing and non-negative raises ``ValueError``.
    """
    parts = list(parts)
    while parts and parts[-1] == 0:
        parts.pop()
    for i, p in enumerate(parts):
        if not isinstance(p, int) or p < 1:
            raise ValueError(f"partition parts must be positive integers: {parts}")
        if i and p > parts[i - 1]:
            raise ValueError(f"partition parts must be weakly decreasing: {parts}")
    return tuple(parts)


def parse_partition(text: str) -> Partition:
    """Parse ``"5,3,2"`` into ``(5, 3, 2)``; ``"-"`` (or blank) is the empty partition."""
    text = text.strip()
    if text in ("", "-", "()"):
        return ()
    try:
        parts = [int(x) for x in text.split(",") if x.strip()]
    except ValueError as exc:
        raise ValueError(f"cannot parse partition {text!r}") from exc
    return make_partition(parts)


def format_partition(lam: Partition) -> str:
    return ",".join(map(str, lam)) if lam else "-"


def size(lam: Partition) -> int:
    return sum(lam)


def part(lam: Partition, i: int) -> int:
    """The 1-based part ``lam_i``; zero past the length."""
    return lam[i - 1] if 1 <= i <= len(lam) else 0


@lru_cache(maxsize=None)
def conjugate(lam: Partition) -> Partition:
    if not lam:
        return ()
    return tuple(sum(1 for p in lam if p >= j) for j in range(1, lam[0] + 1))


def boxes(lam: Partition) -> list[Box]:
    return [(i, j) for i, row in enumerate(lam, 1) for j in range(1, row + 1)]


def skew_boxes(lam: Partition, mu: Partition) -> list[Box]:
    return [(i, j) for i, row in enumerate(lam, 1)
            for j in range(part(mu, i) + 1, row + 1)]


def contains(mu: Partition, lam: Partition) -> bool:
    """True iff every box of ``mu`` lies in ``lam``."""
    return len(mu) <= len(lam) and all(m <= l for m, l in zip(mu, lam))


def in_shape(lam: Partition, box: Box) -> bool:
    i, j = box
    return i >= 1 and j >= 1 and part(lam, i) >= j


def prepend_row(n: int, lam: Partition) -> Partition:
    """``(n) ∪ lam``: ``lam`` with a new first row of length ``n``."""
    if lam and n < lam[0]:
        raise ValueError(f"first row {n} shorter than {lam[0]}")
    return (n,) + tuple(lam)


def ceil_half(lam: Partition) -> Partition:
    """The partition whose column lengths are ``ceil(lam'_j / 2)``."""
    return conjugate(tuple((c + 1) // 2 for c in conjugate(lam)))


def addable_corners(lam: Partition) -> list[Box]:
    return [(i, part(lam, i) + 1) for i in range(1, len(lam) + 2)
            if i == 1 or part(lam, i - 1) > part(lam, i)]


def removable_corners(lam: Partition) -> list[Box]:
    return [(i, lam[i - 1]) for i in range(1, len(lam) + 1)
            if part(lam, i + 1) < lam[i - 1]]


def add_box(lam: Partition, row: int) -> Partition:
    parts = list(lam) + [0]
    parts[row - 1] += 1
    return make_partition(parts)


# --- strip relations -------------------------------------------------------

class Strip(str, Enum):
    NOT_CONTAINED = "not_contained"
    CONTAINED = "contained"
    HORIZONTAL = "horizontal"
    VERTICAL = "vertical"
    BOTH = "both"


def is_horizontal_strip(mu: Partition, lam: Partition) -> bool:
    """``mu ⊆ lam`` and ``lam \\ mu`` has at most one box per column."""
    if not contains(mu, lam):
        return False
    return all(part(lam, i + 1) <= part(mu, i) for i in range(1, len(lam)))


def is_vertical_strip(mu: Partition, lam: Partition) -> bool:
    """``mu ⊆ lam`` and ``lam \\ mu`` has at most one box per row."""
    if not contains(mu, lam):
        return False
    return all(l - part(mu, i) <= 1 for i, l in enumerate(lam, 1))


def strip_relation(mu: Partition, lam: Partition) -> Strip:
    if not contains(mu, lam):
        return Strip.NOT_CONTAINED
    h = is_horizontal_strip(mu, lam)
    v = is_vertical_strip(mu, lam)
    if h and v:
        return Strip.BOTH
    if h:
        return Strip.HORIZONTAL
    if v:
        return Strip.VERTICAL
    return Strip.CONTAINED


def dominates(nu: Partition, mu: Partition) -> bool:
    """Dominance order on partitions of equal size."""
    if size(nu) != size(mu):
        raise ValueError(f"dominance needs equal sizes: |{nu}| != |{mu}|")
    a = b = 0
    for i in range(max(len(nu), len(mu))):
        a += part(nu, i + 1)
        b += part(mu, i + 1)
        if a < b:
            return False
    return True


# --- enumeration -----------------------------------------------------------

def _check_size(n: int, limit: int) -> None:
    if n < 0:
        raise ValueError("size must be non-negative")
    if n > limit:
        raise ValueError(f"refusing to enumerate size {n} > {limit}; raise the limit explicitly")


def _partitions_bounded(n: int, largest: int) -> Iterator[Partition]:
    if n == 0:
        yield ()
        return
    for first in range(min(n, largest), 0, -1):
        for rest in _partitions_bounded(n - first, first):
            yield (first,) + rest


@lru_cache(maxsize=None)
def _partitions_of(n: int) -> tuple[Partition, ...]:
    return tuple(_partitions_bounded(n, n))


def enumerate_partitions(n: int, limit: int = MAX_ENUMERATION_SIZE) -> list[Partition]:
    """All partitions of ``n``, lexicographically decreasing."""
    _check_size(n, limit)
    return list(_partitions_of(n))


def partitions_upto(d: int, limit: int = MAX_ENUMERATION_SIZE) -> list[Partition]:
    """Partitions of size ``<= d`` in the canonical order.

    Size-major ascending, then lexicographically decreasing within a size,
    so that the transition matrix is upper unitriangular.
    """
    _check_size(d, limit)
    return [lam for n in range(d + 1) for lam in _partitions_of(n)]


def order_key(lam: Partition) -> tuple:
    """Sort key realising the canonical order (``sorted(..., key=order_key)``)."""
    return (size(lam), tuple(-p for p in lam) + (0,))


@lru_cache(maxsize=None)
def _horizontal_extensions(mu: Partition, r: int) -> tuple[Partition, ...]:
    out: list[Partition] = []
    rows = len(mu) + 1

    def grow(i: int, left: int, acc: list[int]) -> None:
        # row i (1-based) may grow to at most mu_{i-1} (unbounded for i = 1)
        if i > rows:
            if left == 0:
                out.append(make_partition(acc))
            return
        base = part(mu, i)
        cap = left if i == 1 else min(left, part(mu, i - 1) - base)
        for extra in range(cap, -1, -1):
            grow(i + 1, left - extra, acc + [base + extra])

    grow(1, r, [])
    return tuple(sorted(set(out), key=order_key))


def enumerate_strip_extensions(mu: Partition, r: int, kind: str = "horizontal") -> list[Partition]:
    """All ``lam ⊇ mu`` with ``|lam| - |mu| = r`` and ``lam \\ mu`` a strip of ``kind``."""
    if r < 0:
        raise ValueError("strip size must be non-negative")
    if kind == "horizontal":
        return list(_horizontal_extensions(tuple(mu), r))
    if kind == "vertical":
        ext = _horizontal_extensions(conjugate(tuple(mu)), r)
        return sorted((conjugate(l) for l in ext), key=order_key)
    raise ValueError(f"unknown strip kind {kind!r}")


# --- tableaux --------------------------------------------------------------

@dataclass(frozen=True)
class Tableau:
    """A (skew) tableau; ``rows[i]`` lists the entries of row ``i + 1`` left to right
    over the columns ``inner_i + 1 .. shape_i``."""

    shape: Partition
    inner: Partition
    rows: tuple[tuple[int, ...], ...]

    @property
    def entries(self) -> dict[Box, int]:
        return {(i, part(self.inner, i) + k): v
                for i, row in enumerate(self.rows, 1) for k, v in enumerate(row, 1)}

    def entry(self, box: Box) -> int:
        return self.entries[box]

    @property
    def content(self) -> tuple[int, ...]:
        values = [v for row in self.rows for v in row]
        top = max(values, default=0)
        return tuple(values.count(k) for k in range(1, top + 1))

    def is_semistandard(self) -> bool:
        e = self.entries
        for (i, j), v in e.items():
            if (i, j + 1) in e and e[(i, j + 1)] < v:
                return False
            if (i + 1, j) in e and e[(i + 1, j)] <= v:
                return False
        return True

    def is_standard(self) -> bool:
        values = sorted(v for row in self.rows for v in row)
        return self.is_semistandard() and values == list(range(1, len(values) + 1))

    @classmethod
    def from_chain(cls, chain: Sequence[Partition]) -> "Tableau":
        """Build the tableau whose entries ``k`` fill ``chain[k] \\ chain[k-1]``."""
        inner, shape = chain[0], chain[-1]
        rows = [[0] * (part(shape, i) - part(inner, i)) for i in range(1, len(shape) + 1)]
        for k in range(1, len(chain)):
            for i, j in skew_boxes(chain[k], chain[k - 1]):
                rows[i - 1][j - part(inner, i) - 1] = k
        return cls(shape, inner, tuple(tuple(r) for r in rows))

    @classmethod
    def from_entries(cls, shape: Partition, entries: dict[Box, int],
                     inner: Partition = ()) -> "Tableau":
        rows = tuple(tuple(entries[(i, j)] for j in range(part(inner, i) + 1, shape[i - 1] + 1))
                     for i in range(1, len(shape) + 1))
        return cls(tuple(shape), tuple(inner), rows)


def _strip_chains(inner: Partition, shape: Partition,
                  sizes: Sequence[int]) -> Iterator[list[Partition]]:
    """Chains ``inner = T0 ⊆ T1 ⊆ ... ⊆ shape`` of horizontal strips with given sizes."""
    def rec(cur: Partition, k: int, acc: list[Partition]) -> Iterator[list[Partition]]:
        if k == len(sizes):
            if cur == shape:
                yield acc
            return
        for nxt in enumerate_strip_extensions(cur, sizes[k], "horizontal"):
            if contains(nxt, shape):
                yield from rec(nxt, k + 1, acc + [nxt])

    yield from rec(inner, 0, [inner])


def enumerate_tableaux(shape: Partition, inner: Partition = (), mode: str = "standard",
                       max_entry: Optional[int] = None,
                       content: Optional[Sequence[int]] = None) -> list[Tableau]:
    """Exhaustive list of tableaux of skew shape ``shape / inner``.

    ``mode`` is ``"standard"``, ``"semistandard"`` (entries ``<= max_entry``)
    or ``"content"`` (exactly ``content[i-1]`` entries equal to ``i``).
    """
    shape, inner = tuple(shape), tuple(inner)
    if not contains(inner, shape):
        raise ValueError(f"{inner} is not contained in {shape}")
    n = size(shape) - size(inner)
    if mode == "standard":
        return [Tableau.from_chain(c) for c in _strip_chains(inner, shape, [1] * n)]
    if mode == "content":
        if content is None or sum(content) != n:
            raise ValueError("content must sum to the number of boxes")
        return [Tableau.from_chain(c) for c in _strip_chains(inner, shape, list(content))]
    if mode == "semistandard":
        if max_entry is None:
            raise ValueError("semistandard mode needs max_entry")
        out = []
        for comp in _compositions(n, max_entry):
            out.extend(Tableau.from_chain(c) for c in _strip_chains(inner, shape, comp))
        return out
    raise ValueError(f"unknown tableau mode {mode!r}")


def _compositions(n: int, k: int) -> Iterator[list[int]]:
    """Weak compositions of ``n`` into ``k`` parts."""
    if k == 0:
        if n == 0:
            yield []
        return
    for first in range(n, -1, -1):
        for rest in _compositions(n - first, k - 1):
            yield [first] + rest


# --- distances between boxes ------------------------------------------------

def box_distance(b1: Box, b2: Box) -> int:
    return abs(b1[0] - b2[0]) + abs(b1[1] - b2[1])


def has_close_pair(mu: Partition, lam: Partition, d: int) -> bool:
    """``mu ≺_{<=d} lam``: two distinct added boxes at distance ``<= d``."""
    if not contains(mu, lam):
        return False
    added = skew_boxes(lam, mu)
    return any(box_distance(a, b) <= d
               for k, a in enumerate(added) for b in added[k + 1:])


def all_far_apart(mu: Partition, lam: Partition, d: int) -> bool:
    """``mu ≺_{>d} lam``: all added boxes pairwise at distance ``> d``."""
    return contains(mu, lam) and not has_close_pair(mu, lam, d)
