"""Pair fillings with close pairs, and the two-stage map to standard tableaux.

``SD_d(lam)``: fillings of ``lam`` (``|lam| = 2n``) by ``1..n``, weakly
increasing along rows and down columns, each value used twice at boxes of
distance ``<= d``.  ``f1`` keeps one box per domino and ``f2`` slides the
survivors into a standard tableau of shape inside ``ceil(lam/2)``.
"""
from __future__ import annotations

from collections import Counter, defaultdict
from dataclasses import dataclass, field
from typing import Callable, Iterator, Mapping, Optional

from .partitions import (
    Box,
    Partition,
    Tableau,
    addable_corners,
    add_box,
    box_distance,
    conjugate,
    contains,
    enumerate_partitions,
    enumerate_tableaux,
    in_shape,
    make_partition,
    size,
    skew_boxes,
)

__all__ = [
    "box_distance", "PairFilling", "PartialFilling", "enumerate_SD", "dominoes",
    "has_halfness", "is_monotone", "f1", "f2", "f2_run", "F2Run", "fiber_census",
    "FiberCensus", "fiber_bound",
]


def _frozen_entries(entries: Mapping[Box, int]) -> tuple[tuple[Box, int], ...]:
    return tuple(sorted(entries.items()))


@dataclass(frozen=True)
class PairFilling:
    shape: Partition
    cells: tuple[tuple[Box, int], ...]

    @property
    def entries(self) -> dict[Box, int]:
        return dict(self.cells)

    @property
    def n(self) -> int:
        return size(self.shape) // 2

    @classmethod
    def from_chain(cls, chain: list[Partition]) -> "PairFilling":
        entries = {}
        for k in range(1, len(chain)):
            for b in skew_boxes(chain[k], chain[k - 1]):
                entries[b] = k
        return cls(chain[-1], _frozen_entries(entries))

    def is_valid(self, d: int) -> bool:
        e = self.entries
        if set(e) != {(i, j) for i, row in enumerate(self.shape, 1) for j in range(1, row + 1)}:
            return False
        for (i, j), v in e.items():
            if e.get((i, j + 1), v) < v or e.get((i + 1, j), v) < v:
                return False
        where = defaultdict(list)
        for b, v in e.items():
            where[v].append(b)
        if sorted(where) != list(range(1, self.n + 1)):
            return False
        return all(len(bs) == 2 and box_distance(*bs) <= d for bs in where.values())

    def __str__(self) -> str:
        e = self.entries
        return "/".join(" ".join(str(e[(i, j)]) for j in range(1, r + 1))
                        for i, r in enumerate(self.shape, 1))


@dataclass(frozen=True)
class PartialFilling:
    shape: Partition
    cells: tuple[tuple[Box, int], ...]

    @property
    def entries(self) -> dict[Box, int]:
        return dict(self.cells)

    @property
    def occupied(self) -> frozenset[Box]:
        return frozenset(b for b, _ in self.cells)

    def has_halfness(self) -> bool:
        return has_halfness(self.shape, self.occupied)

    def is_monotone(self) -> bool:
        return is_monotone(self.entries)


def _two_box_extensions(cur: Partition, outer: Partition, d: int) -> list[Partition]:
    out = set()
    for i1, _ in addable_corners(cur):
        mid = add_box(cur, i1)
        if not contains(mid, outer):
            continue
        for i2, _ in addable_corners(mid):
            nxt = add_box(mid, i2)
            if contains(nxt, outer):
                a, b = skew_boxes(nxt, cur)
                if box_distance(a, b) <= d:
                    out.add(nxt)
    return sorted(out, reverse=True)


def enumerate_SD(lam: Partition, d: int) -> list[PairFilling]:
    """All of ``SD_d(lam)``, as chains of partitions growing by two close boxes."""
    lam = make_partition(lam)
    if size(lam) % 2:
        raise ValueError(f"|lam| = {size(lam)} is odd")

    def rec(cur: Partition, chain: list[Partition]) -> Iterator[list[Partition]]:
        if cur == lam:
            yield chain
            return
        for nxt in _two_box_extensions(cur, lam, d):
            yield from rec(nxt, chain + [nxt])

    return [PairFilling.from_chain(c) for c in rec((), [()])]


def dominoes(lam: Partition) -> list[Box]:
    """North boxes ``(2i-1, j)`` of the dominoes of ``lam``, in lexicographic order."""
    cols = conjugate(lam)
    return sorted((2 * i - 1, j) for j, c in enumerate(cols, 1) for i in range(1, c // 2 + 1))


def _domino_of(lam_conj: Partition, box: Box) -> Optional[Box]:
    i, j = box
    north = i if i % 2 else i - 1
    if j <= len(lam_conj) and north + 1 <= lam_conj[j - 1]:
        return (north, j)
    return None


def has_halfness(lam: Partition, occupied) -> bool:
    occ = set(occupied)
    if not all(in_shape(lam, b) for b in occ):
        return False
    return all(((i, j) in occ) != ((i + 1, j) in occ) for i, j in dominoes(lam))


def is_monotone(entries: Mapping[Box, int]) -> bool:
    """Entries strictly increase toward the south-east (weakly in each coordinate)."""
    items = list(entries.items())
    for k, ((i1, j1), e1) in enumerate(items):
        for (i2, j2), e2 in items[k + 1:]:
            if i1 <= i2 and j1 <= j2 and e1 >= e2:
                return False
            if i2 <= i1 and j2 <= j1 and e2 >= e1:
                return False
    return True


# --- f1 --------------------------------------------------------------------

def f1(pf: PairFilling) -> PartialFilling:
    """Delete entries so that every domino keeps one and every value survives once.

    Components of the domino/value graph are resolved as follows.  A domino
    holding both copies of a value keeps its north box.  A cycle is numbered
    from its lexicographically smallest domino, the first edge being the one
    through that domino's north box.  A path is numbered from the end whose
    domino is smaller; when both ends meet the same domino the end through
    its north box goes first.  Odd edges are kept.  Leftover duplicates lose
    a copy outside the dominoes (the larger box if both are outside).
    """
    lam = pf.shape
    lam_c = conjugate(lam)
    entries = pf.entries
    # edges: (domino, value) -> boxes of that domino holding value
    edges: dict[tuple[Box, int], list[Box]] = defaultdict(list)
    for b, v in entries.items():
        D = _domino_of(lam_c, b)
        if D is not None:
            edges[(D, v)].append(b)
    adj: dict[tuple, list[tuple]] = defaultdict(list)
    for D, v in edges:
        adj[("D", D)].append(("V", v))
        adj[("V", v)].append(("D", D))

    deleted: set[Box] = set()
    seen: set[tuple] = set()
    for D in dominoes(lam):
        start = ("D", D)
        if start in seen:
            continue
        comp, stack = [], [start]
        seen.add(start)
        while stack:
            x = stack.pop()
            comp.append(x)
            for y in adj[x]:
                if y not in seen:
                    seen.add(y)
                    stack.append(y)
        deleted |= _resolve_component(comp, adj, edges)

    kept = {b: v for b, v in entries.items() if b not in deleted}
    where = defaultdict(list)
    for b, v in kept.items():
        where[v].append(b)
    for v, bs in where.items():
        if len(bs) == 2:
            outside = [b for b in bs if _domino_of(lam_c, b) is None]
            del kept[max(outside)]
    return PartialFilling(lam, _frozen_entries(kept))


def _resolve_component(comp, adj, edges) -> set[Box]:
    doms = sorted(x[1] for x in comp if x[0] == "D")
    if len(comp) == 2:
        (D,), v = doms, next(x[1] for x in comp if x[0] == "V")
        bs = edges[(D, v)]
        if len(bs) == 2:
            return {max(bs)}  # south copy
    # every edge now carries exactly one box
    def box_of(D, v):
        (b,) = edges[(D, v)]
        return b

    ends = [x for x in comp if x[0] == "V" and len(adj[x]) == 1]
    if not ends:
        D0 = doms[0]
        v1 = next(y[1] for y in adj[("D", D0)] if box_of(D0, y[1]) == D0)
        walk_start = [("D", D0), ("V", v1)]
    else:
        a, b = ends
        Da, Db = adj[a][0][1], adj[b][0][1]
        if Da == Db:
            first = a if box_of(Da, a[1]) == Da else b
        else:
            first = a if Da < Db else b
        walk_start = [first, adj[first][0]]
    path = list(walk_start)
    while True:
        nxt = [y for y in adj[path[-1]] if y != path[-2]]
        if not nxt or nxt[0] == path[0]:
            break
        path.append(nxt[0])
    if not ends:
        path.append(path[0])
    deleted = set()
    for k in range(len(path) - 1):
        x, y = path[k], path[k + 1]
        D, v = (x[1], y[1]) if x[0] == "D" else (y[1], x[1])
        if k % 2 == 1:
            deleted.add(box_of(D, v))
    return deleted


# --- f2 --------------------------------------------------------------------

@dataclass
class F2Run:
    tableau: Tableau
    moves: int
    steps: list[tuple[int, dict[Box, int]]] = field(default_factory=list)


def _stack_and_slide(lam: Partition, entries: dict[Box, int]) -> dict[Box, int]:
    cols = conjugate(lam)
    by_col = defaultdict(list)
    for (i, j), v in entries.items():
        by_col[j].append((i, v))
    stacked, special = {}, set()
    for j, items in by_col.items():
        items.sort()
        for r, (i, v) in enumerate(items, 1):
            stacked[(r, j)] = v
            if cols[j - 1] % 2 == 1 and i == cols[j - 1]:
                special.add((r, j))
    out = dict(stacked)
    for r in sorted({b[0] for b in special}):
        for j in sorted(jj for rr, jj in special if rr == r):
            v = out.pop((r, j))
            while j > 1 and (r, j - 1) not in out:
                j -= 1
            out[(r, j)] = v
    return out


def f2_run(pf: PartialFilling, trace: Optional[Callable[[int, dict[Box, int]], None]] = None,
           record: bool = False) -> F2Run:
    """Run the south-entry elimination; ``trace(step, entries)`` sees every state."""
    if not pf.has_halfness():
        raise ValueError("input violates halfness")
    if not pf.is_monotone():
        raise ValueError("input violates monotonicity")
    lam = pf.shape
    e = pf.entries
    steps: list[tuple[int, dict[Box, int]]] = []

    def emit(step: int) -> None:
        if trace is not None:
            trace(step, dict(e))
        if record:
            steps.append((step, dict(e)))

    moves = 0
    limit = 4 * size(lam) + 4
    while True:
        south = [b for b in e if b[0] % 2 == 0]
        if not south:
            e = _stack_and_slide(lam, e)
            emit(1)
            break
        if moves > limit:
            raise RuntimeError("south-entry elimination did not terminate")
        r, j = min(south)
        a = e[(r, j)]
        if (r - 1, j) in e:
            raise ValueError("halfness broken during elimination")
        right = sorted(jj for rr, jj in e if rr == r - 1 and jj > j)
        if not right or e[(r - 1, right[0])] > a:
            e[(r - 1, j)] = e.pop((r, j))
            moves += 1
            emit(2 if not right else 3)
            continue
        jp = right[0]
        b = e.pop((r - 1, jp))
        for jj in range(jp - 1, j - 1, -1):
            if (r, jj) in e:
                if (r, jj + 1) in e:
                    raise RuntimeError("shift collided with an occupied box")
                e[(r, jj + 1)] = e.pop((r, jj))
        e[(r - 1, j)] = b
        moves += 1
        emit(4)

    shape = make_partition([sum(1 for (i, _) in e if i == r) for r in range(1, _max_row(e) + 1)])
    if set(e) != {(i, j) for i, row in enumerate(shape, 1) for j in range(1, row + 1)}:
        raise RuntimeError("final entries do not form a Young diagram")
    return F2Run(Tableau.from_entries(shape, e), moves, steps)


def _max_row(entries: Mapping[Box, int]) -> int:
    return max((i for i, _ in entries), default=0)


def f2(pf: PartialFilling) -> Tableau:
    return f2_run(pf).tableau


# --- fiber census ------------------------------------------------------------

def fiber_bound(n: int, d: int) -> int:
    """Explicit bound ``(12 (2d + 1))^{2n}`` on total fibers over shapes of size 2n."""
    return (12 * (2 * d + 1)) ** (2 * n)


@dataclass
class FiberCensus:
    n: int
    d: int
    counts: dict[Tableau, int]

    @property
    def bound(self) -> int:
        return fiber_bound(self.n, self.d)

    @property
    def max_fiber(self) -> int:
        return max(self.counts.values(), default=0)

    @property
    def holds(self) -> bool:
        return self.max_fiber <= self.bound

    def to_json(self) -> dict:
        return {"n": self.n, "d": self.d, "max_fiber": self.max_fiber, "bound": self.bound}


def fiber_census(n: int, d: int) -> FiberCensus:
    """Total ``|f^{-1}(T)|`` over all ``lam`` of size ``2n`` for every standard ``T`` of size ``n``."""
    if n < 0 or d < 0:
        raise ValueError("n and d must be non-negative")
    counts: Counter = Counter()
    for mu in enumerate_partitions(n):
        for T in enumerate_tableaux(mu):
            counts[T] = 0
    for lam in enumerate_partitions(2 * n):
        for pf in enumerate_SD(lam, d):
            T = f2(f1(pf))
            if T not in counts:
                raise RuntimeError(f"image {T} is not a standard tableau of size {n}")
            counts[T] += 1
    return FiberCensus(n, d, dict(counts))
