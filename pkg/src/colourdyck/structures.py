"""Non-crossing trees, non-crossing partitions and polygon dissections.

Points sit on a circle, labelled clockwise from the top.  Crossing is decided
purely from the cyclic order of labels; no coordinates are involved.

Label conventions:

* trees: vertices ``1..n``;
* even partitions: ``a_i -> 2i-1``, ``b_i -> 2i``;
* dissections: the polygon ``alpha, 0, 1, ..., k`` is stored as
  ``0, 1, ..., k+1`` (``alpha -> 0``, label ``j -> j+1``), which is also the
  JSON encoding.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterator, Optional

from .errors import SizeTooLarge

# oracle guardrails; adjust through set_limit()
LIMITS = {
    "tree": 8,        # vertices
    "partition": 14,  # points
    "polygon": 9,     # polygon vertices
    "t_path": 6,      # semilength
}


def set_limit(kind: str, value: int) -> None:
    if kind not in LIMITS:
        raise KeyError(kind)
    LIMITS[kind] = value


def check_size(kind: str, size: int) -> None:
    if size > LIMITS[kind]:
        raise SizeTooLarge(f"{kind} size {size} exceeds the oracle limit {LIMITS[kind]}")


def chords_cross(e, f) -> bool:
    (a, b), (c, d) = sorted(e), sorted(f)
    return a < c < b < d or c < a < d < b


@dataclass(frozen=True)
class Violation:
    invariant: str
    witness: tuple

    def __str__(self):
        return f"{self.invariant}: {self.witness}"


def _dumps(obj) -> str:
    return json.dumps(obj, separators=(",", ":"))


@dataclass(frozen=True)
class NCTree:
    """Tree on circle points ``1..n`` (``n`` counts vertices)."""

    n: int
    edges: tuple

    def __post_init__(self):
        object.__setattr__(self, "edges", tuple(sorted(tuple(sorted(e)) for e in self.edges)))

    def to_json(self) -> str:
        return _dumps({"n": self.n, "edges": [list(e) for e in self.edges]})

    def out_neighbours(self, v: int) -> list[int]:
        return [b for a, b in self.edges if a == v]

    def in_degree(self, v: int) -> int:
        return sum(1 for _, b in self.edges if b == v)


class NCOTree(NCTree):
    pass


@dataclass(frozen=True)
class NonCrossingPartition:
    """Partition of circle points ``1..n`` into blocks."""

    n: int
    blocks: tuple

    def __post_init__(self):
        object.__setattr__(self, "blocks", tuple(sorted(tuple(sorted(b)) for b in self.blocks)))

    def to_json(self) -> str:
        return _dumps({"blocks": [list(b) for b in self.blocks]})

    def block_of(self) -> dict:
        return {p: i for i, b in enumerate(self.blocks) for p in b}


@dataclass(frozen=True)
class EvenPartition(NonCrossingPartition):
    """Partition of ``2n`` points ``a_1, b_1, ..., a_n, b_n``; ``bound`` caps blocks at ``2*bound``."""

    bound: Optional[int] = field(default=None, compare=False)


@dataclass(frozen=True)
class Dissection:
    """Dissection of the ``(k+2)``-gon by diagonals, in internal labels ``0..k+1``."""

    k: int
    diagonals: tuple
    bound: Optional[int] = field(default=None, compare=False)

    def __post_init__(self):
        object.__setattr__(
            self, "diagonals", tuple(sorted(tuple(sorted(d)) for d in self.diagonals)))

    @property
    def vertices(self) -> int:
        return self.k + 2

    def to_json(self) -> str:
        return _dumps({"k": self.k, "diagonals": [list(d) for d in self.diagonals]})

    def is_side(self, x: int, y: int) -> bool:
        x, y = sorted((x, y))
        return y - x == 1 or (x == 0 and y == self.k + 1)

    def cells(self) -> list[tuple]:
        """Faces of the dissection as sorted vertex tuples."""
        faces = [tuple(range(self.k + 2))]
        for x, y in self.diagonals:
            for i, f in enumerate(faces):
                if x in f and y in f:
                    faces[i] = tuple(v for v in f if v <= x or v >= y)
                    faces.append(tuple(v for v in f if x <= v <= y))
                    break
        return sorted(faces)


def from_json(text: str):
    """Parse any of the JSON structure forms."""
    obj = json.loads(text)
    if "edges" in obj:
        return NCTree(int(obj["n"]), tuple(tuple(e) for e in obj["edges"]))
    if "diagonals" in obj:
        return Dissection(int(obj["k"]), tuple(tuple(d) for d in obj["diagonals"]))
    if "blocks" in obj:
        blocks = tuple(tuple(b) for b in obj["blocks"])
        return NonCrossingPartition(sum(len(b) for b in blocks), blocks)
    raise ValueError("JSON has none of the keys 'edges', 'blocks', 'diagonals'")


# -- validation ---------------------------------------------------------------

def _tree_violation(t: NCTree) -> Optional[Violation]:
    verts = range(1, t.n + 1)
    for e in t.edges:
        a, b = e
        if not (1 <= a < b <= t.n):
            return Violation("edge endpoints within 1..n and distinct", e)
    if len(set(t.edges)) != len(t.edges):
        return Violation("no repeated edges", t.edges)
    for e, f in combinations(t.edges, 2):
        if chords_cross(e, f):
            return Violation("non-crossing", (e, f))
    if len(t.edges) != max(t.n - 1, 0):
        return Violation("tree has n-1 edges", (len(t.edges), t.n))
    parent = {v: v for v in verts}

    def find(v):
        while parent[v] != v:
            parent[v] = parent[parent[v]]
            v = parent[v]
        return v

    for a, b in t.edges:
        ra, rb = find(a), find(b)
        if ra == rb:
            return Violation("acyclic", (a, b))
        parent[ra] = rb
    if isinstance(t, NCOTree):
        for v in range(2, t.n + 1):
            if t.in_degree(v) != 1:
                return Violation("in-degree 1 at every vertex except 1", (v, t.in_degree(v)))
    return None


def _partition_violation(p: NonCrossingPartition) -> Optional[Violation]:
    seen: list[int] = []
    for b in p.blocks:
        if not b:
            return Violation("blocks nonempty", b)
        seen.extend(b)
    if sorted(seen) != list(range(1, p.n + 1)):
        return Violation("blocks partition 1..n", tuple(sorted(seen)))
    w = crossing_witness(p.blocks)
    if w is not None:
        return Violation("non-crossing", w)
    if isinstance(p, EvenPartition):
        for b in p.blocks:
            if len(b) % 2:
                return Violation("blocks of even size", b)
            if p.bound is not None and len(b) > 2 * p.bound:
                return Violation(f"blocks of size at most {2 * p.bound}", b)
    return None


def _dissection_violation(d: Dissection) -> Optional[Violation]:
    if d.k < 0:
        return Violation("polygon has at least 2 vertices", (d.k + 2,))
    if len(set(d.diagonals)) != len(d.diagonals):
        return Violation("no repeated diagonals", d.diagonals)
    for x, y in d.diagonals:
        if not (0 <= x < y <= d.k + 1):
            return Violation("diagonal endpoints are polygon vertices", (x, y))
        if d.is_side(x, y):
            return Violation("diagonals are not polygon sides", (x, y))
    for e, f in combinations(d.diagonals, 2):
        if chords_cross(e, f):
            return Violation("non-crossing", (e, f))
    if d.bound is not None:
        for c in d.cells():
            if len(c) > d.bound + 2:
                return Violation(f"cells have at most {d.bound + 2} vertices", c)
    return None


def validate(structure) -> Optional[Violation]:
    """``None`` when every invariant holds, else the first violation found."""
    if isinstance(structure, NCTree):
        return _tree_violation(structure)
    if isinstance(structure, NonCrossingPartition):
        return _partition_violation(structure)
    if isinstance(structure, Dissection):
        return _dissection_violation(structure)
    raise TypeError(f"cannot validate {type(structure).__name__}")


def is_valid(structure) -> bool:
    return validate(structure) is None


def crossing_witness(blocks) -> Optional[tuple]:
    """First ``(a, c), (b, d)`` with ``a < b < c < d`` split across two blocks."""
    owner = {p: i for i, b in enumerate(blocks) for p in b}
    pts = sorted(owner)
    for a, b, c, d in combinations(pts, 4):
        if owner[a] == owner[c] != owner[b] == owner[d]:
            return ((a, c), (b, d))
    return None


def hulls_disjoint(blocks) -> bool:
    """Second crossing test: each block must fit in one gap of every other block."""
    blocks = [sorted(b) for b in blocks]
    for i, x in enumerate(blocks):
        for j, y in enumerate(blocks):
            if i == j or len(x) < 2:
                continue
            # gaps of x on the circle: (x_t, x_{t+1}) and the wrap-around
            gap = [sum(1 for v in x if v < q) % len(x) for q in y]
            if len(set(gap)) > 1:
                return False
    return True


# -- exhaustive oracles -------------------------------------------------------

def _spanning_nc_trees(n: int) -> Iterator[NCTree]:
    chords = [(a, b) for a in range(1, n + 1) for b in range(a + 1, n + 1)]
    need = n - 1
    chosen: list = []
    parent = list(range(n + 1))

    def find(v):
        while parent[v] != v:
            v = parent[v]
        return v

    def rec(start):
        if len(chosen) == need:
            yield NCTree(n, tuple(chosen))
            return
        for idx in range(start, len(chords)):
            if len(chords) - idx < need - len(chosen):
                return
            e = chords[idx]
            if any(chords_cross(e, f) for f in chosen):
                continue
            ra, rb = find(e[0]), find(e[1])
            if ra == rb:
                continue
            parent[ra] = rb
            chosen.append(e)
            yield from rec(idx + 1)
            chosen.pop()
            parent[ra] = ra

    if n <= 1:
        yield NCTree(max(n, 1), ())
        return
    yield from rec(0)


def _nc_partitions(n: int, max_block: Optional[int] = None, even: bool = False) -> Iterator[tuple]:
    blocks: list[list[int]] = []
    owner = [0] * (n + 1)

    def rec(p):
        if p > n:
            yield tuple(tuple(b) for b in blocks)
            return
        for i, b in enumerate(blocks):
            if max_block is not None and len(b) >= max_block:
                continue
            last = b[-1]
            # joining b is blocked by any point after b's end whose block started before it
            between = range(last + 1, p)
            if any(blocks[owner[q]][0] < last for q in between):
                continue
            # blocks nested strictly inside (last, p) can never grow again
            if even and any(len(blocks[owner[q]]) % 2 for q in between):
                continue
            b.append(p)
            owner[p] = i
            yield from rec(p + 1)
            b.pop()
        blocks.append([p])
        owner[p] = len(blocks) - 1
        yield from rec(p + 1)
        blocks.pop()

    yield from rec(1)


def _dissections(k: int) -> Iterator[tuple]:
    v = k + 2
    diags = [(x, y) for x in range(v) for y in range(x + 2, v) if not (x == 0 and y == v - 1)]
    chosen: list = []

    def rec(start):
        yield tuple(chosen)
        for idx in range(start, len(diags)):
            d = diags[idx]
            if any(chords_cross(d, f) for f in chosen):
                continue
            chosen.append(d)
            yield from rec(idx + 1)
            chosen.pop()

    yield from rec(0)


def enumerate_structures(kind: str, size: int, m: Optional[int] = None) -> Iterator:
    """Every valid structure of the given kind, each exactly once.

    ``kind`` is one of ``nc_tree`` / ``nco_tree`` (``size`` = vertices),
    ``partition`` (``size`` = points), ``even_partition`` (``size`` = n, on
    2n points, blocks bounded by ``2m``), ``dissection`` (``size`` = k, the
    polygon has k+2 vertices and cells at most m+2) and ``t_path``.
    """
    if kind in ("nc_tree", "nco_tree"):
        check_size("tree", size)
        for t in _spanning_nc_trees(size):
            if kind == "nc_tree":
                yield t
            else:
                nco = NCOTree(t.n, t.edges)
                if validate(nco) is None:
                    yield nco
    elif kind == "partition":
        check_size("partition", size)
        for blocks in _nc_partitions(size):
            yield NonCrossingPartition(size, blocks)
    elif kind == "even_partition":
        check_size("partition", 2 * size)
        cap = None if m is None else 2 * m
        for blocks in _nc_partitions(2 * size, cap, even=True):
            if all(len(b) % 2 == 0 for b in blocks):
                yield EvenPartition(2 * size, blocks, m)
    elif kind == "dissection":
        check_size("polygon", size + 2)
        for diags in _dissections(size):
            d = Dissection(size, diags, m)
            if m is None or all(len(c) <= m + 2 for c in d.cells()):
                yield d
    elif kind == "t_path":
        check_size("t_path", size)
        from .paths import enumerate_family

        yield from enumerate_family(size, "t_path")
    else:
        raise ValueError(f"unknown structure kind {kind!r}")
