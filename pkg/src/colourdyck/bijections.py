"""The seven bijections between coloured Dyck paths and other structures.

Every forward map works recursively on the primary decomposition
``U^k D P_k D ... D P_1``: the coloured base pyramid is mapped on its own and
the images of the appended paths are spliced in; relabelling is always by
clockwise order, so points that already exist keep their relative order.
"""

from __future__ import annotations

from typing import Optional

from .colours import (
    ColourSystem,
    ColouredDyckPath,
    coloured_compose,
    coloured_primary_decompose,
)
from .errors import (
    InvalidDissection,
    InvalidPartition,
    NotALittleSchroederPath,
    NotAnNCOTree,
    NotAnNCTree,
    NotATPath,
    UnmatchedH,
)
from .paths import (
    DyckPath,
    LittleSchroederPath,
    SchroederPath,
    TPath,
    fibonacci_from_bits,
    fibonacci_touch_bits,
)
from .structures import (
    Dissection,
    EvenPartition,
    NCOTree,
    NCTree,
    NonCrossingPartition,
    validate,
)

_EMPTY = ColouredDyckPath(DyckPath(""), ())


def _relabel(sequence) -> dict:
    return {item: i for i, item in enumerate(sequence, start=1)}


# -- theta: Dyck paths <-> NCO trees --------------------------------------

def theta(path: DyckPath) -> NCOTree:
    current, points = 1, 1
    pending: list[int] = []
    edges = []
    for c in path.steps:
        if c == "U":
            pending.append(current)
        else:
            points += 1
            current = points
            edges.append((pending.pop(), current))
    return NCOTree(points, tuple(edges))


def theta_inv(tree: NCTree) -> DyckPath:
    """Per vertex, clockwise from 1: one D for its in-edge, then one U per out-edge."""
    tree = NCOTree(tree.n, tree.edges)
    bad = validate(tree)
    if bad is not None:
        raise NotAnNCOTree(str(bad))
    out = []
    for v in range(1, tree.n + 1):
        out.append("D" * tree.in_degree(v) + "U" * len(tree.out_neighbours(v)))
    return DyckPath("".join(out))


# -- phi: Dyck paths coloured by Dyck paths <-> NC trees ------------------

def _phi(path: ColouredDyckPath) -> tuple[int, list]:
    if not path.base:
        return 1, []
    k, colour, parts = coloured_primary_decompose(path)
    base = theta(colour)
    subs = {i: _phi(parts[k - i]) for i in range(1, k + 1)}
    # sub-tree i: root on base vertex i+1, its other vertices just before it
    order = [("b", 1)]
    for i in range(1, k + 1):
        order += [("s", i, u) for u in range(2, subs[i][0] + 1)]
        order.append(("b", i + 1))
    label = _relabel(order)
    edges = [(label["b", a], label["b", b]) for a, b in base.edges]
    for i, (_, sub_edges) in subs.items():
        def place(u, i=i):
            return label["b", i + 1] if u == 1 else label["s", i, u]
        edges += [(place(a), place(b)) for a, b in sub_edges]
    return len(order), edges


def phi(path: ColouredDyckPath) -> NCTree:
    path.check_system(ColourSystem.catalan())
    n, edges = _phi(path)
    return NCTree(n, tuple(edges))


def _phi_inv(n: int, edges: list) -> ColouredDyckPath:
    if n == 1:
        return _EMPTY
    out = {v: [] for v in range(1, n + 1)}
    for a, b in edges:
        out[a].append(b)
    base, stack = {1}, [1]
    while stack:
        for b in out[stack.pop()]:
            if b not in base:
                base.add(b)
                stack.append(b)
    vs = sorted(base)
    k = len(vs) - 1
    pos = {v: i for i, v in enumerate(vs, start=1)}
    colour = theta_inv(NCTree(k + 1, tuple((pos[a], pos[b]) for a, b in edges
                                           if a in base and b in base)))
    parts = []
    for i in range(k, 0, -1):
        root = vs[i]
        between = list(range(vs[i - 1] + 1, root))
        local = {root: 1}
        local.update({v: j for j, v in enumerate(between, start=2)})
        sub_edges = [(local[a], local[b]) for a, b in edges if a in local and b in local]
        if len(sub_edges) != len(local) - 1:
            raise NotAnNCTree(f"vertices {between} do not hang off vertex {root} alone")
        parts.append(_phi_inv(len(local), sorted(tuple(sorted(e)) for e in sub_edges)))
    return coloured_compose(colour, parts)


def phi_inv(tree: NCTree) -> ColouredDyckPath:
    tree = NCTree(tree.n, tree.edges)
    bad = validate(tree)
    if bad is not None:
        raise NotAnNCTree(str(bad))
    return _phi_inv(tree.n, list(tree.edges))


# -- psi: Dyck paths <-> non-crossing partitions --------------------------

def psi(path: DyckPath) -> NonCrossingPartition:
    blocks: list[list[int]] = []
    open_blocks: list[int] = []
    need: dict[int, int] = {}
    steps, run, point = path.steps, 0, 0
    for c in steps:
        if c == "U":
            run += 1
            continue
        point += 1
        if run:
            blocks.append([point])
            if run > 1:
                need[len(blocks) - 1] = run - 1
                open_blocks.append(len(blocks) - 1)
            run = 0
        else:
            top = open_blocks[-1]
            blocks[top].append(point)
            need[top] -= 1
            if not need[top]:
                open_blocks.pop()
    return NonCrossingPartition(point, tuple(map(tuple, blocks)))


def psi_inv(partition: NonCrossingPartition) -> DyckPath:
    partition = NonCrossingPartition(partition.n, partition.blocks)
    bad = validate(partition)
    if bad is not None:
        raise InvalidPartition(str(bad))
    first = {b[0]: len(b) for b in partition.blocks}
    return DyckPath("".join("U" * first[p] + "D" if p in first else "D"
                            for p in range(1, partition.n + 1)))


# -- rho: bounded-ascent colours <-> even non-crossing partitions ---------

def _rho(path: ColouredDyckPath) -> tuple[int, list]:
    if not path.base:
        return 0, []
    k, colour, parts = coloured_primary_decompose(path)
    base = psi(colour)
    subs = {i: _rho(parts[k - i]) for i in range(1, k + 1)}
    order = []
    for i in range(1, k + 1):
        order.append(("a", i))
        order += [("s", i, u) for u in range(1, subs[i][0] + 1)]
        order.append(("b", i))
    label = _relabel(order)
    blocks = [[label[side, x] for x in b for side in "ab"] for b in base.blocks]
    for i, (_, sub_blocks) in subs.items():
        blocks += [[label["s", i, u] for u in b] for b in sub_blocks]
    return len(order), blocks


def rho(path: ColouredDyckPath, m: Optional[int] = None) -> EvenPartition:
    system = ColourSystem.catalan() if m is None else ColourSystem.bounded_ascent(m)
    path.check_system(system)
    n, blocks = _rho(path)
    return EvenPartition(n, tuple(map(tuple, blocks)), m)


def _rho_inv(n: int, blocks: list) -> ColouredDyckPath:
    if n == 0:
        return _EMPTY
    nxt, owner = {}, {}
    for idx, b in enumerate(blocks):
        for j, p in enumerate(b):
            nxt[p] = b[(j + 1) % len(b)]
            owner[p] = idx
    # from a_i follow the block clockwise to b_i, from b_i step to a_{i+1}
    pairs, p = [], 1
    while True:
        q = nxt[p]
        if q <= p:
            raise InvalidPartition(f"walk from point {p} does not move clockwise")
        pairs.append((p, q))
        if q == n:
            break
        p = q + 1
    index = {}
    for i, (a, b) in enumerate(pairs, start=1):
        index[a] = index[b] = i
    merged = []
    for idx in sorted({owner[a] for a, _ in pairs}):
        block = blocks[idx]
        if any(p not in index for p in block):
            raise InvalidPartition(f"block {block} mixes base points with inner points")
        merged.append(tuple(sorted({index[p] for p in block})))
    k = len(pairs)
    colour = psi_inv(NonCrossingPartition(k, tuple(merged)))
    parts = []
    for a, b in reversed(pairs):
        local = {p: j for j, p in enumerate(range(a + 1, b), start=1)}
        sub = [[local[p] for p in blk] for blk in blocks if blk[0] in local]
        if sum(len(s) for s in sub) != len(local):
            raise InvalidPartition(f"points between {a} and {b} leak outside")
        parts.append(_rho_inv(len(local), sub))
    return coloured_compose(colour, parts)


def rho_inv(partition: NonCrossingPartition, m: Optional[int] = None) -> ColouredDyckPath:
    even = EvenPartition(partition.n, partition.blocks, m)
    bad = validate(even)
    if bad is not None:
        raise InvalidPartition(str(bad))
    return _rho_inv(even.n, [list(b) for b in even.blocks])


# -- sigma: Fibonacci colours <-> polygon dissections ---------------------

def _sigma(path: ColouredDyckPath) -> tuple[int, list]:
    # internal labels: alpha = 0, polygon label j = j + 1
    if not path.base:
        return 0, []
    k, colour, parts = coloured_primary_decompose(path)
    bits = fibonacci_touch_bits(colour)
    subs = {i: _sigma(parts[k - i]) for i in range(1, k + 1)}
    order = [("b", 0), ("b", 1)]
    for i in range(1, k + 1):
        order += [("s", i, u) for u in range(1, subs[i][0] + 1)]
        order.append(("b", i + 1))
    label = {item: i for i, item in enumerate(order)}
    diagonals = [(0, label["b", j + 1]) for j in range(1, k) if bits[j - 1]]
    for i, (size, sub_diags) in subs.items():
        if not size:
            continue

        def place(u, i=i, size=size):
            if u == 0:
                return label["b", i]
            if u == size + 1:
                return label["b", i + 1]
            return label["s", i, u]

        diagonals.append((label["b", i], label["b", i + 1]))
        diagonals += [(place(x), place(y)) for x, y in sub_diags]
    return len(order) - 2, diagonals


def sigma(path: ColouredDyckPath, m: Optional[int] = None) -> Dissection:
    system = ColourSystem.fibonacci(m)
    path.check_system(system)
    k, diagonals = _sigma(path)
    return Dissection(k, tuple(diagonals), m)


def _sigma_inv(k: int, diagonals: list) -> ColouredDyckPath:
    if k == 0:
        return _EMPTY
    cells = Dissection(k, tuple(diagonals)).cells()
    fan = sorted({v for c in cells if 0 in c for v in c} - {0})
    size = len(fan) - 1
    diag_set = set(diagonals)
    bits = [int((0, fan[j]) in diag_set) for j in range(1, size)]
    colour = fibonacci_from_bits(bits)
    parts = []
    for i in range(size, 0, -1):
        lo, hi = fan[i - 1], fan[i]
        local = {lo: 0, hi: hi - lo}
        local.update({v: v - lo for v in range(lo + 1, hi)})
        sub = [(local[x], local[y]) for x, y in diagonals
               if x in local and y in local and (x, y) != (lo, hi)]
        parts.append(_sigma_inv(hi - lo - 1, sub))
    return coloured_compose(colour, parts)


def sigma_inv(dissection: Dissection, m: Optional[int] = None) -> ColouredDyckPath:
    d = Dissection(dissection.k, dissection.diagonals, m)
    bad = validate(d)
    if bad is not None:
        raise InvalidDissection(str(bad))
    return _sigma_inv(d.k, list(d.diagonals))


# -- Fibonacci colours <-> little Schröder paths --------------------------

def _fib_to_ls(path: ColouredDyckPath) -> str:
    if not path.base:
        return ""
    k, colour, parts = coloured_primary_decompose(path)
    bits = fibonacci_touch_bits(colour)
    # A_{k-1}, ..., A_1 and the closing D, one per base down-step
    letters = ["D" if bits[i - 1] else "L" for i in range(k - 1, 0, -1)] + ["D"]
    return "U" * (sum(bits) + 1) + "".join(a + _fib_to_ls(p) for a, p in zip(letters, parts))


def fib_to_ls(path: ColouredDyckPath) -> LittleSchroederPath:
    path.check_system(ColourSystem.fibonacci_free())
    return LittleSchroederPath(_fib_to_ls(path))


def _ls_to_fib(word: str) -> ColouredDyckPath:
    if not word:
        return _EMPTY
    ell = len(word) - len(word.lstrip("U"))
    pos, floor = ell, ell
    xs, subs = [], []
    while True:
        if pos >= len(word) or word[pos] == "U":
            raise NotALittleSchroederPath(f"expected D or L at position {pos} of {word!r}")
        x = word[pos]
        pos += 1
        if x == "D":
            floor -= 1
        start, rel = pos, 0
        while pos < len(word):
            c = word[pos]
            if rel == 0 and c in "DL":
                break
            rel += {"U": 1, "D": -1, "L": 0}[c]
            pos += 1
        subs.append(word[start:pos])
        if floor == 0:
            break
        xs.append(x)
    if pos != len(word):
        raise NotALittleSchroederPath(f"{word!r} has an L step on the axis at position {pos}")
    k = len(xs) + 1
    bits = [int(xs[k - 1 - i] == "D") for i in range(1, k)]
    return coloured_compose(fibonacci_from_bits(bits), [_ls_to_fib(s) for s in subs])


def ls_to_fib(path) -> ColouredDyckPath:
    try:
        word = LittleSchroederPath(str(path)).steps
    except ValueError as exc:
        raise NotALittleSchroederPath(str(exc)) from None
    return _ls_to_fib(word)


# -- Schröder colours <-> T-paths -----------------------------------------

_TO_T = {"U": "H", "L": "G", "D": "D"}
_FROM_T = {"H": "U", "G": "L", "D": "D"}


def schroeder_to_t(path: ColouredDyckPath) -> TPath:
    """Replace each ascent by its colour turned 45 degrees: U->H, L->G, D->D."""
    path.check_system(ColourSystem.schroeder())
    out, colours = [], iter(path.colours)
    steps = path.base.steps
    for i, c in enumerate(steps):
        if c == "U":
            if i == 0 or steps[i - 1] == "D":
                out.append("".join(_TO_T[s] for s in str(next(colours))))
        else:
            out.append("D")
    return TPath("".join(out))


def t_to_schroeder(path) -> ColouredDyckPath:
    try:
        word = TPath(str(path)).steps
    except ValueError as exc:
        raise NotATPath(str(exc)) from None
    # an H is matched by the nearest D to its right with as many H as D in between
    matched = [False] * len(word)
    open_h: list[int] = []
    for i, c in enumerate(word):
        if c == "H":
            open_h.append(i)
        elif c == "D" and open_h:
            open_h.pop()
            matched[i] = True
    if open_h:
        raise UnmatchedH(f"H at position {open_h[-1]} of {word!r} has no match")
    base, colours, segment = [], [], []

    def flush():
        if segment:
            colour = SchroederPath("".join(segment))
            colours.append(colour)
            base.append("U" * colour.semilength)
            segment.clear()

    for i, c in enumerate(word):
        if c == "D" and not matched[i]:
            flush()
            base.append("D")
        else:
            segment.append(_FROM_T[c])
    flush()
    try:
        return ColouredDyckPath(DyckPath("".join(base)), tuple(colours))
    except ValueError as exc:
        raise NotATPath(str(exc)) from None
