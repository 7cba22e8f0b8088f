"""Lattice paths: Dyck, Schröder, little Schröder and T-paths.

Paths are immutable step words.  Heights are always recomputed from the
steps, never stored.  The empty word is a valid member of every family.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import ClassVar, Iterator, Optional, Sequence, Union

from .errors import (
    EmptyPath,
    InvalidBound,
    NotAFibonacciPath,
    NotInFamily,
    UnbalancedWord,
    UnknownLetter,
)

# (dx, dy) of every step letter, per alphabet
_DYCK_STEPS = {"U": (1, 1), "D": (1, -1)}
_SCHROEDER_STEPS = {"U": (1, 1), "D": (1, -1), "L": (2, 0)}
_T_STEPS = {"H": (1, 2), "G": (2, 1), "D": (1, -1)}


@dataclass(frozen=True)
class _Path:
    steps: str

    STEPS: ClassVar[dict] = {}

    def __post_init__(self):
        if not isinstance(self.steps, str):
            object.__setattr__(self, "steps", "".join(self.steps))
        for i, c in enumerate(self.steps):
            if c not in self.STEPS:
                raise UnknownLetter(f"letter {c!r} at position {i} not in {''.join(self.STEPS)}")
        h = 0
        for i, c in enumerate(self.steps):
            h += self.STEPS[c][1]
            if h < 0:
                raise UnbalancedWord(f"{self.steps!r} goes below the axis after step {i}")
        if h != 0:
            raise UnbalancedWord(f"{self.steps!r} ends at height {h}")
        self._check_extra()

    def _check_extra(self):
        pass

    def __str__(self):
        return self.steps

    def __len__(self):
        return len(self.steps)

    def __iter__(self):
        return iter(self.steps)

    def __bool__(self):
        return bool(self.steps)

    def heights(self) -> list[int]:
        """Height before the first step and after every step."""
        out = [0]
        for c in self.steps:
            out.append(out[-1] + self.STEPS[c][1])
        return out

    def points(self) -> list[tuple[int, int]]:
        out = [(0, 0)]
        for c in self.steps:
            dx, dy = self.STEPS[c]
            x, y = out[-1]
            out.append((x + dx, y + dy))
        return out

    @property
    def span(self) -> int:
        return sum(self.STEPS[c][0] for c in self.steps)


class DyckPath(_Path):
    STEPS = _DYCK_STEPS

    @property
    def semilength(self) -> int:
        return len(self.steps) // 2

    @classmethod
    def pyramid(cls, k: int) -> "DyckPath":
        return cls("U" * k + "D" * k)


class SchroederPath(_Path):
    STEPS = _SCHROEDER_STEPS

    @property
    def semilength(self) -> int:
        return self.span // 2


class LittleSchroederPath(SchroederPath):
    def _check_extra(self):
        h = 0
        for i, c in enumerate(self.steps):
            if c == "L" and h == 0:
                raise UnbalancedWord(f"{self.steps!r} has an L step on the axis at position {i}")
            h += self.STEPS[c][1]


class TPath(_Path):
    STEPS = _T_STEPS

    @property
    def semilength(self) -> int:
        # balanced height forces #D = 2#H + #G, hence span = 3(#H + #G)
        return self.steps.count("H") + self.steps.count("G")


AnyPath = Union[DyckPath, SchroederPath, LittleSchroederPath, TPath]


@dataclass(frozen=True)
class Ascent:
    start: int
    length: int


@dataclass(frozen=True)
class Family:
    """A path family tag such as ``dyck`` or ``bounded_ascent(2)``.

    ``m`` is only meaningful for ``bounded_ascent`` and ``fibonacci``;
    ``fibonacci_free`` is ``fibonacci`` without a bound.
    """

    name: str
    m: Optional[int] = None

    NAMES: ClassVar[tuple] = (
        "dyck", "bounded_ascent", "fibonacci", "fibonacci_free",
        "schroeder", "little_schroeder", "t_path",
    )

    def __post_init__(self):
        if self.name not in self.NAMES:
            raise ValueError(f"unknown path family {self.name!r}")
        if self.name in ("bounded_ascent", "fibonacci"):
            if self.m is None or self.m < 1:
                raise InvalidBound(f"{self.name} needs a bound m >= 1, got {self.m}")
        elif self.m is not None:
            raise ValueError(f"family {self.name} takes no bound")

    @classmethod
    def parse(cls, tag: Union[str, "Family"]) -> "Family":
        if isinstance(tag, Family):
            return tag
        match = re.fullmatch(r"\s*([a-z_]+)\s*(?:\(\s*(-?\d+)\s*\))?\s*", tag.replace("-", "_"))
        if not match:
            raise ValueError(f"cannot parse path family {tag!r}")
        m = match.group(2)
        return cls(match.group(1), None if m is None else int(m))

    def __str__(self):
        return self.name if self.m is None else f"{self.name}({self.m})"

    @property
    def path_type(self) -> type:
        if self.name == "schroeder":
            return SchroederPath
        if self.name == "little_schroeder":
            return LittleSchroederPath
        if self.name == "t_path":
            return TPath
        return DyckPath

    def contains(self, path) -> bool:
        if not isinstance(path, self.path_type):
            return False
        if self.name == "bounded_ascent":
            return all(a.length <= self.m for a in ascents(path))
        if self.name in ("fibonacci", "fibonacci_free"):
            return _is_pyramid_concatenation(path, self.m)
        return True


def parse_path(word: str, family: Union[str, Family] = "dyck") -> AnyPath:
    fam = Family.parse(family)
    path = fam.path_type(word.strip())
    if not fam.contains(path):
        if fam.name in ("fibonacci", "fibonacci_free"):
            raise NotAFibonacciPath(f"{word!r} is not in {fam}")
        raise NotInFamily(f"{word!r} is not in {fam}")
    return path


def ascents(path: DyckPath) -> list[Ascent]:
    out = []
    steps = path.steps
    i = 0
    while i < len(steps):
        if steps[i] == "U":
            j = i
            while j < len(steps) and steps[j] == "U":
                j += 1
            out.append(Ascent(i, j - i))
            i = j
        else:
            i += 1
    return out


def descent_runs(path: DyckPath) -> list[int]:
    return [len(r) for r in re.findall("D+", path.steps)]


def _split_primary(steps: str) -> tuple[int, list[str]]:
    # steps = U^k D P_k D P_{k-1} ... D P_1; return k and the P_i words
    k = 0
    while k < len(steps) and steps[k] == "U":
        k += 1
    parts = []
    pos = k
    for _ in range(k):
        assert steps[pos] == "D"
        pos += 1
        start, h = pos, 0
        while pos < len(steps) and not (steps[pos] == "D" and h == 0):
            h += 1 if steps[pos] == "U" else -1
            pos += 1
        parts.append(steps[start:pos])
    return k, parts


def primary_decompose(path: DyckPath) -> tuple[int, list[DyckPath]]:
    """Split ``U^k D P_k D ... D P_1`` into ``k`` and ``[P_k, ..., P_1]``."""
    if not path:
        raise EmptyPath("the empty path has no base pyramid")
    k, parts = _split_primary(path.steps)
    return k, [DyckPath(p) for p in parts]


def primary_compose(k: int, parts: Sequence[DyckPath]) -> DyckPath:
    if len(parts) != k:
        raise ValueError(f"base pyramid of size {k} needs {k} appended paths, got {len(parts)}")
    return DyckPath("U" * k + "".join("D" + str(p) for p in parts))


@dataclass(frozen=True)
class PyramidTree:
    """Node of the complete decomposition: a pyramid with one slot per base step.

    Empty slots hold ``None``.
    """

    size: int
    children: tuple

    def __post_init__(self):
        if self.size < 1 or len(self.children) != self.size:
            raise ValueError(f"pyramid of size {self.size} needs exactly {self.size} child slots")

    def __str__(self):
        if all(c is None for c in self.children):
            return f"L{self.size}"
        inner = ",".join("e" if c is None else str(c) for c in self.children)
        return f"L{self.size}*[{inner}]"

    def nodes(self) -> Iterator["PyramidTree"]:
        """Pre-order walk; matches the order of the ascents in the path."""
        yield self
        for c in self.children:
            if c is not None:
                yield from c.nodes()


def complete_decompose(path: DyckPath) -> Optional[PyramidTree]:
    if not path:
        return None
    k, parts = primary_decompose(path)
    return PyramidTree(k, tuple(complete_decompose(p) for p in parts))


def recompose_complete(tree: Optional[PyramidTree]) -> DyckPath:
    if tree is None:
        return DyckPath("")
    return primary_compose(tree.size, [recompose_complete(c) for c in tree.children])


def _is_pyramid_concatenation(path: DyckPath, m: Optional[int] = None) -> bool:
    # ascents may only restart on the axis
    steps, h = path.steps, 0
    for i, c in enumerate(steps):
        if c == "U" and i > 0 and steps[i - 1] == "D" and h > 0:
            return False
        h += 1 if c == "U" else -1
    if m is not None:
        return all(a.length <= m for a in ascents(path))
    return True


def fibonacci_touch_bits(path: DyckPath) -> tuple[int, ...]:
    """Bits ``x_1..x_{k-1}``: ``x_i = 1`` iff the path touches the axis at ``x = 2i``."""
    if not path or not _is_pyramid_concatenation(path):
        raise NotAFibonacciPath(f"{path.steps!r} is not a nonempty concatenation of pyramids")
    h = path.heights()
    return tuple(int(h[2 * i] == 0) for i in range(1, path.semilength))


def fibonacci_from_bits(bits: Sequence[int]) -> DyckPath:
    """Inverse of :func:`fibonacci_touch_bits` (semilength ``len(bits) + 1``)."""
    runs, run = [], 1
    for b in bits:
        if b:
            runs.append(run)
            run = 1
        else:
            run += 1
    runs.append(run)
    return DyckPath("".join("U" * r + "D" * r for r in runs))


# -- exhaustive generation ---------------------------------------------------

def _dyck_words(n: int, m: Optional[int], pyramids_only: bool) -> Iterator[str]:
    buf: list[str] = []

    def rec(ups, downs, run):
        if downs == n:
            yield "".join(buf)
            return
        h = ups - downs
        # U < D in the output order
        if ups < n and (m is None or run < m) and not (pyramids_only and run == 0 and h > 0):
            buf.append("U")
            yield from rec(ups + 1, downs, run + 1)
            buf.pop()
        if h > 0:
            buf.append("D")
            yield from rec(ups, downs + 1, 0)
            buf.pop()

    yield from rec(0, 0, 0)


def _schroeder_words(n: int, little: bool) -> Iterator[str]:
    buf: list[str] = []
    span = 2 * n

    def rec(x, h):
        if x == span:
            if h == 0:
                yield "".join(buf)
            return
        if h + 1 <= span - x - 1:
            buf.append("U")
            yield from rec(x + 1, h + 1)
            buf.pop()
        if h > 0:
            buf.append("D")
            yield from rec(x + 1, h - 1)
            buf.pop()
        if x + 2 <= span and h <= span - x - 2 and not (little and h == 0):
            buf.append("L")
            yield from rec(x + 2, h)
            buf.pop()

    yield from rec(0, 0)


def _t_words(n: int) -> Iterator[str]:
    buf: list[str] = []
    span = 3 * n

    def rec(x, h):
        if x == span:
            if h == 0:
                yield "".join(buf)
            return
        if h + 2 <= span - x - 1:
            buf.append("H")
            yield from rec(x + 1, h + 2)
            buf.pop()
        if x + 2 <= span and h + 1 <= span - x - 2:
            buf.append("G")
            yield from rec(x + 2, h + 1)
            buf.pop()
        if h > 0:
            buf.append("D")
            yield from rec(x + 1, h - 1)
            buf.pop()

    yield from rec(0, 0)


def enumerate_family(n: int, family: Union[str, Family] = "dyck") -> Iterator[AnyPath]:
    """Every member of semilength ``n``, in lexicographic order (U<D<L, H<G<D)."""
    fam = Family.parse(family)
    if n < 0:
        raise ValueError("semilength must be nonnegative")
    if fam.name == "dyck":
        words = _dyck_words(n, None, False)
    elif fam.name == "bounded_ascent":
        words = _dyck_words(n, fam.m, False)
    elif fam.name == "fibonacci":
        words = _dyck_words(n, fam.m, True)
    elif fam.name == "fibonacci_free":
        words = _dyck_words(n, None, True)
    elif fam.name in ("schroeder", "little_schroeder"):
        words = _schroeder_words(n, fam.name == "little_schroeder")
    else:
        words = _t_words(n)
    cls = fam.path_type
    for w in words:
        yield cls(w)
