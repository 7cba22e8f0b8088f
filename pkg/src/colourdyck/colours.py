"""Colour systems and Dyck paths with coloured ascents."""

from __future__ import annotations

import itertools
import re
from dataclasses import dataclass
from functools import lru_cache
from math import comb, prod
from typing import ClassVar, Iterator, Optional, Sequence

from .errors import ColourMismatch, CountOnlySystem, InvalidBound, WrongColourSystem
from .paths import (
    DyckPath,
    Family,
    SchroederPath,
    _dyck_words,
    _split_primary,
    ascents,
    enumerate_family,
)


_UP_RUN = re.compile("U+")


@dataclass(frozen=True)
class ColourSystem:
    """A colour set for every ascent length.

    Structural systems can list their colours; ``custom`` only carries the
    counts ``a_0, a_1, ...``. Past the end of ``weights`` the last entry
    repeats, so ``(1,)`` is the all-ones sequence and a trailing ``0`` ends
    the support. ``a_0`` must be 1: the empty ascent has one colour.
    """

    kind: str
    m: Optional[int] = None
    weights: Optional[tuple] = None

    KINDS: ClassVar[tuple] = (
        "catalan", "bounded_ascent", "fibonacci", "fibonacci_free",
        "schroeder", "trivial", "custom",
    )

    def __post_init__(self):
        if self.kind not in self.KINDS:
            raise ValueError(f"unknown colour system {self.kind!r}")
        if self.kind in ("bounded_ascent", "fibonacci"):
            if self.m is None or self.m < 1:
                raise InvalidBound(f"{self.kind} needs m >= 1, got {self.m}")
        if self.kind == "custom":
            if not self.weights or any(w < 0 for w in self.weights):
                raise ValueError("custom systems need nonnegative integer weights")
            if self.weights[0] != 1:
                raise ValueError(f"custom weights must start with a_0 = 1, got {self.weights[0]}")
            object.__setattr__(self, "weights", tuple(int(w) for w in self.weights))

    @classmethod
    def catalan(cls):
        return cls("catalan")

    @classmethod
    def bounded_ascent(cls, m):
        return cls("bounded_ascent", m)

    @classmethod
    def fibonacci(cls, m=None):
        return cls("fibonacci_free") if m is None else cls("fibonacci", m)

    @classmethod
    def fibonacci_free(cls):
        return cls("fibonacci_free")

    @classmethod
    def schroeder(cls):
        return cls("schroeder")

    @classmethod
    def trivial(cls):
        return cls("trivial")

    @classmethod
    def custom(cls, weights):
        return cls("custom", weights=tuple(weights))

    def __str__(self):
        if self.kind == "custom":
            return "custom(" + ",".join(map(str, self.weights)) + ")"
        return self.kind if self.m is None else f"{self.kind}({self.m})"

    @property
    def structural(self) -> bool:
        return self.kind != "custom"

    @property
    def colour_family(self) -> Optional[Family]:
        if self.kind == "catalan":
            return Family("dyck")
        if self.kind in ("bounded_ascent", "fibonacci", "fibonacci_free", "schroeder"):
            return Family(self.kind, self.m)
        return None

    def contains(self, k: int, colour) -> bool:
        if self.kind == "custom":
            return False
        fam = Family("dyck") if self.kind == "trivial" else self.colour_family
        try:
            colour = fam.path_type(str(colour))
        except ValueError:
            return False
        if colour.semilength != k:
            return False
        if self.kind == "trivial":
            return colour == DyckPath("UD" * k)
        return fam.contains(colour)


def colours_of(system: ColourSystem, k: int) -> Iterator:
    if not system.structural:
        raise CountOnlySystem(f"{system} has counts only, no colour objects")
    if k < 0:
        raise ValueError("ascent length must be nonnegative")
    if system.kind == "trivial":
        yield DyckPath("UD" * k)
        return
    yield from enumerate_family(k, system.colour_family)


@lru_cache(maxsize=None)
def _motzkin_generalized(k: int, m: int) -> int:
    # Dyck paths of semilength k with every ascent <= m, by DP over (ups, downs, run)
    table = {(0, 0, 0): 1}
    for _ in range(2 * k):
        nxt: dict = {}
        for (u, d, r), c in table.items():
            if u < k and r < m:
                nxt[u + 1, d, r + 1] = nxt.get((u + 1, d, r + 1), 0) + c
            if d < u:
                nxt[u, d + 1, 0] = nxt.get((u, d + 1, 0), 0) + c
        table = nxt
    return sum(c for (u, d, _), c in table.items() if u == d == k)


@lru_cache(maxsize=None)
def _fibonacci_generalized(k: int, m: Optional[int]) -> int:
    # compositions of k into parts <= m
    if k == 0:
        return 1
    top = k if m is None else min(k, m)
    return sum(_fibonacci_generalized(k - j, m) for j in range(1, top + 1))


def _large_schroeder(k: int) -> int:
    return sum(comb(k + j, k - j) * comb(2 * j, j) // (j + 1) for j in range(k + 1))


def colour_count(system: ColourSystem, k: int) -> int:
    if k < 0:
        raise ValueError("ascent length must be nonnegative")
    kind = system.kind
    if kind == "catalan":
        return comb(2 * k, k) // (k + 1)
    if kind == "bounded_ascent":
        return _motzkin_generalized(k, system.m)
    if kind == "fibonacci":
        return _fibonacci_generalized(k, system.m)
    if kind == "fibonacci_free":
        return _fibonacci_generalized(k, None)
    if kind == "schroeder":
        return _large_schroeder(k)
    if kind == "trivial":
        return 1
    ws = system.weights
    return ws[k] if k < len(ws) else ws[-1]


def weights(system: ColourSystem, n_max: int) -> list[int]:
    """``a_0 .. a_{n_max}``."""
    return [colour_count(system, k) for k in range(n_max + 1)]


@dataclass(frozen=True)
class ColouredDyckPath:
    """A Dyck path with one colour per ascent, in ascent order.

    Text form is ``base;colour,colour,...`` (``;`` alone for the empty path).
    """

    base: DyckPath
    colours: tuple

    def __post_init__(self):
        if not isinstance(self.base, DyckPath):
            object.__setattr__(self, "base", DyckPath(self.base))
        object.__setattr__(self, "colours", tuple(self.colours))
        asc = ascents(self.base)
        if len(asc) != len(self.colours):
            raise ColourMismatch(
                f"{self.base} has {len(asc)} ascents but {len(self.colours)} colours were given")
        for a, c in zip(asc, self.colours):
            if c.semilength != a.length:
                raise ColourMismatch(f"colour {c} does not fit an ascent of length {a.length}")

    @property
    def semilength(self) -> int:
        return self.base.semilength

    def __str__(self):
        return f"{self.base};{','.join(str(c) for c in self.colours)}"

    def check_system(self, system: ColourSystem) -> None:
        for a, c in zip(ascents(self.base), self.colours):
            if not system.contains(a.length, c):
                raise WrongColourSystem(f"colour {c} of a {a.length}-ascent is not in {system}")

    @classmethod
    def pyramid(cls, colour) -> "ColouredDyckPath":
        k = colour.semilength
        if k == 0:
            return cls(DyckPath(""), ())
        return cls(DyckPath.pyramid(k), (colour,))


def _parse_colour(word: str, system: Optional[ColourSystem]):
    if system is not None and system.kind == "schroeder":
        return SchroederPath(word)
    return SchroederPath(word) if "L" in word else DyckPath(word)


def parse_coloured(text: str, system: Optional[ColourSystem] = None) -> ColouredDyckPath:
    text = text.strip()
    if ";" in text:
        base, _, rest = text.partition(";")
        words = rest.split(",") if rest else []
    else:
        base, words = text, []
    path = ColouredDyckPath(DyckPath(base), tuple(_parse_colour(w.strip(), system) for w in words))
    if system is not None:
        path.check_system(system)
    return path


def coloured_primary_decompose(path: ColouredDyckPath):
    """Return ``(k, base colour, [P_k, ..., P_1])`` with the colours split along."""
    if not path.base:
        raise ValueError("the empty path has no base pyramid")
    k, words = _split_primary(path.base.steps)
    rest = list(path.colours[1:])
    parts = []
    for w in words:
        p = DyckPath(w)
        r = len(ascents(p))
        parts.append(ColouredDyckPath(p, tuple(rest[:r])))
        rest = rest[r:]
    return k, path.colours[0], parts


def coloured_compose(colour, parts: Sequence[ColouredDyckPath]) -> ColouredDyckPath:
    k = colour.semilength
    if len(parts) != k:
        raise ValueError(f"base pyramid of size {k} needs {k} appended paths")
    base = DyckPath("U" * k + "".join("D" + str(p.base) for p in parts))
    colours = (colour,) + tuple(c for p in parts for c in p.colours)
    return ColouredDyckPath(base, colours)


def enumerate_coloured(n: int, system: ColourSystem) -> Iterator[ColouredDyckPath]:
    if not system.structural:
        raise CountOnlySystem(f"{system} has counts only, no colour objects")
    cache: dict = {}
    for base in enumerate_family(n, "dyck"):
        choices = []
        for a in ascents(base):
            if a.length not in cache:
                cache[a.length] = list(colours_of(system, a.length))
            choices.append(cache[a.length])
        for cols in itertools.product(*choices):
            yield ColouredDyckPath(base, cols)


def count_coloured_bruteforce(n: int, system: ColourSystem) -> int:
    """Sum over all Dyck paths of semilength ``n`` of the product of colour counts."""
    counts: dict = {}
    total = 0
    for word in _dyck_words(n, None, False):
        lengths = [len(run) for run in _UP_RUN.findall(word)]
        for k in lengths:
            if k not in counts:
                counts[k] = colour_count(system, k)
        total += prod(counts[k] for k in lengths)
    return total
