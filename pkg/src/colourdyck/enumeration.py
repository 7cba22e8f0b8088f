"""Exact counting: truncated power series, the ``M = A(xM)`` solver and closed forms.

Binomials follow the combinatorial convention: ``binom(a, b) == 0`` whenever
``a < 0``, ``b < 0`` or ``b > a``.  With generalized (negative-top)
binomials the Fibonacci-coloured sum gives wrong values, e.g. 0 instead of
3 at ``n = m = 2``.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb
from typing import Sequence

DEFAULT_ORDER = 32


def binom(a: int, b: int) -> int:
    if a < 0 or b < 0 or b > a:
        return 0
    return comb(a, b)


def _exact_div(num: int, den: int) -> int:
    q, r = divmod(num, den)
    if r:
        raise ArithmeticError(f"{num} is not divisible by {den}")
    return q


@dataclass(frozen=True)
class Series:
    """Power series with integer coefficients, truncated after ``x^order``."""

    coeffs: tuple
    order: int

    def __post_init__(self):
        c = [int(v) for v in self.coeffs[: self.order + 1]]
        c += [0] * (self.order + 1 - len(c))
        object.__setattr__(self, "coeffs", tuple(c))

    @classmethod
    def of(cls, coeffs: Sequence[int], order: int = DEFAULT_ORDER) -> "Series":
        return cls(tuple(coeffs), order)

    def __getitem__(self, n):
        return self.coeffs[n]

    def __len__(self):
        return self.order + 1

    def __iter__(self):
        return iter(self.coeffs)

    def _lift(self, other):
        if isinstance(other, Series):
            return other
        return Series((other,), self.order)

    def __add__(self, other):
        other = self._lift(other)
        n = min(self.order, other.order)
        return Series(tuple(self[i] + other[i] for i in range(n + 1)), n)

    __radd__ = __add__

    def __neg__(self):
        return Series(tuple(-c for c in self), self.order)

    def __sub__(self, other):
        return self + (-self._lift(other))

    def __mul__(self, other):
        other = self._lift(other)
        n = min(self.order, other.order)
        out = [0] * (n + 1)
        for i, a in enumerate(self.coeffs[: n + 1]):
            if a:
                for j in range(n + 1 - i):
                    out[i + j] += a * other[j]
        return Series(tuple(out), n)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        result = Series((1,), self.order)
        for _ in range(k):
            result = result * self
        return result

    def shift(self, k: int = 1) -> "Series":
        """Multiply by ``x^k``."""
        return Series((0,) * k + self.coeffs, self.order)

    def compose(self, inner: "Series") -> "Series":
        """``self(inner)``; requires ``inner[0] == 0``."""
        if inner[0] != 0:
            raise ValueError("composition needs an inner series without constant term")
        n = min(self.order, inner.order)
        result = Series((0,), n)
        for a in reversed(self.coeffs[: n + 1]):
            result = result * inner + a
        return result


def solve_master(weights: Sequence[int], order: int = DEFAULT_ORDER) -> Series:
    """Solve ``M = A(xM)`` coefficient by coefficient, where ``A = sum a_k x^k``.

    ``c_n`` only needs ``a_0..a_n`` and ``c_0..c_{n-1}``: ``x^k M^k``
    contributes ``[x^(n-k)] M^k``, which for ``k >= 1`` involves lower
    coefficients only.
    """
    a = list(weights[: order + 1]) + [0] * max(0, order + 1 - len(weights))
    c: list[int] = []
    # memo[k, j] = [x^j] M^k; depends on c_0..c_j only, so entries never go stale
    memo: dict = {}

    def power(k, j):
        if k == 0:
            return 1 if j == 0 else 0
        if (k, j) not in memo:
            memo[k, j] = sum(c[i] * power(k - 1, j - i) for i in range(j + 1))
        return memo[k, j]

    for n in range(order + 1):
        total = a[0] if n == 0 else 0
        for k in range(1, n + 1):
            if a[k]:
                total += a[k] * power(k, n - k)
        c.append(total)
    return Series(tuple(c), order)


def count_catalan_coloured(n: int) -> int:
    """Dyck paths of semilength ``n`` with k-ascents coloured by Dyck paths of semilength k."""
    return _exact_div(binom(3 * n, n), 2 * n + 1)


def count_bounded(n: int, m: int) -> int:
    """Coloured count when colours are Dyck paths with every ascent at most ``m``.

    The alternating sum runs over every ``p >= 0`` with ``n - m*p >= 1``.
    """
    if m < 1:
        raise ValueError("m must be >= 1")
    if n == 0:
        return 1
    total, p = 0, 0
    while n - m * p >= 1:
        r = n - m * p
        term = _exact_div(binom(r, p) * binom(3 * n - m * p - p, r - 1), r)
        total += -term if p % 2 else term
        p += 1
    return total


def count_fibonacci(n: int, m: int) -> int:
    """Coloured count when colours are concatenations of pyramids of size at most ``m``."""
    if m < 1:
        raise ValueError("m must be >= 1")
    if n == 0:
        return 1
    total = 0
    for ell in range(n):
        inner = sum((-1) ** i * binom(n - 1 - m * i, ell) * binom(ell + 1, i)
                    for i in range(ell + 2))
        total += _exact_div(binom(n + ell + 1, ell) * inner, ell + 1)
    return total


def count_little_schroeder(n: int) -> int:
    if n == 0:
        return 1
    return _exact_div(sum(binom(n, i) * binom(n, i + 1) * 2**i for i in range(n)), n)


def count_schroeder_coloured(n: int) -> int:
    """Dyck paths coloured by Schröder paths; equals the number of T-paths to ``(3n, 0)``."""
    if n == 0:
        return 1
    return _exact_div(
        sum(binom(2 * n, k) * binom(n, k + 1) * 2 ** (k + 1) for k in range(n)), n)


def catalan(n: int) -> int:
    return _exact_div(binom(2 * n, n), n + 1)


def large_schroeder(n: int) -> int:
    return sum(catalan(j) * binom(n + j, n - j) for j in range(n + 1))
