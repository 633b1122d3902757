"""Ladder shapes and the distributive lattice of maximal-minor column tuples.

A lattice point is a plain tuple ``(c_1, ..., c_n, copy)`` of 1-based
integers: the column tuple of a nonzero maximal minor followed by the copy
index in ``[r]``. The lattice order is componentwise.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, replace
from enum import IntEnum
from typing import Iterator, Sequence

from .errors import (
    BoundViolation,
    CapExceeded,
    Degenerate,
    EmptyInterval,
    GapViolation,
    ShapeError,
    StrictnessViolation,
)

Point = tuple[int, ...]

DEFAULT_CAP = 1_000_000


class Order(IntEnum):
    LESS = -1
    EQUAL = 0
    GREATER = 1


@dataclass(frozen=True)
class LadderShape:
    """Validated row intervals ``[u_i, v_i]`` plus the copy count ``r``.

    Build instances through :func:`validate_shape`; the constructor itself
    does not check anything.
    """

    intervals: tuple[tuple[int, int], ...]
    r: int = 1

    @property
    def n(self) -> int:
        return len(self.intervals)

    @property
    def m(self) -> int:
        return self.intervals[-1][1]

    @property
    def u(self) -> tuple[int, ...]:
        return tuple(a for a, _ in self.intervals)

    @property
    def v(self) -> tuple[int, ...]:
        return tuple(b for _, b in self.intervals)

    @property
    def deltas(self) -> tuple[int, ...]:
        return tuple(b - a for a, b in self.intervals)

    @property
    def epsilons(self) -> tuple[int, ...]:
        u = self.u
        return tuple(u[j + 1] - u[j] for j in range(self.n - 1))

    @property
    def bottom(self) -> Point:
        """The global minimum (u_1, ..., u_n, 1)."""
        return self.u + (1,)

    @property
    def top(self) -> Point:
        """The global maximum (v_1, ..., v_n, r)."""
        return self.v + (self.r,)

    def with_r(self, r: int) -> "LadderShape":
        if r < 1:
            raise ShapeError(f"copy count must be >= 1, got {r}")
        return replace(self, r=r)

    def as_lists(self) -> list[list[int]]:
        return [list(iv) for iv in self.intervals]


def validate_shape(intervals: Sequence[Sequence[int]], r: int = 1) -> LadderShape:
    """Check the strict staircase conditions and return a :class:`LadderShape`."""
    ivs = [tuple(int(x) for x in iv) for iv in intervals]
    if not ivs:
        raise ShapeError("a ladder needs at least one row")
    if any(len(iv) != 2 for iv in ivs):
        raise ShapeError("every interval must be a pair [u, v]")
    if isinstance(r, bool) or not isinstance(r, int) or r < 1:
        raise ShapeError(f"copy count must be a positive integer, got {r!r}")
    if ivs[0][0] != 1:
        raise BoundViolation(f"u_1 must be 1, got {ivs[0][0]}")
    for i, (a, b) in enumerate(ivs, start=1):
        if a > b:
            raise EmptyInterval(f"row {i}: u_{i}={a} > v_{i}={b}")
    for i in range(1, len(ivs)):
        (a0, b0), (a1, b1) = ivs[i - 1], ivs[i]
        if not a0 < a1:
            raise StrictnessViolation(f"u not strictly increasing at row {i + 1}: {a0} >= {a1}")
        if not b0 < b1:
            raise StrictnessViolation(f"v not strictly increasing at row {i + 1}: {b0} >= {b1}")
        if a1 > b0 + 1:
            raise GapViolation(f"row {i + 1}: u_{i + 1}={a1} > v_{i}+1={b0 + 1} (disconnected ladder)")
    return LadderShape(tuple(ivs), r)  # type: ignore[arg-type]


def _count_column_tuples(intervals: Sequence[tuple[int, int]]) -> int:
    # strictly increasing tuples c_i in [u_i, v_i]; DP over the last column used
    ways = {c: 1 for c in range(intervals[0][0], intervals[0][1] + 1)}
    for a, b in intervals[1:]:
        nxt = {}
        for c in range(a, b + 1):
            nxt[c] = sum(w for prev, w in ways.items() if prev < c)
        ways = nxt
    return sum(ways.values())


def normalize_shape(intervals: Sequence[Sequence[int]]) -> list[list[int]]:
    """Tighten weakly monotone intervals to the strict staircase form.

    The u-rule runs left to right, then the v-rule right to left. Neither
    changes the set of strictly increasing column tuples; that is asserted by
    containment of the boxes plus equal counts.
    """
    ivs = [[int(a), int(b)] for a, b in intervals]
    if not ivs:
        raise ShapeError("a ladder needs at least one row")
    n = len(ivs)
    for i in range(1, n):
        if ivs[i - 1][0] >= ivs[i][0]:
            ivs[i][0] = ivs[i - 1][0] + 1
    for i in range(n - 1, 0, -1):
        if ivs[i - 1][1] >= ivs[i][1]:
            ivs[i - 1][1] = ivs[i][1] - 1
    for i, (a, b) in enumerate(ivs, start=1):
        if a > b:
            raise Degenerate(f"row {i} becomes empty after normalization ([{a}, {b}])")
    for i in range(1, n):
        if ivs[i][0] > ivs[i - 1][1] + 1:
            raise GapViolation(f"row {i + 1}: u_{i + 1}={ivs[i][0]} > v_{i}+1={ivs[i - 1][1] + 1}")
    orig = [tuple(iv) for iv in intervals]
    assert all(o[0] <= a and b <= o[1] for o, (a, b) in zip(orig, ivs))
    assert _count_column_tuples(orig) == _count_column_tuples([tuple(iv) for iv in ivs])
    return ivs


def is_lattice_point(shape: LadderShape, a: Sequence[int]) -> bool:
    n = shape.n
    if len(a) != n + 1:
        return False
    for i, (lo, hi) in enumerate(shape.intervals):
        if not lo <= a[i] <= hi:
            return False
        if i and a[i - 1] >= a[i]:
            return False
    return 1 <= a[n] <= shape.r


def meet(a: Point, b: Point) -> Point:
    return tuple(min(x, y) for x, y in zip(a, b))


def join(a: Point, b: Point) -> Point:
    return tuple(max(x, y) for x, y in zip(a, b))


def leq(a: Point, b: Point) -> bool:
    """Componentwise lattice order."""
    return all(x <= y for x, y in zip(a, b))


def tau_compare(a: Point, b: Point) -> Order:
    """``a >_tau b`` iff the first nonzero entry of ``a - b`` is negative."""
    for x, y in zip(a, b):
        if x != y:
            return Order.GREATER if x < y else Order.LESS
    return Order.EQUAL


def can_step(shape: LadderShape, a: Point, p: int) -> bool:
    """Whether ``a + e_p`` stays in the lattice (``p`` is 1-based)."""
    n = shape.n
    if p == n + 1:
        return a[n] < shape.r
    if p == n:
        return a[n - 1] < shape.intervals[n - 1][1]
    return a[p] - a[p - 1] > 1 and a[p - 1] < shape.intervals[p - 1][1]


def step(a: Point, p: int) -> Point:
    return a[: p - 1] + (a[p - 1] + 1,) + a[p:]


def covers(shape: LadderShape, a: Point) -> list[Point]:
    return [step(a, p) for p in range(1, shape.n + 2) if can_step(shape, a, p)]


def iter_column_tuples(shape: LadderShape) -> Iterator[tuple[int, ...]]:
    """Lexicographically increasing strictly increasing column tuples."""
    ivs = shape.intervals
    n = shape.n

    def rec(i: int, prefix: tuple[int, ...]) -> Iterator[tuple[int, ...]]:
        if i == n:
            yield prefix
            return
        lo, hi = ivs[i]
        if prefix:
            lo = max(lo, prefix[-1] + 1)
        for c in range(lo, hi + 1):
            yield from rec(i + 1, prefix + (c,))

    yield from rec(0, ())


def enumerate_lattice(shape: LadderShape, cap: int = DEFAULT_CAP) -> list[Point]:
    """All points of L x [r] in tau-descending order (lexicographically ascending)."""
    out: list[Point] = []
    for cols in iter_column_tuples(shape):
        for k in range(1, shape.r + 1):
            if len(out) >= cap:
                raise CapExceeded(cap, len(out), "lattice points")
            out.append(cols + (k,))
    return out


def lattice_size(shape: LadderShape) -> int:
    return _count_column_tuples(shape.intervals) * shape.r


def random_shape(rng: random.Random, max_rows: int = 4, max_total_delta: int = 10, r: int = 1) -> LadderShape:
    """Draw a valid ladder shape with ``sum(deltas) <= max_total_delta``."""
    while True:
        n = rng.randint(1, max_rows)
        budget = max_total_delta
        ivs = []
        u = 1
        for i in range(n):
            if i:
                u = rng.randint(ivs[-1][0] + 1, ivs[-1][1] + 1)
                lo_v = max(ivs[-1][1] + 1, u)
            else:
                lo_v = 1
            hi_v = u + budget
            if lo_v > hi_v:
                break
            v = rng.randint(lo_v, min(hi_v, lo_v + 4))
            budget -= v - u
            ivs.append((u, v))
        else:
            return validate_shape(ivs, r)
