"""Maximal chains of L x [r] and their position tuples.

A maximal chain runs from the bottom point to the top point by unit steps;
the coordinate bumped at each step gives its position tuple. Maximal chains
are the maximal cliques of the comparability graph, so everything here is
also a statement about the Alexander dual of the Hibi initial ideal.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from itertools import combinations
from math import comb
from typing import Iterator, Sequence

from .errors import CapExceeded, InvalidStep, NotAChain, WrongMultiset
from .ladder import DEFAULT_CAP, LadderShape, Order, Point, can_step, enumerate_lattice, step, tau_compare


def runs(positions: Sequence[int]) -> list[tuple[int, ...]]:
    """Split into maximal strictly increasing blocks."""
    out: list[list[int]] = []
    for p in positions:
        if out and out[-1][-1] < p:
            out[-1].append(p)
        else:
            out.append([p])
    return [tuple(b) for b in out]


def sequence_index(positions: Sequence[int]) -> int:
    """Number of maximal strictly increasing runs; 0 for the empty tuple."""
    if not positions:
        return 0
    return 1 + sum(1 for a, b in zip(positions, positions[1:]) if a >= b)


@dataclass(frozen=True)
class MaximalChain:
    points: tuple[Point, ...]
    positions: tuple[int, ...]
    _members: frozenset = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        object.__setattr__(self, "_members", frozenset(self.points))

    @property
    def length(self) -> int:
        return len(self.points)

    @property
    def runs(self) -> list[tuple[int, ...]]:
        return runs(self.positions)

    @property
    def si(self) -> int:
        return sequence_index(self.positions)

    @property
    def members(self) -> frozenset:
        return self._members


def expected_multiset(shape: LadderShape) -> Counter:
    c = Counter({i + 1: d for i, d in enumerate(shape.deltas) if d})
    if shape.r > 1:
        c[shape.n + 1] = shape.r - 1
    return c


def chain_length(shape: LadderShape) -> int:
    return shape.r + sum(shape.deltas)


def position_tuple(shape: LadderShape, points: Sequence[Point]) -> tuple[int, ...]:
    """Recover the bumped coordinate at every step of ``points``."""
    if not points or tuple(points[0]) != shape.bottom or tuple(points[-1]) != shape.top:
        raise NotAChain("a maximal chain must start at the bottom point and end at the top point")
    out = []
    for i, (a, b) in enumerate(zip(points, points[1:]), start=1):
        diff = [y - x for x, y in zip(a, b)]
        if sorted(diff) != [0] * (len(diff) - 1) + [1]:
            raise NotAChain(f"step {i}: {tuple(b)} - {tuple(a)} is not a unit vector")
        out.append(diff.index(1) + 1)
    return tuple(out)


def chain_from_positions(shape: LadderShape, positions: Sequence[int]) -> MaximalChain:
    """Walk from the bottom point bumping ``positions`` in order.

    The multiset of entries is checked first, then every step.
    """
    P = tuple(positions)
    if Counter(P) != expected_multiset(shape):
        raise WrongMultiset(f"{P} is not a rearrangement of {sorted(expected_multiset(shape).elements())}")
    a = shape.bottom
    pts = [a]
    for i, p in enumerate(P, start=1):
        if not can_step(shape, a, p):
            raise InvalidStep(i, f"step {i}: cannot bump coordinate {p} of {a}")
        a = step(a, p)
        pts.append(a)
    return MaximalChain(tuple(pts), P)


def make_chain(shape: LadderShape, points: Sequence[Point]) -> MaximalChain:
    pts = tuple(tuple(p) for p in points)
    return chain_from_positions(shape, position_tuple(shape, pts))


def sigma_compare(A: MaximalChain, B: MaximalChain) -> Order:
    """Order on maximal chains induced by grevlex on their monomials.

    Scan from the tail; at the first differing index the chain holding the
    tau-larger point is larger.
    """
    for a, b in zip(reversed(A.points), reversed(B.points)):
        if a != b:
            return tau_compare(a, b)
    return Order.EQUAL


def sigma_key(chain: MaximalChain) -> tuple:
    """Sort key with ``sorted(..., key=sigma_key)`` giving sigma-descending order."""
    # tau-larger point = lexicographically smaller tuple
    return tuple(reversed(chain.points))


def iter_position_tuples(shape: LadderShape) -> Iterator[tuple[int, ...]]:
    """Depth-first over covers, trying positions 1..n+1 in order."""
    n1 = shape.n + 1
    top = shape.top
    path: list[int] = []
    a = shape.bottom
    stack: list[tuple[Point, int]] = [(a, 1)]
    while stack:
        a, p = stack[-1]
        if a == top:
            yield tuple(path)
            stack.pop()
            if path:
                path.pop()
            continue
        while p <= n1 and not can_step(shape, a, p):
            p += 1
        if p > n1:
            stack.pop()
            if path:
                path.pop()
            continue
        stack[-1] = (a, p + 1)
        path.append(p)
        stack.append((step(a, p), 1))


def iter_maximal_chains(shape: LadderShape) -> Iterator[MaximalChain]:
    for P in iter_position_tuples(shape):
        a = shape.bottom
        pts = [a]
        for p in P:
            a = step(a, p)
            pts.append(a)
        yield MaximalChain(tuple(pts), P)


def enumerate_maximal_chains(shape: LadderShape, cap: int = DEFAULT_CAP) -> list[MaximalChain]:
    out = []
    for ch in iter_maximal_chains(shape):
        if len(out) >= cap:
            raise CapExceeded(cap, len(out), "maximal chains")
        out.append(ch)
    return out


def count_maximal_chains(shape: LadderShape, cap: int = DEFAULT_CAP) -> int:
    """Chain count by dynamic programming over the lattice, no listing."""
    ways: dict[Point, int] = {}
    n1 = shape.n + 1
    for a in enumerate_lattice(shape, cap):
        if a == shape.bottom:
            ways[a] = 1
            continue
        total = 0
        for p in range(1, n1 + 1):
            if a[p - 1] > 1:
                prev = a[: p - 1] + (a[p - 1] - 1,) + a[p:]
                total += ways.get(prev, 0)
        ways[a] = total
    return ways[shape.top]


def lq_witnesses(chain: MaximalChain) -> list[int]:
    """1-based indices ``s`` in [2, l-1] whose point sits at an ascent."""
    P = chain.positions
    return [s for s in range(2, len(chain.points)) if P[s - 2] < P[s - 1]]


@dataclass
class LQReport:
    passed: bool
    chains: int
    pairs_checked: int
    counterexample: tuple | None = None
    message: str = ""


def verify_linear_quotients(shape: LadderShape, cap: int = 2000) -> LQReport:
    """Pairwise check that the sigma order gives linear quotients.

    For every pair A >_sigma B some C >_sigma B must differ from B in one
    point lying in B minus A; and the set of such single swaps for B must be
    exactly the points of B at LQ witnesses.
    """
    chains = enumerate_maximal_chains(shape, cap)
    chains.sort(key=sigma_key)
    for x, y in zip(chains, chains[1:]):
        if sigma_compare(x, y) != Order.GREATER:
            return LQReport(False, len(chains), 0, (x.positions, y.positions), "sigma is not a strict total order")
    pairs = 0
    for j, B in enumerate(chains):
        swaps = set()
        for C in chains[:j]:
            diff = B.members - C.members
            if len(diff) == 1:
                swaps |= diff
        witnesses = {B.points[s - 1] for s in lq_witnesses(B)}
        if witnesses != swaps:
            return LQReport(
                False, len(chains), pairs, (B.positions,),
                f"LQ points {sorted(witnesses)} != single swaps {sorted(swaps)}",
            )
        for A in chains[:j]:
            pairs += 1
            if not swaps & (B.members - A.members):
                return LQReport(False, len(chains), pairs, (A.positions, B.positions), "no single-swap chain C")
    return LQReport(True, len(chains), pairs)


def project_positions_to_r1(positions: Sequence[int], n: int) -> tuple[int, ...]:
    """Drop the copy-index moves (entries equal to n+1)."""
    return tuple(p for p in positions if p != n + 1)


def lift_positions(positions: Sequence[int], n: int, r: int) -> Iterator[tuple[int, ...]]:
    """Every way to insert r-1 copy moves into an r=1 position tuple."""
    base = tuple(positions)
    total = len(base) + r - 1
    for slots in combinations(range(total), r - 1):
        it = iter(base)
        chosen = set(slots)
        yield tuple(n + 1 if k in chosen else next(it) for k in range(total))


def lift_count(ell_L: int, r: int) -> int:
    return comb(ell_L + r - 2, r - 1)
