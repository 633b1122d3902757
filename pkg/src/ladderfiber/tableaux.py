"""Skew shapes attached to ladders, excited diagrams and standard tableaux.

Cells are ``(row, col)`` pairs, 1-based, row 1 on top. Rows are allowed to
be empty (``lambda_i == mu_i``), including rows of length zero.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import comb, factorial, prod
from typing import Iterator, Sequence

from .chains import MaximalChain, chain_from_positions
from .errors import CapExceeded, CellOutside, LadderError, NotStandard
from .ladder import DEFAULT_CAP, LadderShape

Cell = tuple[int, int]


@dataclass(frozen=True)
class SkewShape:
    lam: tuple[int, ...]
    mu: tuple[int, ...]

    def __post_init__(self):
        lam, mu = tuple(self.lam), tuple(self.mu)
        if len(mu) < len(lam):
            mu = mu + (0,) * (len(lam) - len(mu))
        object.__setattr__(self, "lam", lam)
        object.__setattr__(self, "mu", mu)
        if len(mu) > len(lam) and any(mu[len(lam):]):
            raise LadderError(f"mu={mu} is longer than lambda={lam}")
        mu = mu[: len(lam)]
        object.__setattr__(self, "mu", mu)
        if any(x < 0 for x in lam + mu):
            raise LadderError("parts must be nonnegative")
        if any(a < b for a, b in zip(lam, lam[1:])) or any(a < b for a, b in zip(mu, mu[1:])):
            raise LadderError(f"lambda={lam} and mu={mu} must be non-increasing")
        if any(b > a for a, b in zip(lam, mu)):
            raise LadderError(f"mu={mu} does not fit inside lambda={lam}")

    @property
    def K(self) -> int:
        return sum(self.lam) - sum(self.mu)

    @property
    def rows(self) -> int:
        return len(self.lam)

    def cells(self) -> list[Cell]:
        return [(i, j) for i, (a, b) in enumerate(zip(self.lam, self.mu), start=1) for j in range(b + 1, a + 1)]

    def mu_cells(self) -> frozenset[Cell]:
        return frozenset((i, j) for i, b in enumerate(self.mu, start=1) for j in range(1, b + 1))

    def in_lambda(self, cell: Cell) -> bool:
        i, j = cell
        return 1 <= i <= len(self.lam) and 1 <= j <= self.lam[i - 1]


def skew_shape_from_ladder(shape: LadderShape) -> SkewShape:
    n = shape.n
    d, eps = shape.deltas, shape.epsilons
    mu = [sum(e - 1 for e in eps[: n - i]) for i in range(1, n + 1)]
    lam = [mu[i - 1] + d[n - i] for i in range(1, n + 1)]
    skew = SkewShape(tuple(lam), tuple(mu))
    assert skew.K == sum(d)
    return skew


def hook_length(lam: Sequence[int], cell: Cell) -> int:
    i, j = cell
    if not (1 <= i <= len(lam) and 1 <= j <= lam[i - 1]):
        raise CellOutside(f"cell {cell} is not in the diagram of {tuple(lam)}")
    arm = lam[i - 1] - j
    leg = sum(1 for k in range(i, len(lam)) if lam[k] >= j)
    return arm + leg + 1


@dataclass(frozen=True, order=True)
class ExcitedDiagram:
    cells: tuple[Cell, ...]

    @classmethod
    def of(cls, cells) -> "ExcitedDiagram":
        return cls(tuple(sorted(cells)))


def excited_moves(skew: SkewShape, diagram: frozenset[Cell]) -> Iterator[frozenset[Cell]]:
    for i, j in sorted(diagram):
        nbrs = ((i + 1, j), (i, j + 1), (i + 1, j + 1))
        if all(skew.in_lambda(c) and c not in diagram for c in nbrs):
            yield (diagram - {(i, j)}) | {(i + 1, j + 1)}


def enumerate_excited_diagrams(skew: SkewShape) -> list[ExcitedDiagram]:
    """Closure of the mu diagram under excited moves, breadth first."""
    start = skew.mu_cells()
    seen = {start}
    queue = deque([start])
    while queue:
        D = queue.popleft()
        for E in excited_moves(skew, D):
            if E not in seen:
                seen.add(E)
                queue.append(E)
    return sorted(ExcitedDiagram.of(D) for D in seen)


def naruse_sum(skew: SkewShape) -> Fraction:
    lam = skew.lam
    hooks = {(i, j): hook_length(lam, (i, j)) for i, a in enumerate(lam, start=1) for j in range(1, a + 1)}
    total_hook = prod(hooks.values())
    acc = Fraction(0)
    for D in enumerate_excited_diagrams(skew):
        # product over the complement = all hooks / hooks on D
        acc += Fraction(prod(hooks[c] for c in D.cells), total_hook)
    return factorial(skew.K) * acc


def count_skew_syt_naruse(skew: SkewShape) -> int:
    value = naruse_sum(skew)
    assert value.denominator == 1 and value >= 0, value
    return value.numerator


def _addable_rows(skew: SkewShape, filled: tuple[int, ...]) -> Iterator[int]:
    lam, mu = skew.lam, skew.mu
    for i in range(len(lam)):
        col = mu[i] + filled[i] + 1
        if col > lam[i]:
            continue
        if i and col > mu[i - 1] + filled[i - 1]:
            continue
        yield i


def count_skew_syt(skew: SkewShape, cap: int = DEFAULT_CAP) -> int:
    """Backtracking count, memoised on how far each row has been filled.

    ``cap`` bounds the number of distinct fill states visited.
    """
    states = 0

    @lru_cache(maxsize=None)
    def completions(filled: tuple[int, ...]) -> int:
        nonlocal states
        states += 1
        if states > cap:
            raise CapExceeded(cap, states - 1, "fill states")
        if sum(filled) == skew.K:
            return 1
        total = 0
        for i in _addable_rows(skew, filled):
            nxt = filled[:i] + (filled[i] + 1,) + filled[i + 1:]
            total += completions(nxt)
        return total

    return completions((0,) * skew.rows)


@dataclass(frozen=True)
class SkewTableau:
    shape: SkewShape
    rows: tuple[tuple[int, ...], ...]

    @property
    def entries(self) -> dict[Cell, int]:
        return {
            (i, self.shape.mu[i - 1] + k): v
            for i, row in enumerate(self.rows, start=1)
            for k, v in enumerate(row, start=1)
        }

    def is_standard(self) -> bool:
        ent = self.entries
        if sorted(ent.values()) != list(range(1, self.shape.K + 1)):
            return False
        if sorted(ent) != sorted(self.shape.cells()):
            return False
        for (i, j), v in ent.items():
            if (i, j + 1) in ent and ent[(i, j + 1)] <= v:
                return False
            if (i + 1, j) in ent and ent[(i + 1, j)] <= v:
                return False
        return True


def iter_skew_syt(skew: SkewShape) -> Iterator[SkewTableau]:
    """Plain backtracking over all standard fillings, in a fixed order."""
    K = skew.K
    rows: list[list[int]] = [[] for _ in skew.lam]

    def rec(k: int) -> Iterator[SkewTableau]:
        if k > K:
            yield SkewTableau(skew, tuple(tuple(r) for r in rows))
            return
        filled = tuple(len(r) for r in rows)
        for i in _addable_rows(skew, filled):
            rows[i].append(k)
            yield from rec(k + 1)
            rows[i].pop()

    yield from rec(1)


def enumerate_skew_syt(skew: SkewShape, cap: int = DEFAULT_CAP) -> list[SkewTableau]:
    out = []
    for t in iter_skew_syt(skew):
        if len(out) >= cap:
            raise CapExceeded(cap, len(out), "tableaux")
        out.append(t)
    return out


def chain_to_tableau(chain: MaximalChain, shape: LadderShape) -> SkewTableau:
    """Row n-i+1 lists, left to right, the steps at which coordinate i moves."""
    if shape.r != 1:
        raise LadderError("the chain/tableau correspondence is for r = 1")
    n = shape.n
    skew = skew_shape_from_ladder(shape)
    rows = [[] for _ in range(n)]
    for k, p in enumerate(chain.positions, start=1):
        rows[n - p].append(k)
    t = SkewTableau(skew, tuple(tuple(r) for r in rows))
    if not t.is_standard():
        raise NotStandard(f"chain {chain.positions} produced a non-standard filling")
    return t


def tableau_to_chain(t: SkewTableau, shape: LadderShape) -> MaximalChain:
    if shape.r != 1:
        raise LadderError("the chain/tableau correspondence is for r = 1")
    if not t.is_standard():
        raise NotStandard("input tableau is not standard")
    n = shape.n
    q = [0] * t.shape.K
    for row_index, row in enumerate(t.rows, start=1):
        for k in row:
            q[k - 1] = n - row_index + 1
    return chain_from_positions(shape, q)


def multiplicity(shape: LadderShape) -> tuple[int, int]:
    """(e(F(L)), e(F(M))) via the excited-diagram hook sum and the lift binomial."""
    e_L = count_skew_syt_naruse(skew_shape_from_ladder(shape))
    ell_L = 1 + sum(shape.deltas)
    return e_L, comb(ell_L + shape.r - 2, shape.r - 1) * e_L


def render(skew: SkewShape, values: dict[Cell, object] | None = None, shade: frozenset[Cell] | None = None) -> str:
    """ASCII boxes: shaded cells as ``░``, cell values right-aligned."""
    values = values or {}
    shade = skew.mu_cells() if shade is None else shade
    width = max((len(str(v)) for v in values.values()), default=1)
    lines = []
    for i, a in enumerate(skew.lam, start=1):
        boxes = []
        for j in range(1, a + 1):
            if (i, j) in shade:
                boxes.append("[" + "░" * width + "]")
            else:
                boxes.append("[" + str(values.get((i, j), "")).rjust(width) + "]")
        lines.append("".join(boxes))
    return "\n".join(lines)


def render_hooks(lam: Sequence[int]) -> str:
    skew = SkewShape(tuple(lam), ())
    vals = {c: hook_length(skew.lam, c) for c in skew.cells()}
    return render(skew, vals, frozenset())


def render_tableau(t: SkewTableau) -> str:
    return render(t.shape, t.entries)
