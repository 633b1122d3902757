"""Analytic spread, regularity, a-invariant, reduction number and poset data.

Everything hinges on the sequence index of one distinguished maximal chain,
built greedily in rounds by :func:`construct_A`.
"""

from __future__ import annotations

from dataclasses import asdict, dataclass, field
from typing import Any

from .chains import MaximalChain, chain_from_positions, chain_length, sequence_index, lift_count
from .errors import ShapeError
from .ladder import LadderShape, can_step, step, validate_shape
from .tableaux import multiplicity, skew_shape_from_ladder


@dataclass(frozen=True)
class Construction:
    chain: MaximalChain
    rounds: tuple[tuple[int, ...], ...]

    @property
    def positions(self) -> tuple[int, ...]:
        return self.chain.positions

    @property
    def si(self) -> int:
        return len(self.rounds)


def construct_A(shape: LadderShape) -> Construction:
    """Greedy round-by-round maximal chain.

    Each round collects every coordinate that can be bumped from the point
    reached at the start of the round, then bumps them in increasing order.
    """
    a = shape.bottom
    rounds = []
    while True:
        P = tuple(p for p in range(1, shape.n + 2) if can_step(shape, a, p))
        if not P:
            break
        for p in P:
            a = step(a, p)
        rounds.append(P)
    positions = tuple(p for rnd in rounds for p in rnd)
    chain = chain_from_positions(shape, positions)
    assert chain.points[-1] == shape.top and chain.length == chain_length(shape)
    assert sequence_index(positions) == len(rounds)
    return Construction(chain, tuple(rounds))


def analytic_spread(shape: LadderShape) -> tuple[int, int]:
    total = sum(shape.deltas)
    return 1 + total, shape.r + total


def si_A1(shape: LadderShape) -> int:
    return construct_A(shape.with_r(1)).si


def si_Ar(shape: LadderShape, debug: bool = False) -> int:
    """Sequence index of the distinguished chain at copy count r.

    Computed as max(r-1, si at r=1); ``debug`` also runs the construction
    at r and asserts agreement.
    """
    value = max(shape.r - 1, si_A1(shape))
    if debug:
        direct = construct_A(shape).si
        assert direct == value, (direct, value)
    return value


def regularity(shape: LadderShape) -> int:
    return analytic_spread(shape)[1] - 1 - si_Ar(shape)


def a_invariant(shape: LadderShape) -> int:
    return -1 - si_Ar(shape)


def reduction_number(shape: LadderShape) -> int:
    return regularity(shape)


def poset_stats(shape: LadderShape) -> tuple[int, int]:
    """Cardinality and rank of the join-irreducible poset (rank -1 when empty)."""
    return shape.r - 1 + sum(shape.deltas), si_Ar(shape) - 1


@dataclass(frozen=True)
class VUDecomposition:
    V: tuple[tuple[int, int], ...]
    U: tuple[tuple[int, int], ...]


def _blocks(indices: list[int]) -> tuple[tuple[int, int], ...]:
    out: list[list[int]] = []
    for i in indices:
        if out and out[-1][1] + 1 == i:
            out[-1][1] = i
        else:
            out.append([i, i])
    return tuple((a, b) for a, b in out)


def vu_decomposition(shape: LadderShape) -> VUDecomposition:
    eps = shape.epsilons
    n = shape.n
    V = [i for i in range(1, n) if eps[i - 1] >= 2] + [n]
    U = [i for i in range(1, n) if eps[i - 1] == 1]
    return VUDecomposition(_blocks(V), _blocks(U))


def si_closed_form(shape: LadderShape) -> tuple[int, str] | None:
    """si at r=1 from interval data alone, tagged with the branch used.

    Returns None when the extended formula's hypothesis fails. Rows with
    zero width never appear in a round, so they are left out of the maxima.
    """
    d = shape.deltas
    eps = shape.epsilons
    n = shape.n

    def top(values):
        return max(values, default=0)

    if all(e >= 2 for e in eps):
        return top(d[i] for i in range(n)), "uniform-eps>=2"
    if all(e == 1 for e in eps):
        return top(d[i - 1] + n - i for i in range(1, n + 1) if d[i - 1] > 0), "uniform-eps=1"
    vu = vu_decomposition(shape)
    u_block_at = {g: (g, h) for g, h in vu.U}
    for g, h in vu.V[:-1]:
        gs, hs = u_block_at[h + 1]
        e = eps[h - 1]
        if not (e >= hs - gs + 3 or d[h - 1] == e - 1):
            return None
    values = [d[i - 1] for g, h in vu.V for i in range(g, h + 1)]
    values += [d[t - 1] + hs - t + 1 for gs, hs in vu.U for t in range(gs, hs + 1) if d[t - 1] > 0]
    return top(values), "extended"


def generic_shape(n: int, m: int, r: int = 1) -> LadderShape:
    if not 1 <= n <= m:
        raise ShapeError(f"generic shape needs 1 <= n <= m, got n={n}, m={m}")
    return validate_shape([(i, m - n + i) for i in range(1, n + 1)], r)


def sparse_2xm_shape(m: int, epsilon: int, s: int, r: int = 1) -> LadderShape:
    """Two-row ladder with first row [1, eps+s] and second row [eps+1, m]."""
    if epsilon < 1 or s < 0 or m - epsilon - s <= 0:
        raise ShapeError(f"sparse 2 x m needs eps >= 1, s >= 0, m - eps - s > 0 (m={m}, eps={epsilon}, s={s})")
    return validate_shape([(1, epsilon + s), (epsilon + 1, m)], r)


@dataclass
class InvariantReport:
    intervals: list[list[int]]
    r: int
    deltas: list[int]
    epsilons: list[int]
    ell_L: int
    ell_M: int
    si_A1: int
    si_Ar: int
    reg: int
    a_inv: int
    red_num: int
    e_L: int
    e_M: int
    poset_card: int
    poset_rank: int
    skew: dict[str, list[int]]
    rounds: list[list[int]]
    si_closed_form: int | None = None
    si_closed_form_tag: str | None = None
    degenerate: bool = False
    name: str | None = None
    notes: list[str] = field(default_factory=list)

    _BIG = ("e_L", "e_M")

    def to_dict(self) -> dict[str, Any]:
        out = asdict(self)
        for k in self._BIG:
            out[k] = str(out[k])
        return out

    @classmethod
    def from_dict(cls, data: dict[str, Any]) -> "InvariantReport":
        data = dict(data)
        for k in cls._BIG:
            data[k] = int(data[k])
        return cls(**data)


def invariant_report(shape: LadderShape, name: str | None = None, debug: bool = False) -> InvariantReport:
    ell_L, ell_M = analytic_spread(shape)
    cons1 = construct_A(shape.with_r(1))
    sar = si_Ar(shape, debug=debug)
    reg = ell_M - 1 - sar
    card, rank = shape.r - 1 + sum(shape.deltas), sar - 1
    e_L, e_M = multiplicity(shape)
    skew = skew_shape_from_ladder(shape)
    closed = si_closed_form(shape)
    degenerate = ell_M == 1
    notes = []
    if degenerate:
        notes.append("single lattice point: si=0, reg=0, a=-1, poset rank -1 by convention")
    if closed is not None and closed[0] != cons1.si:
        notes.append(f"closed-form si {closed[0]} disagrees with construction {cons1.si}")
    rep = InvariantReport(
        intervals=shape.as_lists(),
        r=shape.r,
        deltas=list(shape.deltas),
        epsilons=list(shape.epsilons),
        ell_L=ell_L,
        ell_M=ell_M,
        si_A1=cons1.si,
        si_Ar=sar,
        reg=reg,
        a_inv=-1 - sar,
        red_num=reg,
        e_L=e_L,
        e_M=e_M,
        poset_card=card,
        poset_rank=rank,
        skew={"lambda": list(skew.lam), "mu": list(skew.mu)},
        rounds=[list(p) for p in construct_A(shape).rounds],
        si_closed_form=None if closed is None else closed[0],
        si_closed_form_tag=None if closed is None else closed[1],
        degenerate=degenerate,
        name=name,
        notes=notes,
    )
    check_report(rep)
    return rep


def check_report(rep: InvariantReport) -> None:
    """Assert the arithmetic identities tying the report fields together."""
    assert rep.ell_M == rep.ell_L + rep.r - 1
    assert rep.reg == rep.ell_M - 1 - rep.si_Ar
    assert rep.a_inv == rep.reg - rep.ell_M == -1 - rep.si_Ar
    assert rep.red_num == rep.reg
    assert rep.poset_card == rep.ell_M - 1
    assert rep.poset_rank == rep.si_Ar - 1
    assert rep.si_Ar == max(rep.r - 1, rep.si_A1)
    assert rep.e_M == lift_count(rep.ell_L, rep.r) * rep.e_L

