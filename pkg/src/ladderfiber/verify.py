"""Cross-checks of the closed formulas against brute-force enumeration."""

from __future__ import annotations

from dataclasses import dataclass

from .chains import (
    chain_from_positions,
    chain_length,
    count_maximal_chains,
    enumerate_maximal_chains,
    lift_count,
    lift_positions,
    lq_witnesses,
    position_tuple,
    project_positions_to_r1,
    verify_linear_quotients,
)
from .errors import NotAChain
from .invariants import construct_A, invariant_report, si_A1, si_closed_form
from .ladder import DEFAULT_CAP, LadderShape
from .tableaux import (
    chain_to_tableau,
    count_skew_syt,
    count_skew_syt_naruse,
    skew_shape_from_ladder,
    tableau_to_chain,
)


@dataclass
class Check:
    name: str
    passed: bool
    detail: str = ""

    def line(self) -> str:
        return f"{'PASS' if self.passed else 'FAIL'} {self.name}: {self.detail}"


def run_checks(shape: LadderShape, cap: int = DEFAULT_CAP, lq_cap: int = 2000) -> list[Check]:
    """Run every cross-check on ``shape``; raises CapExceeded if chains exceed ``cap``."""
    checks: list[Check] = []
    add = checks.append
    one = shape.with_r(1)
    ell = chain_length(shape)
    ell_L = 1 + sum(shape.deltas)

    chains_r = enumerate_maximal_chains(shape, cap)
    chains_1 = chains_r if shape.r == 1 else enumerate_maximal_chains(one, cap)
    rep = invariant_report(shape, debug=True)
    add(Check("report-identities", True, "arithmetic identities hold, si at r matches direct construction"))

    bad = [c.positions for c in chains_r if c.length != ell]
    add(Check("chain-length", not bad, f"all {len(chains_r)} chains have length {ell}" if not bad else f"{bad[0]}"))

    naruse = count_skew_syt_naruse(skew_shape_from_ladder(shape))
    syt = count_skew_syt(skew_shape_from_ladder(shape))
    add(Check(
        "triple-count", naruse == syt == len(chains_1) == rep.e_L,
        f"naruse={naruse} backtracking={syt} chains(r=1)={len(chains_1)}",
    ))

    dp = count_maximal_chains(shape, cap)
    want = lift_count(ell_L, shape.r) * len(chains_1)
    add(Check(
        "lift-count", len(chains_r) == dp == want == rep.e_M,
        f"chains(r={shape.r})={len(chains_r)} dp={dp} binomial*chains(r=1)={want}",
    ))

    projected = {project_positions_to_r1(c.positions, shape.n) for c in chains_r}
    base = {c.positions for c in chains_1}
    lifts_ok = projected == base
    if lifts_ok and shape.r > 1:
        per = lift_count(ell_L, shape.r)
        for P in base:
            lifts = list(lift_positions(P, shape.n, shape.r))
            lifts_ok = len(set(lifts)) == per
            try:
                for Q in lifts:
                    chain_from_positions(shape, Q)
            except NotAChain:
                lifts_ok = False
            if not lifts_ok:
                break
    add(Check("projection-lifting", lifts_ok, f"{len(base)} r=1 tuples, each lifted {lift_count(ell_L, shape.r)} ways"))

    sis = [c.si for c in chains_r]
    a_si = construct_A(shape).si
    add(Check("si-minimal", min(sis) == a_si == rep.si_Ar, f"min si={min(sis)} construction={a_si}"))

    lq_ok = all(len(lq_witnesses(c)) == ell - 1 - c.si for c in chains_r)
    max_lq = max(len(lq_witnesses(c)) for c in chains_r)
    add(Check("lq-count", lq_ok and max_lq == rep.reg, f"max LQ witnesses={max_lq} reg={rep.reg}"))

    rt = all(position_tuple(shape, c.points) == c.positions
             and chain_from_positions(shape, c.positions) == c for c in chains_r)
    rt_tab = True
    for c in chains_1:
        if tableau_to_chain(chain_to_tableau(c, one), one) != c:
            rt_tab = False
            break
    add(Check("round-trips", rt and rt_tab, "positions <-> chains, chains <-> tableaux"))

    if len(chains_r) <= lq_cap:
        lq = verify_linear_quotients(shape, cap=lq_cap)
        detail = f"{lq.pairs_checked} ordered pairs" + (" (vacuous: single chain)" if lq.chains == 1 else "")
        add(Check("linear-quotients", lq.passed, detail if lq.passed else f"{lq.message} at {lq.counterexample}"))
    else:
        add(Check("linear-quotients", True, f"skipped: {len(chains_r)} chains > lq-cap {lq_cap}"))

    closed = si_closed_form(shape)
    if closed is None:
        add(Check("closed-form-si", True, "no closed form applies"))
    else:
        s1 = si_A1(shape)
        add(Check("closed-form-si", closed[0] == s1, f"{closed[1]}: {closed[0]} vs construction {s1}"))
    return checks
