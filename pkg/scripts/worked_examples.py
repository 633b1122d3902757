"""Print the invariants of the standard worked shapes."""

import argparse
import json

from ladderfiber.invariants import construct_A, generic_shape, invariant_report, sparse_2xm_shape
from ladderfiber.ladder import validate_shape
from ladderfiber.tableaux import SkewShape, chain_to_tableau, enumerate_excited_diagrams, render, render_tableau

SHAPES = {
    "three-row": ([[1, 5], [3, 6], [4, 9]], 2),
    "six-row": ([[1, 7], [7, 12], [8, 13], [9, 14], [12, 17], [14, 18]], 1),
}


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--json", action="store_true", help="dump full reports as JSON")
    args = ap.parse_args()

    reports = {}
    for name, (ivs, r) in SHAPES.items():
        sh = validate_shape(ivs, r)
        rep = invariant_report(sh, name=name, debug=True)
        reports[name] = rep.to_dict()
        print(f"== {name} {ivs} r={r}")
        print(f"  rounds {construct_A(sh).rounds}")
        print(f"  l(M)={rep.ell_M} si={rep.si_Ar} reg={rep.reg} a={rep.a_inv} e_L={rep.e_L} e_M={rep.e_M}")
        print(f"  closed-form si {rep.si_closed_form} ({rep.si_closed_form_tag})")

    sh = validate_shape(SHAPES["three-row"][0])
    print("== tableau of the greedy chain, three-row shape, r=1")
    print(render_tableau(chain_to_tableau(construct_A(sh).chain, sh)))

    print("== reg of the six-row shape across r")
    six = validate_shape(SHAPES["six-row"][0])
    print("  " + " ".join(f"r={r}:{invariant_report(six.with_r(r)).reg}" for r in range(1, 12)))

    skew = SkewShape((4, 3, 3), (2, 1, 0))
    diagrams = enumerate_excited_diagrams(skew)
    print(f"== excited diagrams of {skew.lam}/{skew.mu}: {len(diagrams)}")
    for D in diagrams:
        print(render(skew, shade=frozenset(D.cells)))
        print()

    print("== generic n x m")
    for n, m in [(2, 3), (2, 4), (2, 5), (3, 5), (3, 6)]:
        rep = invariant_report(generic_shape(n, m))
        print(f"  ({n},{m}) dim={rep.ell_L} reg={rep.reg} a={rep.a_inv} e={rep.e_L}")

    print("== sparse 2 x m, m=6")
    for eps in range(1, 6):
        for s in range(0, 6 - eps):
            rep = invariant_report(sparse_2xm_shape(6, eps, s))
            print(f"  eps={eps} s={s} dim={rep.ell_L} reg={rep.reg} a={rep.a_inv}")

    if args.json:
        print(json.dumps(reports, indent=2, sort_keys=True))


if __name__ == "__main__":
    main()
