"""Random sweep comparing the closed-form si against the greedy construction.

Also tallies which closed-form branch applied and, for shapes small enough,
runs the full cross-check suite.
"""

import argparse
import random
from collections import Counter

from ladderfiber.chains import count_maximal_chains
from ladderfiber.invariants import construct_A, si_A1, si_closed_form
from ladderfiber.ladder import random_shape
from ladderfiber.verify import run_checks


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--count", type=int, default=2000)
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--max-rows", type=int, default=6)
    ap.add_argument("--max-delta", type=int, default=24)
    ap.add_argument("--max-r", type=int, default=6)
    ap.add_argument("--check-chains", type=int, default=300,
                    help="run the full cross-check suite when the chain count is at most this")
    args = ap.parse_args()

    rng = random.Random(args.seed)
    tags = Counter()
    mismatches = []
    checked = failed = 0
    for _ in range(args.count):
        sh = random_shape(rng, args.max_rows, args.max_delta, rng.randint(1, args.max_r))
        s1 = si_A1(sh)
        closed = si_closed_form(sh)
        tags[closed[1] if closed else "none"] += 1
        if closed and closed[0] != s1:
            mismatches.append((sh.intervals, closed, s1))
        assert construct_A(sh).si == max(sh.r - 1, s1)
        if count_maximal_chains(sh) <= args.check_chains:
            checked += 1
            if not all(c.passed for c in run_checks(sh, lq_cap=args.check_chains)):
                failed += 1

    print(f"shapes: {args.count}")
    for tag, k in sorted(tags.items()):
        print(f"  {tag}: {k}")
    print(f"closed-form mismatches: {len(mismatches)}")
    for m in mismatches[:10]:
        print(f"  {m}")
    print(f"full cross-checks: {checked} run, {failed} failed")


if __name__ == "__main__":
    main()
