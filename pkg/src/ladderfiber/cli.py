"""Command-line front end.

Exit codes: 0 ok, 1 verification failure, 2 unreadable spec, 3 invalid
shape, 4 enumeration cap exceeded.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass
from pathlib import Path

from .chains import iter_maximal_chains
from .errors import CapExceeded, LadderError
from .invariants import construct_A, invariant_report
from .ladder import DEFAULT_CAP, LadderShape, normalize_shape, validate_shape
from .tableaux import (
    SkewShape,
    chain_to_tableau,
    count_skew_syt,
    enumerate_excited_diagrams,
    iter_skew_syt,
    render,
    render_hooks,
    render_tableau,
    skew_shape_from_ladder,
)
from .verify import run_checks

EXIT_OK, EXIT_FAIL, EXIT_PARSE, EXIT_SHAPE, EXIT_CAP = 0, 1, 2, 3, 4


class SpecParseError(Exception):
    pass


@dataclass
class Spec:
    shape: LadderShape | None = None
    skew: SkewShape | None = None
    name: str | None = None


def _int_list(value, what: str) -> list[int]:
    if not isinstance(value, list) or not all(isinstance(x, int) and not isinstance(x, bool) for x in value):
        raise SpecParseError(f"{what} must be a list of integers")
    return value


def load_spec(path: str, normalize: bool = False) -> Spec:
    """Parse a spec file; SpecParseError for bad syntax, LadderError for bad shapes."""
    try:
        text = sys.stdin.read() if path == "-" else Path(path).read_text(encoding="utf-8")
        data = json.loads(text)
    except (OSError, UnicodeDecodeError, json.JSONDecodeError) as exc:
        raise SpecParseError(f"cannot read spec {path}: {exc}") from exc
    if not isinstance(data, dict):
        raise SpecParseError("spec must be a single object")
    name = data.get("name")
    if name is not None and not isinstance(name, str):
        raise SpecParseError("name must be a string")
    if "lambda" in data or "mu" in data:
        if "intervals" in data:
            raise SpecParseError("give either intervals or lambda/mu, not both")
        lam = _int_list(data.get("lambda"), "lambda")
        mu = _int_list(data.get("mu", []), "mu")
        return Spec(skew=SkewShape(tuple(lam), tuple(mu)), name=name)
    ivs = data.get("intervals")
    if not isinstance(ivs, list) or not ivs:
        raise SpecParseError("intervals must be a nonempty list of [u, v] pairs")
    for iv in ivs:
        _int_list(iv, "each interval")
        if len(iv) != 2:
            raise SpecParseError(f"interval {iv} is not a pair")
    r = data.get("r", 1)
    if not isinstance(r, int) or isinstance(r, bool):
        raise SpecParseError("r must be an integer")
    if normalize:
        ivs = normalize_shape(ivs)
    return Spec(shape=validate_shape(ivs, r), name=name)


def _need_ladder(spec: Spec, command: str) -> LadderShape:
    if spec.shape is None:
        raise SpecParseError(f"{command} needs a ladder spec with intervals")
    return spec.shape


def _skew_of(spec: Spec) -> SkewShape:
    return spec.skew if spec.skew is not None else skew_shape_from_ladder(spec.shape)


def _fmt_point(p) -> str:
    return "(" + ",".join(map(str, p)) + ")"


def cmd_invariants(spec: Spec, args) -> int:
    shape = _need_ladder(spec, "invariants")
    rep = invariant_report(shape, name=spec.name)
    print(json.dumps(rep.to_dict(), indent=2, sort_keys=True, ensure_ascii=False))
    return EXIT_OK


def cmd_construct(spec: Spec, args) -> int:
    shape = _need_ladder(spec, "construct")
    cons = construct_A(shape)
    for p in cons.chain.points:
        print(_fmt_point(p))
    print("rounds: " + " ".join("{" + ",".join(map(str, rnd)) + "}" for rnd in cons.rounds))
    print(f"si: {cons.si}")
    return EXIT_OK


def cmd_enumerate(spec: Spec, args) -> int:
    cap = args.cap
    count = 0
    try:
        if args.target == "chains":
            shape = _need_ladder(spec, "enumerate chains")
            for ch in iter_maximal_chains(shape):
                if count >= cap:
                    raise CapExceeded(cap, count, "maximal chains")
                count += 1
                if args.list:
                    print(_fmt_point(ch.positions))
        elif args.target == "tableaux":
            skew = _skew_of(spec)
            if args.list:
                for t in iter_skew_syt(skew):
                    if count >= cap:
                        raise CapExceeded(cap, count, "tableaux")
                    count += 1
                    print(" / ".join(" ".join(map(str, row)) for row in t.rows))
            else:
                count = count_skew_syt(skew, cap)
        else:
            diagrams = enumerate_excited_diagrams(_skew_of(spec))
            count = len(diagrams)
            if count > cap:
                raise CapExceeded(cap, count, "excited diagrams")
            if args.list:
                for D in diagrams:
                    print("{" + ",".join(_fmt_point(c) for c in D.cells) + "}")
    except CapExceeded as exc:
        print(f"cap exceeded: {exc}", file=sys.stderr)
        print(f"count so far: {exc.count}", file=sys.stderr)
        return EXIT_CAP
    print(f"count: {count}")
    return EXIT_OK


def cmd_verify(spec: Spec, args) -> int:
    shape = _need_ladder(spec, "verify")
    try:
        checks = run_checks(shape, cap=args.cap, lq_cap=args.lq_cap)
    except CapExceeded as exc:
        print(f"cap exceeded: {exc}", file=sys.stderr)
        return EXIT_CAP
    for c in checks:
        print(c.line())
    failed = [c for c in checks if not c.passed]
    if failed:
        print(f"verify: FAIL ({failed[0].name}: {failed[0].detail})")
        return EXIT_FAIL
    print(f"verify: PASS ({len(checks)} checks)")
    return EXIT_OK


def cmd_render(spec: Spec, args) -> int:
    skew = _skew_of(spec)
    if args.target == "tableau-of-A":
        shape = _need_ladder(spec, "render tableau-of-A").with_r(1)
        if skew.K == 0:
            print("empty diagram (no cells)")
            return EXIT_OK
        print(render_tableau(chain_to_tableau(construct_A(shape).chain, shape)))
        return EXIT_OK
    if sum(skew.lam) == 0:
        print("empty diagram (no cells)")
        return EXIT_OK
    print(render_hooks(skew.lam) if args.target == "hooks" else render(skew))
    return EXIT_OK


COMMANDS = {
    "invariants": cmd_invariants,
    "construct": cmd_construct,
    "enumerate": cmd_enumerate,
    "verify": cmd_verify,
    "render": cmd_render,
}


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("spec", help="spec file (JSON object), or - for stdin")
    common.add_argument("--cap", type=int, default=DEFAULT_CAP, help="enumeration cap (default %(default)s)")
    common.add_argument("--normalize", action="store_true", help="tighten weakly monotone intervals first")
    common.add_argument("--list", action="store_true", help="print enumerated items")

    parser = argparse.ArgumentParser(prog="ladderfiber", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)
    sub.add_parser("invariants", parents=[common], help="print the invariant report")
    sub.add_parser("construct", parents=[common], help="print the greedy maximal chain and its rounds")
    p = sub.add_parser("enumerate", parents=[common], help="count chains, tableaux or excited diagrams")
    p.add_argument("target", choices=["chains", "tableaux", "excited"])
    p = sub.add_parser("verify", parents=[common], help="cross-check formulas against enumeration")
    p.add_argument("--lq-cap", type=int, default=2000, help="max chains for the pairwise linear-quotient check")
    p = sub.add_parser("render", parents=[common], help="ASCII diagrams")
    p.add_argument("target", choices=["shape", "tableau-of-A", "hooks"])
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        spec = load_spec(args.spec, normalize=args.normalize)
        return COMMANDS[args.command](spec, args)
    except SpecParseError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except LadderError as exc:
        print(f"invalid shape ({type(exc).__name__}): {exc}", file=sys.stderr)
        return EXIT_SHAPE


if __name__ == "__main__":
    sys.exit(main())
