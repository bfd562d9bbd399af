"""Command-line front end.

Exit codes: 0 success, 1 a verified property failed, 2 unreadable or invalid
poset/vector input, 3 incompatible or unordered ``u``/``v``, 4 an internal
invariant was violated, 5 a size cap was hit.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .algorithm import m2_closed_form, parse_strategy, run_algorithm, standard_strategies
from .construction import build_chopped, enumerate_suborders
from .dot import chopped_to_dot
from .errors import ChoppedError, IncompatibleVectorError, InvariantViolation, SizeLimitError
from .formula import s1960, split_set
from .oracle import verify_representation, verify_theorems
from .order import load_poset
from .vectors import parse_vector

EXIT_FAILED, EXIT_INPUT, EXIT_VECTORS, EXIT_INVARIANT, EXIT_SIZE = 1, 2, 3, 4, 5


def _load(path):
    try:
        return load_poset(path)
    except OSError as exc:
        raise ChoppedError(f"cannot read {path}: {exc.strerror}") from exc


def cmd_build(args) -> int:
    P = _load(args.poset)
    M = build_chopped(P)
    census = " ".join(f"{k}:{len(enumerate_suborders(P, k))}" for k in "VCH")
    print(f"blocks: {len(M.maximal_elements())}, elements: {len(M)}, "
          f"atoms: {len(M.atoms())}, {census}")
    if args.dot:
        Path(args.dot).write_text(chopped_to_dot(M))
    return 0


def cmd_seccomp(args) -> int:
    P = _load(args.poset)
    M = build_chopped(P)
    u, v = parse_vector(M, args.u), parse_vector(M, args.v)
    strategy = parse_strategy(args.strategy)
    run = run_algorithm(M, u, v, strategy, unrestricted_c=args.unrestricted_c)
    formula = s1960(M, u, v)
    print(f"m: {run.m}")
    print(f"m2: {m2_closed_form(M, u, v)}")
    print(f"s: {run.s}")
    print(f"s1960: {formula}")
    print(f"split: {','.join(sorted(a.name for a in split_set(M, u, v).atoms)) or '-'}")
    print(f"strategy: {strategy}")
    print(f"cuts: {len(run.trace)}")
    print(f"verdict: {'MATCH' if run.s == formula else 'MISMATCH'}")
    if args.trace:
        sys.stdout.write(run.trace_jsonl())
    if args.dot:
        Path(args.dot).write_text(chopped_to_dot(M, run.trace))
    return 0


def cmd_verify(args) -> int:
    P = _load(args.poset)
    report = verify_theorems(P, args.strategies, args.seed,
                             explore_unrestricted=args.unrestricted_c)
    rep = verify_representation(P)
    label = "sampled" if report.sampled else "all"
    print(f"ideals: {report.ideals}, pairs: {report.pairs_checked}/{report.pairs_total} ({label}), "
          f"strategies: {', '.join(report.strategies)}")
    for name, tally in report.checks.items():
        print(f"{name}: {tally.status} ({tally.passed} pass, {tally.failed} fail)")
    print(f"representation: {'pass' if rep.ok else 'fail'} "
          f"(|Con Id M| = {rep.congruence_lattice_size}, |downsets| = {rep.downset_lattice_size})")
    if args.unrestricted_c:
        st = report.stats
        print(f"unrestricted C-cuts (experimental): {st['unrestricted_c_nonconfluent']} of "
              f"{st['unrestricted_c_runs']} pairs non-confluent")
    ok = report.ok and rep.ok
    if args.json:
        doc = {"ok": ok, "theorems": report.to_json(), "representation": rep.to_json()}
        Path(args.json).write_text(json.dumps(doc, indent=2, sort_keys=True) + "\n")
    return 0 if ok else EXIT_FAILED


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="chopped", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("build", help="build M and print a census")
    p.add_argument("poset")
    p.add_argument("--dot", metavar="OUT")
    p.set_defaults(func=cmd_build)

    p = sub.add_parser("seccomp", help="run the cut algorithm for one pair u <= v")
    p.add_argument("poset")
    p.add_argument("--u", required=True, help='vector literal, e.g. "p>q=q2,q>r=0"')
    p.add_argument("--v", required=True)
    p.add_argument("--strategy", default="lex", help="lex, revlex or random:<seed>")
    p.add_argument("--trace", action="store_true", help="print the cut trace as JSON lines")
    p.add_argument("--unrestricted-c", action="store_true",
                   help="experimental: allow any C-failure in Step 3, not only minimal ones")
    p.add_argument("--dot", metavar="OUT", help="write M with the cuts highlighted")
    p.set_defaults(func=cmd_seccomp)

    p = sub.add_parser("verify", help="sweep all pairs and check the theorems")
    p.add_argument("poset")
    p.add_argument("--strategies", type=int, default=8)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--json", metavar="OUT")
    p.add_argument("--unrestricted-c", action="store_true",
                   help="also explore unrestricted Step 3 (reported, never gating)")
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    if getattr(args, "strategies", 1) < 1:
        print("error: --strategies must be at least 1", file=sys.stderr)
        return EXIT_INPUT
    try:
        return args.func(args)
    except SizeLimitError as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_SIZE
    except IncompatibleVectorError as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_VECTORS
    except InvariantViolation as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_INVARIANT
    except (ChoppedError, ValueError) as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
