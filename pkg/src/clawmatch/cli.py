"""Command-line surface.

Exit codes: 0 success or property holds, 1 property fails, 2 usage or
parse error, 3 internal invariant violation.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from . import counting, cyclespace, expansion, formats, graphs, structure
from .errors import (
    BoundFailure,
    CapExceeded,
    DegreeViolation,
    GraphError,
    NoTwoFactor,
    ParseError,
    StructureViolation,
)

INTERNAL_ERRORS = (BoundFailure, StructureViolation, DegreeViolation, NoTwoFactor)


def _load(path: str) -> graphs.Multigraph:
    return formats.parse_graph(Path(path).read_text())


def _cmd_check(args) -> int:
    g = _load(args.file)
    simple = g.is_simple()
    br = sorted(graphs.bridges(g).members)
    print(f"n={g.n}")
    print(f"m={g.m}")
    print(f"simple={'true' if simple else 'false'}")
    print(f"cubic={'true' if graphs.is_cubic(g) else 'false'}")
    if simple:
        print(f"claw_free={'true' if graphs.is_claw_free(g) else 'false'}")
    else:
        print("claw_free=n/a")
    print(f"bridges=[{','.join(map(str, br))}]")
    print(f"bridge_count={len(br)}")
    print(f"connected={'true' if graphs.is_connected(g) else 'false'}")
    print(f"two_edge_connected={'true' if graphs.is_two_edge_connected(g) else 'false'}")
    print(f"three_edge_connected={'true' if graphs.is_three_edge_connected(g) else 'false'}")
    if args.bridgeless and br:
        return 1
    return 0


def _cmd_decompose(args) -> int:
    d = structure.classify(_load(args.file))
    sys.stdout.write(formats.serialize_decomposition(d))
    return 0


def _cmd_build(args) -> int:
    base = _load(args.base)
    parts = [p for p in args.lengths.split(",") if p != ""]
    try:
        lengths = [int(p) for p in parts]
    except ValueError:
        print("error: --lengths must be a comma-separated list of integers", file=sys.stderr)
        return 2
    if len(lengths) != base.m:
        print(f"error: expected {base.m} lengths, got {len(lengths)}", file=sys.stderr)
        return 2
    g, _ = structure.build(base, lengths)
    sys.stdout.write(formats.serialize_graph(g))
    return 0


def _cmd_gen(args) -> int:
    if args.what == "ring":
        g = structure.ring_of_diamonds(args.size)
    elif args.what == "fig1":
        g = structure.figure1_graph(args.size)
    else:
        g = structure.random_base(args.size, args.seed)
    sys.stdout.write(formats.serialize_graph(g))
    return 0


def _cmd_count(args) -> int:
    g = _load(args.file)
    if args.two_factors:
        print(counting.count_two_factors(g))
    else:
        print(counting.count_perfect_matchings(g))
    return 0


def _cmd_cycle_space(args) -> int:
    g = _load(args.file)
    cb = cyclespace.cycle_basis(g)
    print(f"dimension={cb.dimension}")
    print(f"members={1 << cb.dimension}")
    for i, b in enumerate(cb.basis):
        print(f"basis_{i}={','.join(map(str, b.sorted_tuple()))}")
    if args.enumerate:
        for i, member in enumerate(cyclespace.enumerate_cycle_space(g, args.cap)):
            print(f"member_{i}={','.join(map(str, member.sorted_tuple()))}")
    return 0


def _cmd_certify(args) -> int:
    g = _load(args.file)
    cert = expansion.certify(g, both_branches=args.both_branches)
    sys.stdout.write(formats.serialize_certificate(cert))
    if args.verify_oracle:
        oracle = {
            m.sorted_tuple() for m in counting.enumerate_perfect_matchings(g, 1 << 22)
        }
        missing = [row for row in cert.matchings if row not in oracle]
        if missing or len(cert.matchings) > len(oracle):
            print("error: certificate disagrees with the oracle enumeration", file=sys.stderr)
            return 3
        print("oracle_check=ok")
    return 0


def _cmd_verify_3ec(args) -> int:
    ok = expansion.verify_3ec_remark(_load(args.file))
    print(f"result={'true' if ok else 'false'}")
    return 0 if ok else 1


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="clawmatch",
        description="Perfect-matching certificates for claw-free cubic bridgeless graphs.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("check", help="report structural predicates as key=value lines")
    p.add_argument("file")
    p.add_argument("--bridgeless", action="store_true", help="exit 1 if the graph has a bridge")
    p.set_defaults(fn=_cmd_check)

    p = sub.add_parser("decompose", help="K4 / ring-of-diamonds / expansion classification")
    p.add_argument("file")
    p.set_defaults(fn=_cmd_decompose)

    p = sub.add_parser("build", help="expand a base multigraph into a claw-free cubic graph")
    p.add_argument("--base", required=True, help="base multigraph document")
    p.add_argument("--lengths", required=True, help="comma-separated diamond counts per base edge")
    p.set_defaults(fn=_cmd_build)

    p = sub.add_parser("gen", help="corpus generators")
    gsub = p.add_subparsers(dest="what", required=True)
    q = gsub.add_parser("ring", help="ring of diamonds")
    q.add_argument("size", type=int)
    q = gsub.add_parser("fig1", help="bridged family with 9 perfect matchings")
    q.add_argument("size", type=int, help="number of middle diamonds")
    q = gsub.add_parser("random-base", help="random cubic 2-edge-connected multigraph")
    q.add_argument("size", type=int)
    q.add_argument("--seed", type=int, default=0)
    p.set_defaults(fn=_cmd_gen)

    p = sub.add_parser("count", help="exact brute-force counts")
    p.add_argument("file")
    p.add_argument("--two-factors", action="store_true", help="count 2-factors instead")
    p.set_defaults(fn=_cmd_count)

    p = sub.add_parser("cycle-space", help="GF(2) cycle basis, optionally the full enumeration")
    p.add_argument("file")
    p.add_argument("--cap", type=int, default=1 << 20)
    p.add_argument("--enumerate", action="store_true")
    p.set_defaults(fn=_cmd_cycle_space)

    p = sub.add_parser("certify", help="emit a perfect-matching certificate")
    p.add_argument("file")
    p.add_argument("--both-branches", action="store_true")
    p.add_argument("--verify-oracle", action="store_true")
    p.set_defaults(fn=_cmd_certify)

    p = sub.add_parser("verify-3ec", help="check the exact 2^(n/6+1) count on 3EC inputs")
    p.add_argument("file")
    p.set_defaults(fn=_cmd_verify_3ec)
    return parser


def main(argv: list[str] | None = None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        return args.fn(args)
    except ParseError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except FileNotFoundError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except INTERNAL_ERRORS as exc:
        print(f"internal error: {exc}", file=sys.stderr)
        return 3
    except CapExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (GraphError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    raise SystemExit(main())
