"""Command-line front end: decompositions, abacus drawings, tau values,
part pairings, block listings and the verification suites.

Exit codes: 0 success, 1 a verification suite failed its pass criterion,
2 usage or input error.
"""

from __future__ import annotations

import argparse
import json
import sys

from .abacus import BarAbacus, render
from .blocks import (
    SUITES,
    SpinBlockId,
    bar_cores,
    spin_block_members,
    strict_partitions_of,
    verify,
)
from .characters import ATILDE, STILDE, height_and_defect
from .galois import GaloisElement, tau_partition, tau_selfconjugate
from .humphreys import G, GPLUS, GBlockId, block_members, g_height_and_defect
from .littlewood import bar_decompose, ordinary_decompose, paired_parts, selfconjugate_paired_hooks
from .partitions import parse_partition


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="barblocks",
        description="bar-partition decompositions, Galois sign actions and block checks",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def partition_args(cmd):
        # accept both the positional form and an explicit --partition flag
        cmd.add_argument("partition", nargs="?", default=None,
                         help='partition literal, e.g. "14,12,8,6,3,2"')
        cmd.add_argument("--partition", dest="partition_flag", default=None)

    dec = sub.add_parser("decompose", help="core / quotient / cocore decomposition")
    dec.add_argument("--p", type=int, required=True, help="odd modulus (odd prime for --nonspin)")
    dec.add_argument("--nonspin", action="store_true", help="decompose an ordinary partition")
    dec.add_argument("--json", action="store_true")
    partition_args(dec)

    aba = sub.add_parser("abacus", help="ASCII abacus of a strict partition")
    aba.add_argument("--p", type=int, required=True)
    aba.add_argument("--twisted", action="store_true")
    aba.add_argument("--json", action="store_true")
    partition_args(aba)

    tau = sub.add_parser("tau", help="sign by which an automorphism permutes a character pair")
    tau.add_argument("--p", type=int, required=True)
    tau.add_argument("--e", type=int, default=1)
    tau.add_argument("--s", type=int, default=1)
    tau.add_argument("--nonspin", action="store_true", help="self-conjugate non-spin label")
    partition_args(tau)

    pairs = sub.add_parser("pairs", help="paired parts of a cocore (or paired diagonal hooks)")
    pairs.add_argument("--p", type=int, required=True)
    pairs.add_argument("--nonspin", action="store_true")
    pairs.add_argument("--json", action="store_true")
    partition_args(pairs)

    blk = sub.add_parser("blocks", help="spin blocks of a group of degree n")
    blk.add_argument("--p", type=int, required=True)
    blk.add_argument("--n", type=int, required=True)
    blk.add_argument("--group", choices=(STILDE, ATILDE, G, GPLUS), required=True)
    blk.add_argument("--json", action="store_true")

    ver = sub.add_parser("verify", help="run an exhaustive verification suite")
    ver.add_argument("suite", choices=sorted(SUITES))
    ver.add_argument("--p", type=int, required=True)
    ver.add_argument("--max-n", type=int, required=True, help="size bound of the sweep")
    ver.add_argument("--max-w", type=int, default=3, help="weight bound for block suites")
    ver.add_argument(
        "--expect-violations",
        action="store_true",
        help="invert the pass criterion: succeed only if violations are found",
    )
    ver.add_argument("--json", action="store_true")
    return parser


def _partition_text(args) -> str:
    if args.partition_flag is not None:
        return args.partition_flag
    if args.partition is not None:
        return args.partition
    raise ValueError("a partition literal is required")


def _cmd_decompose(args) -> int:
    if args.nonspin:
        lam = parse_partition(_partition_text(args))
        dec = ordinary_decompose(lam, args.p)
    else:
        lam = parse_partition(_partition_text(args), strict=True)
        dec = bar_decompose(lam, args.p)
    if args.json:
        print(json.dumps(dec.to_json()))
        return 0
    print(f"partition: {lam}")
    print(f"p: {args.p}")
    print(f"core: {dec.core}")
    print(f"charvec: {json.dumps(list(dec.charvec))}")
    print(f"quotient: {json.dumps([q.to_json() for q in dec.quotient])}")
    print(f"weight: {dec.weight}")
    print(f"cocore: {dec.cocore}")
    print(f"d: {dec.d}")
    return 0


def _cmd_abacus(args) -> int:
    lam = parse_partition(_partition_text(args), strict=True)
    ab = BarAbacus.from_partition(lam, args.p)
    obj = ab.twist() if args.twisted else ab
    print(json.dumps(obj.to_json()) if args.json else render(obj))
    return 0


def _cmd_tau(args) -> int:
    f = GaloisElement(args.p, args.e, args.s)
    if args.nonspin:
        lam = parse_partition(_partition_text(args))
        print(tau_selfconjugate(lam, f))
    else:
        lam = parse_partition(_partition_text(args), strict=True)
        print(tau_partition(lam, f))
    return 0


def _cmd_pairs(args) -> int:
    if args.nonspin:
        lam = parse_partition(_partition_text(args))
        result = selfconjugate_paired_hooks(lam, args.p)
    else:
        lam = parse_partition(_partition_text(args), strict=True)
        result = paired_parts(lam, args.p)
    if args.json:
        print(json.dumps([list(pair) for pair in result]))
    else:
        for a, b in result:
            print(f"{a} {b}")
    return 0


def _spin_blocks_of(n: int, p: int, group: str):
    seen = {}
    for lam in strict_partitions_of(n):
        dec = bar_decompose(lam, p)
        key = dec.core
        seen.setdefault(key, dec.weight)
    for kappa in sorted(seen, key=lambda k: (k.size, k.parts)):
        yield SpinBlockId(kappa, seen[kappa], group, p)


def _cmd_blocks(args) -> int:
    out = []
    if args.group in (STILDE, ATILDE):
        for block in _spin_blocks_of(args.n, args.p, args.group):
            members = spin_block_members(block)
            defect, heights = height_and_defect(members, block.n, args.p)
            out.append(
                {
                    "kappa": block.kappa.to_json(),
                    "w": block.w,
                    "group": block.group,
                    "defect": defect,
                    "members": [
                        {**label.to_json(), "height": heights[label]} for label in members
                    ],
                }
            )
    else:
        for kappa in bar_cores(args.p, args.n):
            rem = args.n - kappa.size
            if rem <= 0 or rem % args.p:
                continue
            block = GBlockId(kappa, rem // args.p, args.group, args.p)
            members = block_members(block)
            defect, heights = g_height_and_defect(members, args.p)
            out.append(
                {
                    "kappa": kappa.to_json(),
                    "w": block.w,
                    "group": block.group,
                    "defect": defect,
                    "members": [
                        {**label.to_json(), "height": heights[label]} for label in members
                    ],
                }
            )
    if args.json:
        print(json.dumps(out))
        return 0
    for rec in out:
        print(
            f"block kappa=[{','.join(str(x) for x in rec['kappa'])}] "
            f"w={rec['w']} group={rec['group']} defect={rec['defect']}"
        )
        for m in rec["members"]:
            name = ",".join(str(x) for x in m.get("partition", m.get("nu", [])))
            print(f"  [{name}] {m['variant']} height={m['height']}")
    return 0


def _cmd_verify(args) -> int:
    report = verify(args.suite, args.p, args.max_n, w_max=args.max_w)
    if args.json:
        print(json.dumps(report.to_json()))
    else:
        print(f"suite: {report.suite}")
        print(f"p: {report.p}")
        print(f"bound: {report.bound}")
        print(f"cases: {report.cases}")
        print(f"violations: {len(report.violations)}")
        for note in report.notes:
            print(f"note: {note}")
        for v in report.violations[:10]:
            print(f"witness: {json.dumps(v)}")
        if len(report.violations) > 10:
            print(f"... and {len(report.violations) - 10} more")
    failed = bool(report.violations) != args.expect_violations
    return 1 if failed else 0


_COMMANDS = {
    "decompose": _cmd_decompose,
    "abacus": _cmd_abacus,
    "tau": _cmd_tau,
    "pairs": _cmd_pairs,
    "blocks": _cmd_blocks,
    "verify": _cmd_verify,
}


def main(argv=None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return _COMMANDS[args.command](args)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
