"""Command-line front end.

Subcommands:
    decompose     summands of one permutation module
    idempotent    print/export a single idempotent
    verify        complete-set verification sweep over all lambda up to a size
    kostka-table  CSV table of two-row multiplicities
    oracle-check  tensor-space cross-validation
"""

from __future__ import annotations

import argparse
import csv
import json
import os
import sys
from concurrent.futures import ProcessPoolExecutor

from .algebra import AlgebraContext
from .decompose import (
    kostka,
    partitions_up_to,
    summands,
    two_row_partitions,
    verify_complete_set,
)
from .idempotents import build, factor_sequence_text
from .oracle import cross_validate
from .padic import big_b

__all__ = ["main"]


def _partition(text: str) -> tuple[int, int]:
    try:
        l1, l2 = (int(part) for part in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(
            f"expected two comma-separated integers, got {text!r}"
        )
    if not (l1 >= l2 >= 0):
        raise argparse.ArgumentTypeError(
            f"({l1},{l2}) is not a partition: need lambda1 >= lambda2 >= 0"
        )
    return l1, l2


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="tworow",
        description="Idempotent decompositions of two-row permutation modules at p=3.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    dec = sub.add_parser("decompose", help="list the Young-module summands of M^lambda")
    dec.add_argument("--lambda", dest="lam", type=_partition, required=True,
                     metavar="L1,L2")
    dec.add_argument("--p", type=int, default=3)
    dec.add_argument("--json", action="store_true")

    idm = sub.add_parser("idempotent", help="print one idempotent e_{m,g}")
    idm.add_argument("--lambda", dest="lam", type=_partition, required=True,
                     metavar="L1,L2")
    idm.add_argument("--g", type=int, required=True)
    idm.add_argument("--p", type=int, default=3)
    idm.add_argument("--json", action="store_true")

    ver = sub.add_parser("verify", help="complete-set verification sweep")
    ver.add_argument("--max-r", type=int, default=60)
    ver.add_argument("--p", type=int, default=3)
    ver.add_argument("--jobs", type=int,
                     default=int(os.environ.get("SCHUR_JOBS", "1")))

    kos = sub.add_parser("kostka-table", help="CSV of two-row p-Kostka numbers")
    kos.add_argument("--max-r", type=int, required=True)
    kos.add_argument("--p", type=int, default=3)

    orc = sub.add_parser("oracle-check", help="tensor-space cross-validation")
    orc.add_argument("--max-r", type=int, default=8)
    orc.add_argument("--p", type=int, default=3)

    return parser


def _require_p3(parser: argparse.ArgumentParser, p: int) -> None:
    if p != 3:
        parser.error(f"this command implements the characteristic-3 theory only; got --p {p}")


def _cmd_decompose(args) -> int:
    l1, l2 = args.lam
    ctx = AlgebraContext(l1, l2, 3)
    recs = summands(ctx)
    if args.json:
        payload = {
            "lambda": [l1, l2],
            "p": 3,
            "summands": [rec.to_json() for rec in recs],
        }
        print(json.dumps(payload, indent=2))
        return 0
    print(f"M^({l1},{l2}) = direct sum of {len(recs)} Young modules (p=3, m={ctx.m}):")
    for rec in recs:
        print(
            f"  g={rec.g:<3d} mu=({rec.mu[0]},{rec.mu[1]})"
            f"  B={rec.b_value}  e_{{{ctx.m},{rec.g}}} = {rec.idempotent}"
        )
    return 0


def _cmd_idempotent(args) -> int:
    l1, l2 = args.lam
    g = args.g
    ctx = AlgebraContext(l1, l2, 3)
    elem = build(ctx, g)
    if args.json:
        print(json.dumps(elem.to_json()))
        return 0
    m = ctx.m
    if big_b(m, g, 3) == 0:
        print(
            f"C({m + 2 * g},{g}) is divisible by 3, so e_{{{m},{g}}} = 0 "
            f"and ({l1 + g},{l2 - g}) is not a summand of M^({l1},{l2})"
        )
        return 0
    if g > l2:
        print(f"g={g} exceeds lambda2={l2}, so e_{{{m},{g}}} = 0 in this algebra")
        return 0
    print(f"factors: {factor_sequence_text(ctx, g)}")
    print(f"e_{{{m},{g}}} = {elem}")
    return 0


def _verify_one(lam: tuple[int, int]) -> tuple[tuple[int, int], bool, list[str]]:
    report = verify_complete_set(AlgebraContext(lam[0], lam[1], 3))
    return lam, report.ok, report.failures


def _cmd_verify(args) -> int:
    lams = partitions_up_to(args.max_r)
    if args.jobs > 1:
        with ProcessPoolExecutor(max_workers=args.jobs) as pool:
            results = list(pool.map(_verify_one, lams, chunksize=16))
    else:
        results = [_verify_one(lam) for lam in lams]
    results.sort(key=lambda item: (sum(item[0]), item[0][1]))
    bad = [item for item in results if not item[1]]
    print(f"verified {len(results)} partitions with r <= {args.max_r}")
    if bad:
        lam, _, failures = bad[0]
        print(f"FAIL: {len(bad)} partitions failed; first counterexample lambda={lam}:")
        for line in failures:
            print(f"  {line}")
        return 1
    print("PASS: complete orthogonal idempotent sets everywhere")
    return 0


def _cmd_kostka(args) -> int:
    writer = csv.writer(sys.stdout)
    print("# kostka-table v1: lambda1,lambda2,mu1,mu2,kostka")
    for r in range(args.max_r + 1):
        parts = two_row_partitions(r)
        for lam in parts:
            for mu in parts:
                writer.writerow([lam[0], lam[1], mu[0], mu[1], kostka(lam, mu, args.p)])
    return 0


def _cmd_oracle(args) -> int:
    report = cross_validate(args.max_r)
    for name, passed in report.checks.items():
        print(f"{name}: {'PASS' if passed else 'FAIL'}")
    for line in report.failures:
        print(f"  {line}")
    print(f"oracle-check r <= {report.r_max}: {'PASS' if report.ok else 'FAIL'}")
    return 0 if report.ok else 1


def main(argv=None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    if args.command == "kostka-table":
        if args.p < 2:
            parser.error(f"--p {args.p} is not a prime")
    else:
        _require_p3(parser, args.p)
    handlers = {
        "decompose": _cmd_decompose,
        "idempotent": _cmd_idempotent,
        "verify": _cmd_verify,
        "kostka-table": _cmd_kostka,
        "oracle-check": _cmd_oracle,
    }
    return handlers[args.command](args)


if __name__ == "__main__":
    sys.exit(main())
