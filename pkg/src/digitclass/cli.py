"""Command-line front end.

Exit codes: 0 success (or non-strict scan with failures), 1 check failure
under --strict, 2 usage / domain error.
"""
from __future__ import annotations

import argparse
import json
import math
import sys

from .arith import is_prime
from .digits import expand
from .errors import DigitclassError, DomainError
from .scan import CHECK_NAMES, ScanConfig, run_scan
from .verify import (
    check_class_number_main,
    check_corollary1,
    check_girstmair,
    check_main_prime,
    check_proof_steps_s3,
    check_prop_s,
    check_ram_thanga,
    corollary3_stats,
)

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


def _print_record(rec):
    print(json.dumps(rec.to_json_dict(), separators=(",", ":")))


def cmd_expand(args) -> int:
    e = expand(args.m, args.n)
    shown = e.digits[: args.limit]
    print(f"m={args.m} n={args.n} period={e.period}")
    tail = " ..." if e.period > args.limit else ""
    print("digits: " + " ".join(str(d) for d in shown) + tail)
    from fractions import Fraction

    ok = e.as_fraction() == Fraction(1, args.m)
    print(f"reconstruction: {'ok' if ok else 'FAILED'}")
    return EXIT_OK if ok else EXIT_FAIL


def cmd_verify(args) -> int:
    records = []
    if args.check == "girstmair":
        records.append(check_girstmair(args.m, args.n))
    elif args.check == "ram-thanga":
        records.append(check_ram_thanga(args.m, args.n))
    elif args.check == "cor1":
        records.append(check_corollary1(args.m))
    elif args.check == "prop-s":
        if args.p is None or args.part is None:
            raise DomainError("prop-s needs --p and --part")
        records.append(check_prop_s(args.m, args.n, args.p, args.part))
    elif args.check == "main-prime":
        if args.p is None:
            raise DomainError("main-prime needs --p")
        records.append(check_main_prime(args.m, args.n, args.p))
        if args.steps:
            records.extend(check_proof_steps_s3(args.m, args.n, args.p))
    elif args.check == "cnmain":
        records.append(
            check_class_number_main(args.m, args.n, args.factor, args.convention)
        )
    for rec in records:
        _print_record(rec)
    failed = sum(not r.passed for r in records)
    print(f"# checked={len(records)} passed={len(records) - failed} failed={failed}")
    if args.strict and failed:
        return EXIT_FAIL
    return EXIT_OK


def cmd_scan(args) -> int:
    cfg = ScanConfig(
        checks=tuple(args.check),
        m_min=args.m_min,
        m_max=args.m_max,
        n_values=tuple(args.n) if args.n else None,
        n_policy=args.n_policy,
        p_values=tuple(args.p) if args.p else None,
        factor=args.factor,
        convention=args.convention,
        workers=args.workers,
        segment=args.segment,
        out_dir=args.out,
        strict=args.strict,
        resume_from=args.resume_from,
    )
    result = run_scan(cfg)
    for check in sorted(result.summary):
        s = result.summary[check]
        print(f"{check}: tested={s['tested']} passed={s['passed']} failed={s['failed']}")
    print(f"records: {result.n_records} -> {result.jsonl_path}")
    print(f"summary: {result.summary_path}")
    if cfg.strict and result.any_failed:
        return EXIT_FAIL
    return EXIT_OK


def cmd_stats(args) -> int:
    if args.kind == "sigma":
        stats = corollary3_stats(args.m_min, args.m_max)
        for row in stats["rows"]:
            print(
                f"m={row['m']} sigma01={row['sigma01']} "
                f"delta={float(row['delta']):+.3f} normalized={row['normalized']:.6f}"
            )
        if stats["count"]:
            print(
                f"# count={stats['count']} max_normalized={stats['max_normalized']:.6f} "
                f"mean_normalized={stats['mean_normalized']:.6f}"
            )
        else:
            print("# count=0")
        return EXIT_OK
    # artin: running density of primes with n a fixed primitive root
    from .arith import is_primitive_root, primes_in

    n = args.n
    seen = hits = 0
    for m in primes_in(3, args.m_max - 1):
        if m % n == 0 or math.gcd(n, m) != 1:
            continue
        seen += 1
        if is_primitive_root(n % m, m):
            hits += 1
        if seen % args.every == 0:
            print(f"m<={m} primes={seen} primitive={hits} ratio={hits / seen:.6f}")
    if seen:
        print(f"# final primes={seen} primitive={hits} ratio={hits / seen:.6f}")
    return EXIT_OK


def cmd_ff(args) -> int:
    if not is_prime(args.q):
        raise DomainError(f"q must be prime, got {args.q}")
    from .ffield import rudnick_sweep

    result = rudnick_sweep(args.q, args.deg_max, args.deg_base_max)
    print(
        f"q={result['q']} degP<={result['degp_max']} degB<={result['degb_max']} "
        f"tested={result['tested']} passed={result['passed']} "
        f"noncoprime={result['noncoprime_cells']} skipped={result['skipped_cells']}"
    )
    for P, B, s in result["failures"]:
        print(f"FAIL P=[{P}] B=[{B}] sum=[{s}]")
    return EXIT_OK if not result["failures"] else EXIT_FAIL


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="digitclass",
        description="Digit expansions of 1/m, character sums, and class numbers.",
    )
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("expand", help="base-n digit expansion of 1/m")
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--limit", type=int, default=60)
    p.set_defaults(func=cmd_expand)

    p = sub.add_parser("verify", help="run one named check on one tuple")
    p.add_argument("check", choices=CHECK_NAMES)
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--n", type=int, default=3)
    p.add_argument("--p", type=int)
    p.add_argument("--part", type=int, choices=(1, 2))
    p.add_argument("--factor", type=int, default=1, choices=(1, 2))
    p.add_argument("--convention", default="residue", choices=("residue", "digit"))
    p.add_argument("--steps", action="store_true",
                   help="also emit proof-step records (main-prime)")
    p.add_argument("--strict", action="store_true")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("scan", help="range scan writing JSONL + CSV summary")
    p.add_argument("--check", action="append", required=True, choices=CHECK_NAMES)
    p.add_argument("--m-min", type=int, default=3)
    p.add_argument("--m-max", type=int, required=True)
    p.add_argument("--n", type=int, action="append")
    p.add_argument("--n-policy", default="list",
                   choices=("list", "smallest5", "all"))
    p.add_argument("--p", type=int, action="append")
    p.add_argument("--factor", type=int, default=1, choices=(1, 2))
    p.add_argument("--convention", default="residue", choices=("residue", "digit"))
    p.add_argument("--workers", type=int, default=1)
    p.add_argument("--segment", type=int, default=500)
    p.add_argument("--out", help="output directory (default: $RESULT_DIR or ./results)")
    p.add_argument("--strict", action="store_true")
    p.add_argument("--resume-from", type=int)
    p.set_defaults(func=cmd_scan)

    p = sub.add_parser("stats", help="sigma deviations or primitive-root density")
    p.add_argument("kind", choices=("sigma", "artin"))
    p.add_argument("--m-min", type=int, default=5)
    p.add_argument("--m-max", type=int, required=True)
    p.add_argument("--n", type=int, default=2, help="base for artin")
    p.add_argument("--every", type=int, default=100)
    p.set_defaults(func=cmd_stats)

    p = sub.add_parser("ff", help="function-field digit-sum sweep")
    p.add_argument("kind", choices=("rudnick",))
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--deg-max", type=int, default=4)
    p.add_argument("--deg-base-max", type=int, default=2)
    p.set_defaults(func=cmd_ff)

    return ap


def main(argv=None) -> int:
    ap = build_parser()
    try:
        args = ap.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code not in (0, None) else 0
    try:
        return args.func(args)
    except DigitclassError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
