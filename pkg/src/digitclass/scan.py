"""Range scans over qualifying (m, n, p) tuples.

The m-range is cut into fixed-size chunks (independent of worker count),
chunks are evaluated by stateless workers, and a single writer merges them
in order — so output files are byte-identical for a given config no matter
how many workers run.
"""
from __future__ import annotations

import csv
import json
import math
import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, replace
from pathlib import Path

from .arith import factorize, is_prime, is_primitive_root, mult_order, primes_in
from .errors import DomainError
from .verify import (
    check_class_number_main,
    check_corollary1,
    check_girstmair,
    check_main_prime,
    check_proof_steps_s3,
    check_prop_s,
    check_ram_thanga,
    qualifying_cor1_m,
)

CHECK_NAMES = ("girstmair", "ram-thanga", "cor1", "prop-s", "main-prime", "cnmain")


@dataclass(frozen=True)
class ScanConfig:
    checks: tuple
    m_min: int = 3
    m_max: int = 2000
    n_values: tuple | None = None  # None: per-check default policy
    n_policy: str = "list"  # "list" | "smallest5" | "all"
    p_values: tuple | None = None
    factor: int = 1
    convention: str = "residue"
    workers: int = 1
    segment: int = 500
    n_cap: int = 200  # prop-s bound on n
    out_dir: str | None = None
    strict: bool = False
    resume_from: int | None = None

    def __post_init__(self):
        unknown = set(self.checks) - set(CHECK_NAMES)
        if unknown:
            raise DomainError(f"unknown checks: {sorted(unknown)}")
        if self.m_min >= self.m_max:
            raise DomainError("empty m-range")
        if self.workers < 1 or self.segment < 1:
            raise DomainError("workers and segment must be >= 1")
        if self.n_policy not in ("list", "smallest5", "all"):
            raise DomainError(f"unknown n-policy {self.n_policy!r}")
        if self.factor not in (1, 2):
            raise DomainError("factor candidates are 1 and 2")
        if self.convention not in ("residue", "digit"):
            raise DomainError(f"unknown convention {self.convention!r}")


def _primes_3mod4(lo: int, hi: int):
    for m in primes_in(max(lo, 3), hi - 1):
        if m % 4 == 3:
            yield m


def _girstmair_bases(cfg: ScanConfig, m: int):
    if cfg.n_policy == "smallest5" or cfg.n_values is None:
        from .arith import smallest_primitive_roots

        return [g for g in smallest_primitive_roots(m, 5) if g > 1]
    return [n for n in cfg.n_values if 1 < n < m and is_primitive_root(n, m)]


def _half_order_bases(cfg: ScanConfig, m: int):
    """Bases of multiplicative order (m-1)/2 mod m."""
    q = (m - 1) // 2
    if cfg.n_values is not None:
        return [
            n for n in cfg.n_values
            if 2 <= n < m and math.gcd(n, m) == 1 and mult_order(n, m) == q
        ]
    from .arith import smallest_primitive_roots

    g = smallest_primitive_roots(m, 1)[0]
    out = [pow(g, j, m) for j in range(2, m - 1, 2) if math.gcd(j, m - 1) == 2]
    return sorted(n for n in out if n >= 2)


def _odd_primes_dividing(x: int):
    if x < 3:
        return []
    return [p for p in factorize(x).primes if p != 2]


def _chunk_records(cfg: ScanConfig, lo: int, hi: int) -> list:
    """All records for m in [lo, hi), in ascending (m, n, p, check) order."""
    records = []
    for check in cfg.checks:
        if check == "girstmair":
            for m in _primes_3mod4(max(lo, 5), hi):
                for n in _girstmair_bases(cfg, m):
                    records.append(check_girstmair(m, n))
        elif check == "ram-thanga":
            for m in _primes_3mod4(max(lo, 5), hi):
                for n in _half_order_bases(cfg, m):
                    records.append(check_ram_thanga(m, n))
        elif check == "cor1":
            for m in qualifying_cor1_m(lo, hi):
                records.append(check_corollary1(m, h_table_limit=3 * cfg.m_max))
        elif check == "prop-s":
            for m in _primes_3mod4(max(lo, 5), hi):
                for n in range(2, min(m, cfg.n_cap)):
                    if not is_primitive_root(n, m):
                        continue
                    for p in _odd_primes_dividing(n + 1):
                        if (n + 1) % (p * p) != 0 and _p_selected(cfg, p):
                            records.append(check_prop_s(m, n, p, part=1))
                    for p in _odd_primes_dividing(n - 1):
                        if _p_selected(cfg, p):
                            records.append(check_prop_s(m, n, p, part=2))
        elif check == "main-prime":
            n_values = cfg.n_values if cfg.n_values is not None else range(2, 51)
            for m in _primes_3mod4(max(lo, 5), hi):
                for n in n_values:
                    if n < 2 or math.gcd(n, m) != 1 or not is_primitive_root(n % m, m):
                        continue
                    for p in _odd_primes_dividing(n + 1):
                        if (n + 1) % (p * p) == 0 or not _p_selected(cfg, p):
                            continue
                        records.append(check_main_prime(m, n, p))
                        records.extend(check_proof_steps_s3(m, n, p))
        elif check == "cnmain":
            n_values = cfg.n_values if cfg.n_values is not None else (3, 7, 11)
            for m in primes_in(max(lo, 5), hi - 1):
                if m % 4 != 1:
                    continue
                for n in sorted(n_values):
                    if math.gcd(n, m) != 1 or not is_primitive_root(n % m, m):
                        continue
                    try:
                        records.append(
                            check_class_number_main(m, n, cfg.factor, cfg.convention)
                        )
                    except DomainError:
                        continue  # n not of the required shape for this check
    records.sort(key=lambda r: (r.m or 0, r.n or 0, r.p or 0, r.check))
    return [r.to_json_dict() for r in records]


def _p_selected(cfg: ScanConfig, p: int) -> bool:
    return cfg.p_values is None or p in cfg.p_values


def _worker(args) -> list:
    cfg, lo, hi = args
    return _chunk_records(cfg, lo, hi)


@dataclass
class ScanResult:
    jsonl_path: Path
    summary_path: Path
    extras_path: Path
    summary: dict
    n_records: int
    any_failed: bool = False


def _summarize(rows) -> dict:
    summary = {}
    for row in rows:
        slot = summary.setdefault(
            row["check"],
            {"tested": 0, "passed": 0, "failed": 0,
             "first_fail_m": "", "first_fail_n": "", "first_fail_p": ""},
        )
        slot["tested"] += 1
        if row["pass"]:
            slot["passed"] += 1
        else:
            slot["failed"] += 1
            if slot["first_fail_m"] == "":
                slot["first_fail_m"] = row["m"] or ""
                slot["first_fail_n"] = row["n"] or ""
                slot["first_fail_p"] = row["p"] or ""
    return summary


def _extras(cfg: ScanConfig, rows) -> dict:
    extras = {}
    hist = {}
    for row in rows:
        if row["check"] == "main-prime":
            p = row["p"]
            hist.setdefault(p, {})
            key = row["aux"]["m_mod_p"]
            hist[p][key] = hist[p].get(key, 0) + 1
    if hist:
        extras["main_prime_m_mod_p_histogram"] = {
            p: dict(sorted(h.items(), key=lambda kv: int(kv[0])))
            for p, h in sorted(hist.items(), key=lambda kv: int(kv[0]))
        }
    matches = {}
    for row in rows:
        if row["check"] == "class-number-main":
            for combo in row["aux"]["matches"].split(","):
                matches[combo] = matches.get(combo, 0) + 1
    if matches:
        extras["class_number_main_matching_combos"] = dict(sorted(matches.items()))
    return extras


def default_out_dir() -> Path:
    return Path(os.environ.get("RESULT_DIR", "results"))


def run_scan(cfg: ScanConfig) -> ScanResult:
    out_dir = Path(cfg.out_dir) if cfg.out_dir else default_out_dir()
    out_dir.mkdir(parents=True, exist_ok=True)
    m_min = cfg.m_min
    resume = cfg.resume_from is not None and cfg.resume_from > m_min
    if resume:
        m_min = cfg.resume_from

    chunks = []
    lo = m_min
    while lo < cfg.m_max:
        hi = min(lo + cfg.segment, cfg.m_max)
        chunks.append((replace(cfg, out_dir=None), lo, hi))
        lo = hi

    if cfg.workers == 1:
        chunk_results = map(_worker, chunks)
    else:
        pool = ProcessPoolExecutor(max_workers=cfg.workers)
        chunk_results = pool.map(_worker, chunks, chunksize=1)

    jsonl_path = out_dir / "records.jsonl"
    rows = []
    mode = "a" if resume else "w"
    with open(jsonl_path, mode, encoding="utf-8") as fh:
        for chunk_rows in chunk_results:
            for row in chunk_rows:
                fh.write(json.dumps(row, separators=(",", ":")) + "\n")
                rows.append(row)
    if cfg.workers > 1:
        pool.shutdown()

    if resume:
        with open(jsonl_path, encoding="utf-8") as fh:
            rows = [json.loads(line) for line in fh]

    summary = _summarize(rows)
    summary_path = out_dir / "summary.csv"
    with open(summary_path, "w", newline="", encoding="utf-8") as fh:
        writer = csv.writer(fh)
        writer.writerow(
            ["check", "tested", "passed", "failed",
             "first_fail_m", "first_fail_n", "first_fail_p"]
        )
        for check in sorted(summary):
            s = summary[check]
            writer.writerow(
                [check, s["tested"], s["passed"], s["failed"],
                 s["first_fail_m"], s["first_fail_n"], s["first_fail_p"]]
            )

    extras_path = out_dir / "extras.json"
    with open(extras_path, "w", encoding="utf-8") as fh:
        json.dump(_extras(cfg, rows), fh, indent=2, sort_keys=True)
        fh.write("\n")

    any_failed = any(s["failed"] for s in summary.values())
    return ScanResult(
        jsonl_path=jsonl_path, summary_path=summary_path, extras_path=extras_path,
        summary=summary, n_records=len(rows), any_failed=any_failed,
    )
