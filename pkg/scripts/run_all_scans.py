#!/usr/bin/env python3
"""Run every range scan at full scale and write one result directory per
check under $RESULT_DIR (default ./results)."""
import argparse
import time
from pathlib import Path

from digitclass.scan import ScanConfig, default_out_dir, run_scan

SCANS = {
    "girstmair": dict(checks=("girstmair",), m_max=2000, n_policy="smallest5"),
    "ram-thanga": dict(checks=("ram-thanga",), m_max=2000),
    "cor1": dict(checks=("cor1",), m_max=100000),
    "prop-s": dict(checks=("prop-s",), m_max=2000),
    "main-prime": dict(checks=("main-prime",), m_max=10000),
    "cnmain": dict(checks=("cnmain",), m_max=2000, n_values=(3, 7, 11, 19, 23)),
}


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--workers", type=int, default=4)
    ap.add_argument("--only", choices=sorted(SCANS), action="append")
    args = ap.parse_args()

    base = default_out_dir()
    for name, kw in SCANS.items():
        if args.only and name not in args.only:
            continue
        t0 = time.time()
        cfg = ScanConfig(workers=args.workers, out_dir=str(Path(base) / name), **kw)
        result = run_scan(cfg)
        print(f"== {name} ({time.time() - t0:.1f}s) ==")
        for check in sorted(result.summary):
            s = result.summary[check]
            print(f"  {check}: tested={s['tested']} passed={s['passed']} "
                  f"failed={s['failed']}")


if __name__ == "__main__":
    main()
