#!/usr/bin/env python3
"""Decide which Bernoulli prefactor and sigma convention close the
character-sum class number identity, and write the result as JSON."""
import argparse
import json
from pathlib import Path

from digitclass.scan import default_out_dir
from digitclass.verify import calibrate_class_number_main


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--m-max", type=int, default=2000)
    ap.add_argument("--n", type=int, action="append",
                    help="conductor factors to test (default 3 7 11 19 23)")
    ap.add_argument("--out", help="output JSON path")
    args = ap.parse_args()

    n_values = tuple(args.n) if args.n else (3, 7, 11, 19, 23)
    cal = calibrate_class_number_main(n_values, args.m_max)
    out = Path(args.out) if args.out else default_out_dir() / "calibration.json"
    out.parent.mkdir(parents=True, exist_ok=True)

    def enc(x):
        return list(x) if isinstance(x, tuple) else str(x)

    out.write_text(json.dumps(cal, indent=2, default=enc) + "\n")
    print(json.dumps(cal, indent=2, default=enc))
    print(f"-> {out}")


if __name__ == "__main__":
    main()
