#!/usr/bin/env python3
"""Growth of the deviation sigma(0,1) - m/6 over qualifying primes.

Prints the normalized statistic |delta| / (sqrt(m) ln m) in windows, to
eyeball whether the square-root-error envelope is plausible."""
import argparse

from digitclass.verify import corollary3_stats


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--m-min", type=int, default=1000)
    ap.add_argument("--m-max", type=int, default=1000000)
    ap.add_argument("--windows", type=int, default=10)
    args = ap.parse_args()

    stats = corollary3_stats(args.m_min, args.m_max)
    rows = stats["rows"]
    if not rows:
        print("no qualifying m in range")
        return
    per = max(1, len(rows) // args.windows)
    for i in range(0, len(rows), per):
        window = rows[i : i + per]
        worst = max(window, key=lambda r: r["normalized"])
        print(f"m in [{window[0]['m']}, {window[-1]['m']}]: "
              f"count={len(window)} max_normalized={worst['normalized']:.5f} "
              f"at m={worst['m']}")
    print(f"overall: count={stats['count']} "
          f"max={stats['max_normalized']:.5f} mean={stats['mean_normalized']:.5f}")


if __name__ == "__main__":
    main()
