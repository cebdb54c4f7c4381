#!/usr/bin/env python3
"""Certify the closed form against the exact oracle on a small grid.

Usage:
    python scripts/certify_desk_grid.py [--max-n 9] [--max-m 3] [--extra-k 2]
        [--variant consistent|as-printed] [--workers N] [--out report.csv]
"""

import argparse
import sys
import time

from pathradio.cli import render_rows
from pathradio.formula import CONSISTENT, VARIANTS, min_valid_k
from pathradio.oracle import certify_theorem, mismatches


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--max-n", type=int, default=9)
    ap.add_argument("--max-m", type=int, default=3)
    ap.add_argument("--extra-k", type=int, default=2)
    ap.add_argument("--variant", choices=VARIANTS, default=CONSISTENT)
    ap.add_argument("--workers", type=int, default=1)
    ap.add_argument("--out")
    args = ap.parse_args()

    grid = [
        (n, m, k)
        for n in range(2, args.max_n + 1)
        for m in range(1, min(n, args.max_m) + 1)
        for k in range(min_valid_k(n, m), min_valid_k(n, m) + args.extra_k + 1)
    ]
    t0 = time.time()
    rows = certify_theorem(grid, variant=args.variant, workers=args.workers)
    text = render_rows(rows, "csv")
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    bad = mismatches(rows)
    print(f"{len(rows)} instances, {len(bad)} mismatches, {time.time() - t0:.1f}s", file=sys.stderr)
    return 1 if bad else 0


if __name__ == "__main__":
    sys.exit(main())
