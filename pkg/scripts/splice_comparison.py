#!/usr/bin/env python3
"""Compare placements of the central block in the odd-diameter orders.

For every odd-diameter instance up to --max-n, build the color order with the
central block after q*m chain vertices ("printed") and after the whole chain
("end"), and count how often each gives a valid coloring of optimal span.
"""

import argparse
from collections import Counter

from pathradio.construct import case_sequence, greedy_color
from pathradio.formula import case_of, min_valid_k, theorem_span
from pathradio.graph import build_graph
from pathradio.verify import check_coloring


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--max-n", type=int, default=40)
    ap.add_argument("--max-m", type=int, default=8)
    ap.add_argument("--extra-k", type=int, default=3)
    args = ap.parse_args()

    hits = Counter()
    total = Counter()
    first_miss = {}
    for n in range(1, args.max_n + 1):
        for m in range(1, min(n, args.max_m) + 1):
            tag = case_of(n, m)
            if tag.parity != "odd":
                continue
            g = build_graph(n, m)
            for k in range(min_valid_k(n, m), min_valid_k(n, m) + args.extra_k + 1):
                target = theorem_span(n, m, k).value
                for splice in ("printed", "end"):
                    key = (tag.label(), splice)
                    total[key] += 1
                    col = greedy_color(g, case_sequence(g, splice=splice).order, k)
                    if check_coloring(g, col).valid and col.span == target:
                        hits[key] += 1
                    else:
                        first_miss.setdefault(key, (n, m, k, col.span, target))

    for key in sorted(total):
        print(f"{key[0]:18s} {key[1]:8s} optimal {hits[key]:5d}/{total[key]:<5d}", end="")
        print(f"  first miss {first_miss[key]}" if key in first_miss else "")


if __name__ == "__main__":
    main()
