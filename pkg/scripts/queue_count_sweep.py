#!/usr/bin/env python3
"""Host and final queue counts of the planar pipeline as n grows.

Prints one CSV row per (mode, n, seed).
"""

from __future__ import annotations

import argparse
import csv
import sys
import time

from layered_queues.generators import random_triangulation
from layered_queues.layout import planar_pipeline, validate_queue_layout


def main(argv=None) -> int:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--sizes", type=int, nargs="+", default=[100, 1000, 10_000])
    ap.add_argument("--seeds", type=int, default=3)
    ap.add_argument("--modes", nargs="+", default=["width1", "tripod"], choices=["width1", "tripod"])
    ap.add_argument("--assign", default="depth", choices=["depth", "structured"])
    args = ap.parse_args(argv)

    out = csv.writer(sys.stdout)
    out.writerow(["mode", "n", "seed", "td_width", "host_queues", "final_queues", "bound", "seconds"])
    for mode in args.modes:
        for n in args.sizes:
            for seed in range(args.seeds):
                emb = random_triangulation(n, seed=seed)
                start = time.perf_counter()
                res = planar_pipeline(emb.graph, mode, embedding=emb, strategy=args.assign)
                secs = time.perf_counter() - start
                rep = validate_queue_layout(emb.graph, res.layout)
                assert rep.is_valid, rep.first_violation
                out.writerow([mode, n, seed, res.td.width, res.host_queue_count,
                              rep.queue_count, res.bound, f"{secs:.2f}"])
                sys.stdout.flush()
    return 0


if __name__ == "__main__":
    sys.exit(main())
