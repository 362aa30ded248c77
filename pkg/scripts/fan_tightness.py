#!/usr/bin/env python3
"""How often does a random layered-width-1 partition of the fan force a triangle in its quotient?"""

from __future__ import annotations

import argparse
import sys
import time

from layered_queues.oracle import sampled_fan_tightness


def main(argv=None) -> int:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--samples", type=int, default=100_000)
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args(argv)
    start = time.perf_counter()
    hits, samples = sampled_fan_tightness(args.samples, args.seed)
    print(f"{hits}/{samples} sampled partitions have a triangle in the quotient "
          f"({time.perf_counter() - start:.1f} s)")
    return 0 if hits == samples else 1


if __name__ == "__main__":
    sys.exit(main())
