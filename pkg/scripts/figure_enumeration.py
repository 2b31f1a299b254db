"""Enumerate singularity/tangency pairs and count them per figure entry."""
from __future__ import annotations

import argparse
from collections import Counter

from wahlkit.localint import FIGURES, case_one, enumerate_configs


def main() -> None:
    p = argparse.ArgumentParser(description=__doc__)
    p.add_argument("--n-max", type=int, default=10)
    p.add_argument("--k-max", type=int, default=5)
    p.add_argument("--show", help="print every configuration for this figure label")
    args = p.parse_args()
    records = [r for r in enumerate_configs(args.n_max, args.k_max) if case_one(r)]
    counts = Counter(r.figure for r in records)
    for label, m, sep, _ in FIGURES:
        print(f"{label:20s} mult {m} separation {sep}  {counts[label]:5d} configurations")
    print(f"total {len(records)}")
    if args.show:
        for r in records:
            if r.figure == args.show:
                print(r.to_json())


if __name__ == "__main__":
    main()
