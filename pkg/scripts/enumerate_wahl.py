"""Print every Wahl string up to a given length with (n, a) and discrepancies."""
from __future__ import annotations

import argparse

from wahlkit._linalg import frac_str
from wahlkit.qsing import classify, discrepancies, enumerate_wahl


def main() -> None:
    p = argparse.ArgumentParser(description=__doc__)
    p.add_argument("--max-length", type=int, default=5)
    args = p.parse_args()
    for t in enumerate_wahl(args.max_length):
        c = classify(t)
        ds = ", ".join(frac_str(d) for d in discrepancies(t))
        print(f"{str(list(t.entries)):28s} n={c.n:<4d} a={c.a:<4d} {ds}")


if __name__ == "__main__":
    main()
