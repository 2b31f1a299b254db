"""Dimension counts of the named loci, plus every admissible point configuration above a threshold."""
from __future__ import annotations

import argparse

from wahlkit.modulidim import D_IN_B, NAMED_TYPES, enumerate_specs, locus_dimension


def main() -> None:
    p = argparse.ArgumentParser(description=__doc__)
    p.add_argument("--min-dim", type=int, default=38)
    args = p.parse_args()
    for label, spec in NAMED_TYPES.items():
        print(f"{label:6s} {locus_dimension(spec).formula()}")
    print(f"{'DsubB':6s} {locus_dimension(D_IN_B).formula()}")
    print(f"\nadmissible configurations of dimension >= {args.min_dim}:")
    for spec, rep in enumerate_specs(args.min_dim):
        print(f"  {rep.type_label or '?':6s} {spec.signature()}  {rep.total}")


if __name__ == "__main__":
    main()
