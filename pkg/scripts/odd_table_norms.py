"""Weight, norm and dominance for each row of the odd-case intersection table."""
from __future__ import annotations

import argparse

from wahlkit._linalg import frac_str
from wahlkit.ade import build, is_dominant, norm2, weight_of_divisor
from wahlkit.tables import odd_rows_expanded


def main() -> None:
    p = argparse.ArgumentParser(description=__doc__)
    p.add_argument("--sweep-to", type=int, default=8, help="largest rank for rows with a free index")
    args = p.parse_args()
    for row, n in odd_rows_expanded(args.sweep_to):
        rs = build(row.family, n)
        w = weight_of_divisor(rs, row.intersections(n))
        flag = "" if row.printed_ok else "  (corrected)"
        print(f"{row.row_id:8s} {rs.name:4s} norm {frac_str(norm2(rs, w)):2s} dominant {is_dominant(rs, w)!s:5s} {w!r}{flag}")


if __name__ == "__main__":
    main()
