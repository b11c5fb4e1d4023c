"""Print every named triangle, and the polynomial first columns, to stdout."""

from __future__ import annotations

import argparse

from triangle_forge.cli import render_triangle
from triangle_forge.constructions import TriangleId, flat_step_polynomial, named_triangle, tangent_polynomial


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--rows", type=int, default=7)
    args = ap.parse_args()
    for tid in TriangleId:
        if tid in (TriangleId.THM_3_2_POLY, TriangleId.THM_5_3_POLY):
            continue
        print(f"== {tid.value}")
        print(render_triangle(named_triangle(tid, args.rows), "plain"))
    print("== flat-step polynomials (first column of thm-3-2)")
    for n in range(args.rows):
        print(f"n={n}: {flat_step_polynomial(n)}")
    print("\n== tangent polynomials (first column of thm-5-3)")
    for n in range(args.rows):
        print(f"n={n}: {tangent_polynomial(n)}")


if __name__ == "__main__":
    main()
