"""Switching-graph connectivity and glue-and-cut paths.

Checks that the switching graph on all cube tiling codes over two letter
pairs is connected in dimensions 2 and 3, and prints shortest glue/cut move
logs between the two halves of each five-dimensional form.

    python3 scripts/move_graphs.py
"""
from __future__ import annotations

import time

from tilekit.core import project
from tilekit.cover import all_tiling_codes
from tilekit.gluecut import connectivity, find_path
from tilekit.planes import FIVE_DIM_FORMS


def main() -> None:
    for d in (2, 3):
        t = time.perf_counter()
        codes = all_tiling_codes(d, 2)
        comps = connectivity(codes, 2)
        print(f"d={d}: {len(codes)} codes, {len(comps)} component(s), "
              f"{time.perf_counter() - t:.2f} s")

    for i, (f1, f2) in sorted(FIVE_DIM_FORMS.items()):
        p1, p2 = project(f1, 0), project(f2, 0)
        moves = find_path(p1, p2, mode="gluecut")
        print(f"\nform {i}: {len(moves)} moves")
        for m in moves:
            print(f"  {m}")


if __name__ == "__main__":
    main()
