"""Tabulate dimension coincidences between two Cartan classes and screen each one.

Shows how rarely dimensions collide, and which collisions the polynomial and
homotopy stages separate.

    python scripts/class_scan_table.py A B --max-rank 200
"""

import argparse
import time

from qubitgroups.cartan import CartanClass, catalog, dimension
from qubitgroups.screener import screen


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("x")
    ap.add_argument("y")
    ap.add_argument("--max-rank", type=int, default=100)
    args = ap.parse_args()
    cx, cy = CartanClass(args.x.upper()), CartanClass(args.y.upper())

    t0 = time.perf_counter()
    ys = {}
    for g in catalog(args.max_rank, (cy,)):
        ys.setdefault(dimension(g), []).append(g)

    print(f"{'pair':<22}{'dim':>8}  {'first b_q diff':<18}{'pi witness':<14}verdict")
    for gx in catalog(args.max_rank, (cx,)):
        for gy in ys.get(dimension(gx), ()):
            r = screen(gx, gy)
            diff = "-" if r.poly.equal else f"q={r.poly.degree} ({r.poly.a},{r.poly.b})"
            w = r.homotopy_witness
            wit = "-" if w is None else f"k={w.k} ({w.value_a},{w.value_b})"
            print(f"{gx.name + ' / ' + gy.name:<22}{r.dim_a:>8}  {diff:<18}{wit:<14}{r.verdict.value}")
    print(f"\n{time.perf_counter() - t0:.2f} s")


if __name__ == "__main__":
    main()
