#!/usr/bin/env python3
"""Trace the collapse of the region as lambda -> 1 along lambda_k = 1 - 2^-k.

Prints the disk radius and the distance from the disk image to the
|lambda| = 1 singleton for each k, and optionally writes the table as CSV.

Usage:
    python scripts/radius_decay.py --A 0 --B 0.5 --z0 0.5,0 [--k-max 40] [--out decay.csv]
"""

import argparse

from varregion import EvalPoint, JanowskiParams, region_point, singleton_value, variability_disk
from varregion.cli import parse_complex


def run(argv=None):
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--A", type=float, default=0.0)
    ap.add_argument("--B", type=float, default=0.5)
    ap.add_argument("--z0", type=parse_complex, default=0.5 + 0j)
    ap.add_argument("--k-max", type=int, default=40)
    ap.add_argument("--out", default=None)
    args = ap.parse_args(argv)

    params = JanowskiParams(args.A, args.B)
    target = singleton_value(EvalPoint(args.z0, 1.0), params)
    print(f"singleton value at lambda = 1: {target.real:.12g} {target.imag:+.12g}i")
    rows = ["k,lambda,radius,distance_to_singleton"]
    print(f"{'k':>3} {'lambda':>22} {'radius':>13} {'dist to singleton':>18}")
    for k in range(1, args.k_max + 1):
        lam = 1.0 - 2.0**-k
        point = EvalPoint(args.z0, lam)
        r = variability_disk(point, params).radius
        d = abs(region_point(1.0, point, params) - target)
        print(f"{k:>3} {lam:>22.16f} {r:>13.6e} {d:>18.6e}")
        rows.append(f"{k},{lam:.17g},{r:.17g},{d:.17g}")
    if args.out:
        with open(args.out, "w", newline="\n") as fh:
            fh.write("\n".join(rows) + "\n")
        print(f"wrote {args.out}")


if __name__ == "__main__":
    run()
