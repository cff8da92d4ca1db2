#!/usr/bin/env python3
"""Write ordinates of the first N nontrivial zeta zeros, one per line.

Output matches the usual plain-text zero tables (one decimal ordinate per
line). Requires python-flint (arb's rigorous zero isolation).
"""
import argparse
import sys
from decimal import Decimal

import flint


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--count", type=int, default=100000)
    ap.add_argument("--digits", type=int, default=12)
    ap.add_argument("--batch", type=int, default=1000)
    ap.add_argument("--out", default="-")
    args = ap.parse_args()

    flint.ctx.prec = 80
    out = sys.stdout if args.out == "-" else open(args.out, "w")
    n = 1
    while n <= args.count:
        k = min(args.batch, args.count - n + 1)
        for z in flint.acb.zeta_zeros(n, k):
            gamma = Decimal(z.imag.mid().str(args.digits + 10, radius=False, more=True))
            out.write(f"{gamma:.{args.digits}f}\n")
        n += k
        print(f"{n - 1} zeros", file=sys.stderr)
    if out is not sys.stdout:
        out.close()


if __name__ == "__main__":
    main()
