#!/usr/bin/env python3
"""Normalized rate/bound table along an SNR list for one exponent grid.

Shows R/log2(rho) and UB/log2(rho) closing on their GDoF limits; the
normalized rate must stay within 2/log2(rho) of the achievable GDoF.
"""
import argparse
import math
import sys

from xctin.channel import AlphaMatrix, rho_from_db
from xctin.experiments import gdof_convergence_probe


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--alpha", default="1,0.2,0.75,0.4,1,0.75",
                        help="six exponents, row-major (default: an in-regime point)")
    parser.add_argument("--rho-db", default="40,60,90")
    args = parser.parse_args()

    values = [float(x) for x in args.alpha.split(",")]
    alpha = AlphaMatrix.from_rows((values[:3], values[3:]))
    rhos = [rho_from_db(float(db)) for db in args.rho_db.split(",")]
    rows = gdof_convergence_probe(alpha, rhos)

    print(f"{'rho':>12} {'R/log2(rho)':>14} {'UB/log2(rho)':>14} {'d_tt':>8} {'d_ub':>8} {'corridor':>10}")
    ok = True
    for r in rows:
        corridor = 2.0 / math.log2(r.rho)
        inside = abs(r.rate_norm - r.d_tt) <= corridor
        ok = ok and inside
        print(f"{r.rho:12.4g} {r.rate_norm:14.8f} {r.ub_norm:14.8f} "
              f"{r.d_tt:8.4f} {r.d_ub:8.4f} {corridor:10.6f}{'' if inside else '  <-- out'}")
    return 0 if ok else 3


if __name__ == "__main__":
    sys.exit(main())
