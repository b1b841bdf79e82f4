#!/usr/bin/env python3
"""Regime sweeps over the symmetric (alpha21, alpha12) plane.

Writes one CSV per beta plus a JSON summary, and cross-checks each sweep's
membership columns against the closed union-of-rectangles geometry
([0, 0.5] x [0, 1-beta]) u ([0, 1-beta] x [0, 0.5]) for the extended regime
and [0, 1-beta]^2 for the stricter reference regime.
"""
import argparse
import sys
import time
from pathlib import Path

from xctin.cli import emit_report
from xctin.experiments import SWEEP_COLUMNS, sweep_regime_plane


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--betas", default="0.5,0.6,0.75,0.9",
                        help="comma-separated beta values (default 0.5,0.6,0.75,0.9)")
    parser.add_argument("--step", type=float, default=0.005)
    parser.add_argument("--range-max", type=float, default=0.75)
    parser.add_argument("--outdir", default="results")
    args = parser.parse_args()

    outdir = Path(args.outdir)
    outdir.mkdir(parents=True, exist_ok=True)
    status = 0
    for beta in (float(b) for b in args.betas.split(",")):
        t0 = time.perf_counter()
        records = sweep_regime_plane(beta, args.step, args.range_max)
        elapsed = time.perf_counter() - t0

        k_half = round(0.5 / args.step)
        k_beta = round((1.0 - beta) / args.step)
        mismatches = 0
        for rec in records:
            k21 = round(rec.alpha21 / args.step)
            k12 = round(rec.alpha12 / args.step)
            want_ext = (k21 <= k_half and k12 <= k_beta) or (k21 <= k_beta and k12 <= k_half)
            want_gsj = k21 <= k_beta and k12 <= k_beta
            mismatches += (rec.in_extended != want_ext) + (rec.in_gsj != want_gsj)

        rows = [(r.alpha21, r.alpha12, r.in_extended, r.in_gsj, r.d_tt, r.gdof_ub, r.witness)
                for r in records]
        csv_path = outdir / f"regime_sweep_beta{beta:g}.csv"
        csv_path.write_bytes(emit_report({"columns": SWEEP_COLUMNS, "rows": rows}, "csv"))
        summary = {
            "beta": beta,
            "step": args.step,
            "range_max": args.range_max,
            "n_records": len(records),
            "n_extended": sum(1 for r in records if r.in_extended),
            "n_gsj": sum(1 for r in records if r.in_gsj),
            "geometry_mismatches": mismatches,
            "elapsed_s": elapsed,
        }
        (outdir / f"regime_sweep_beta{beta:g}.json").write_bytes(emit_report(summary, "json"))
        print(f"beta={beta:g}: {len(records)} records, {summary['n_extended']} extended, "
              f"{summary['n_gsj']} reference, {mismatches} geometry mismatches, {elapsed:.2f}s")
        if mismatches:
            status = 3
    return status


if __name__ == "__main__":
    sys.exit(main())
