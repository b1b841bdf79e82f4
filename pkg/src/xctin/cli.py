"""Command-line front end.

Commands
    eval            TDMA-TIN rate, sum-capacity bound, and their gap at a point
    classify        regime memberships and certified GDoF of one exponent grid
    bound           per-ordering sum-capacity upper-bound profile
    gdof            per-ordering GDoF upper-bound profile plus achievable GDoF
    sweep           regime sweep over the symmetric (alpha21, alpha12) plane
    gap-audit       seeded constant-gap audit (7-bit check)
    sandwich-audit  seeded achievability-vs-bound sandwich audit
    converge        normalized rate/bound table along an increasing SNR list

Exit codes: 0 success, 1 I/O error, 2 validation error, 3 audit property
failure. Data go to stdout or --out; diagnostics go to stderr only, never
into the data stream. Reals are serialized with 12 significant digits, so
reruns with identical inputs are byte-identical.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import math
import sys
from dataclasses import dataclass

from . import experiments
from .achievability import tdma_tin_gdof, tdma_tin_rate
from .bounds import gdof_ub, sum_capacity_ub
from .channel import (DEFAULT_ALPHA_CAP, AlphaMatrix, load_scenario,
                      rho_from_db, validate_scenario)
from .errors import (AuditFailure, DegenerateSnr, UnsupportedFormat,
                     ValidationError)
from .experiments import (CONVERGE_COLUMNS, GAP_COLUMNS, GENERATOR_ID,
                          SANDWICH_COLUMNS, SANDWICH_GDOF_TOL,
                          SANDWICH_RATE_TOL_BITS, SWEEP_COLUMNS)
from .regime import classify


@dataclass(frozen=True)
class CliInvocation:
    """One parsed command invocation; parameters unused by a command are ignored."""

    command: str
    scenario_path: str | None = None
    rho_db: tuple[float, ...] | None = None
    alpha: tuple[float, ...] | None = None
    beta: float = 0.75
    step: float = 0.005
    n: int | None = None
    seed: int = 0
    out: str | None = None
    format: str | None = None
    tolerance: float = 0.0


# ---------------------------------------------------------------- serialization

def _round12(x: float) -> float:
    return float(format(x, ".12g"))


def _jsonify(value):
    if isinstance(value, bool) or value is None or isinstance(value, (str, int)):
        return value
    if isinstance(value, float):
        return _round12(value)
    if isinstance(value, AlphaMatrix):
        return [[_round12(x) for x in row] for row in value.a]
    if isinstance(value, dict):
        return {k: _jsonify(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [_jsonify(v) for v in value]
    raise UnsupportedFormat(f"cannot serialize {type(value).__name__} to JSON")


def _csv_cell(v) -> str:
    if v is None:
        return ""
    if isinstance(v, bool):
        return "true" if v else "false"
    if isinstance(v, float):
        return format(v, ".12g")
    return str(v)


def emit_report(results, format: str) -> bytes:
    """Serialize a results payload to bytes.

    "csv" renders results["columns"] and results["rows"]; "json" renders the
    whole payload with its construction field order. Reals carry 12
    significant digits in both formats, so equal results serialize to equal
    bytes.
    """
    if format == "csv":
        if not isinstance(results, dict) or "columns" not in results or "rows" not in results:
            raise UnsupportedFormat("csv serialization needs 'columns' and 'rows'")
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(results["columns"])
        for row in results["rows"]:
            writer.writerow([_csv_cell(v) for v in row])
        return buf.getvalue().encode("utf-8")
    if format == "json":
        return (json.dumps(_jsonify(results), indent=2) + "\n").encode("utf-8")
    raise UnsupportedFormat(f"unsupported format: {format!r}")


# ---------------------------------------------------------------- input resolution

def _resolve_alpha(inv: CliInvocation):
    """Exponent grid from --scenario or --alpha; returns (alpha, scenario_rho)."""
    if inv.scenario_path is not None and inv.alpha is not None:
        raise ValidationError("give either --scenario or --alpha, not both")
    if inv.scenario_path is not None:
        scenario = load_scenario(inv.scenario_path)
        return validate_scenario(scenario), scenario.rho
    if inv.alpha is None:
        raise ValidationError("this command needs --scenario or --alpha")
    alpha = AlphaMatrix.from_rows((inv.alpha[:3], inv.alpha[3:]))
    for j in (1, 2):
        for i in (1, 2, 3):
            if alpha.entry(j, i) > DEFAULT_ALPHA_CAP:
                raise ValidationError(
                    f"alpha[{j}][{i}] exceeds the cap {DEFAULT_ALPHA_CAP}")
    return alpha, None


def _single_rho(inv: CliInvocation, scenario_rho: float | None) -> float:
    if scenario_rho is not None:
        if inv.rho_db is not None:
            raise ValidationError("--rho-db conflicts with --scenario (the file carries rho_db)")
        return scenario_rho
    if inv.rho_db is None or len(inv.rho_db) != 1:
        raise ValidationError("this command needs exactly one --rho-db value")
    rho = rho_from_db(inv.rho_db[0])
    if rho <= 1.0:
        raise DegenerateSnr(f"rho_db must be > 0 dB, got {inv.rho_db[0]!r}")
    return rho


def _rho_list_from_db(values) -> tuple[float, ...]:
    rhos = tuple(rho_from_db(db) for db in values)
    if any(r <= 1.0 for r in rhos):
        raise DegenerateSnr(f"every rho_db must be > 0 dB, got {values!r}")
    return rhos


# ---------------------------------------------------------------- command handlers

def _cmd_eval(inv: CliInvocation):
    alpha, scenario_rho = _resolve_alpha(inv)
    rho = _single_rho(inv, scenario_rho)
    rate = tdma_tin_rate(rho, alpha)
    ub = sum_capacity_ub(rho, alpha)
    gap = ub.value - rate.value
    doc = {
        "command": "eval",
        "rho": rho,
        "rate_bits": rate.value,
        "rate_argmax": list(rate.argmax.as_tuple()),
        "ub_bits": ub.value,
        "ub_argmin": list(ub.argmin.as_tuple()),
        "gap_bits": gap,
    }
    columns = ("rho", "rate_bits", "rate_argmax", "ub_bits", "ub_argmin", "gap_bits")
    rows = [(rho, rate.value, rate.argmax.label(), ub.value, ub.argmin.label(), gap)]
    return doc, columns, rows, None, True


def _cmd_classify(inv: CliInvocation):
    alpha, _ = _resolve_alpha(inv)
    verdict = classify(alpha, tol=inv.tolerance)
    we = verdict.witness_extended
    wg = verdict.witness_gsj
    doc = {
        "command": "classify",
        "extended": verdict.in_extended,
        "gsj": verdict.in_gsj,
        "gdof": verdict.gdof_value,
        "witness_extended": list(we.as_tuple()) if we is not None else None,
        "witness_gsj": list(wg.as_tuple()) if wg is not None else None,
    }
    columns = ("extended", "gsj", "gdof", "witness_extended", "witness_gsj")
    rows = [(verdict.in_extended, verdict.in_gsj, verdict.gdof_value,
             we.label() if we is not None else None,
             wg.label() if wg is not None else None)]
    return doc, columns, rows, None, True


def _cmd_bound(inv: CliInvocation):
    alpha, scenario_rho = _resolve_alpha(inv)
    rho = _single_rho(inv, scenario_rho)
    result = sum_capacity_ub(rho, alpha)
    doc = {
        "command": "bound",
        "rho": rho,
        "min_bits": result.value,
        "argmin": list(result.argmin.as_tuple()),
        "per_perm": [{"perm": list(p.as_tuple()), "bound_bits": v}
                     for p, v in result.per_perm],
    }
    columns = ("perm", "bound_bits")
    rows = [(p.label(), v) for p, v in result.per_perm]
    return doc, columns, rows, None, True


def _cmd_gdof(inv: CliInvocation):
    alpha, _ = _resolve_alpha(inv)
    ub = gdof_ub(alpha)
    ach = tdma_tin_gdof(alpha)
    doc = {
        "command": "gdof",
        "tdma_tin_gdof": ach.value,
        "tdma_tin_argmax": list(ach.argmax.as_tuple()),
        "gdof_ub": ub.value,
        "argmin": list(ub.argmin.as_tuple()),
        "per_perm": [{"perm": list(p.as_tuple()), "gdof_ub": v}
                     for p, v in ub.per_perm],
    }
    columns = ("perm", "gdof_ub")
    rows = [(p.label(), v) for p, v in ub.per_perm]
    return doc, columns, rows, None, True


def _cmd_sweep(inv: CliInvocation):
    records = experiments.sweep_regime_plane(inv.beta, inv.step, tol=inv.tolerance)
    rows = [(r.alpha21, r.alpha12, r.in_extended, r.in_gsj, r.d_tt, r.gdof_ub, r.witness)
            for r in records]
    summary = {
        "command": "sweep",
        "beta": inv.beta,
        "step": inv.step,
        "range_max": 0.75,
        "tolerance": inv.tolerance,
        "n_records": len(records),
        "n_extended": sum(1 for r in records if r.in_extended),
        "n_gsj": sum(1 for r in records if r.in_gsj),
    }
    doc = {"summary": summary, "records": [dict(zip(SWEEP_COLUMNS, row)) for row in rows]}
    return doc, SWEEP_COLUMNS, rows, summary, True


def _cmd_gap_audit(inv: CliInvocation):
    n = inv.n if inv.n is not None else 1000
    rhos = _rho_list_from_db(inv.rho_db) if inv.rho_db is not None else \
        tuple(rho_from_db(db) for db in (20.0, 40.0, 60.0))
    report, rows = experiments.gap_audit_with_rows(n, rhos, inv.seed)
    summary = {
        "command": "gap-audit",
        "generator": GENERATOR_ID,
        "n_samples": report.n_samples,
        "rho_list": list(report.rho_list),
        "seed": report.seed,
        "max_gap_bits": report.max_gap_bits,
        "mean_gap_bits": report.mean_gap_bits,
        "min_gap_bits": report.min_gap_bits,
        "all_within_7": report.all_within_7,
        "argmax_alpha": report.argmax_alpha,
    }
    doc = {"summary": summary, "records": [dict(zip(GAP_COLUMNS, row)) for row in rows]}
    audit_ok = report.all_within_7 and report.min_gap_bits > 0.0
    return doc, GAP_COLUMNS, rows, summary, audit_ok


def _cmd_sandwich_audit(inv: CliInvocation):
    n = inv.n if inv.n is not None else 10000
    rhos = _rho_list_from_db(inv.rho_db) if inv.rho_db is not None else None
    report, rows = experiments.sandwich_audit_with_rows(n, rhos, inv.seed)
    summary = {
        "command": "sandwich-audit",
        "generator": GENERATOR_ID,
        "n_samples": report.n_samples,
        "seed": report.seed,
        "rho_list": list(report.rho_list) if report.rho_list is not None else None,
        "rho_range": list(report.rho_range),
        "max_rate_violation_bits": report.max_rate_violation_bits,
        "max_gdof_violation": report.max_gdof_violation,
        "rate_tol_bits": SANDWICH_RATE_TOL_BITS,
        "gdof_tol": SANDWICH_GDOF_TOL,
    }
    doc = {"summary": summary, "records": [dict(zip(SANDWICH_COLUMNS, row)) for row in rows]}
    audit_ok = (report.max_rate_violation_bits <= SANDWICH_RATE_TOL_BITS
                and report.max_gdof_violation <= SANDWICH_GDOF_TOL)
    return doc, SANDWICH_COLUMNS, rows, summary, audit_ok


def _cmd_converge(inv: CliInvocation):
    alpha, _ = _resolve_alpha(inv)
    rhos = _rho_list_from_db(inv.rho_db) if inv.rho_db is not None else \
        tuple(rho_from_db(db) for db in (40.0, 60.0, 90.0))
    probe = experiments.gdof_convergence_probe(alpha, rhos)
    rows = [(r.rho, r.rate_norm, r.ub_norm, r.d_tt, r.d_ub) for r in probe]
    summary = {
        "command": "converge",
        "rho_list": list(rhos),
        "d_tt": probe[0].d_tt,
        "d_ub": probe[0].d_ub,
    }
    doc = {"summary": summary, "records": [dict(zip(CONVERGE_COLUMNS, row)) for row in rows]}
    audit_ok = all(
        abs(r.rate_norm - r.d_tt) <= 2.0 / math.log2(r.rho) + 1e-9
        and r.ub_norm >= r.rate_norm - 1e-12
        for r in probe
    )
    return doc, CONVERGE_COLUMNS, rows, summary, audit_ok


_HANDLERS = {
    "eval": _cmd_eval,
    "classify": _cmd_classify,
    "bound": _cmd_bound,
    "gdof": _cmd_gdof,
    "sweep": _cmd_sweep,
    "gap-audit": _cmd_gap_audit,
    "sandwich-audit": _cmd_sandwich_audit,
    "converge": _cmd_converge,
}

_DEFAULT_FORMAT = {
    "eval": "json",
    "classify": "json",
    "bound": "json",
    "gdof": "json",
    "sweep": "csv",
    "gap-audit": "csv",
    "sandwich-audit": "csv",
    "converge": "csv",
}


# ---------------------------------------------------------------- driver

def _write(data: bytes, out_path: str | None, stream) -> None:
    if out_path is None:
        stream.write(data.decode("utf-8"))
    else:
        with open(out_path, "wb") as fh:
            fh.write(data)


def run(inv: CliInvocation, stdout=None, stderr=None) -> int:
    """Execute one invocation; returns the process exit code.

    With --format csv and --out, the record stream goes to the file and the
    JSON summary (when the command has one) goes to stdout; csv on stdout
    stays pure records. --format json emits one document holding summary and
    records together.
    """
    out_stream = stdout if stdout is not None else sys.stdout
    err_stream = stderr if stderr is not None else sys.stderr
    handler = _HANDLERS.get(inv.command)
    if handler is None:
        print(f"error: unknown command {inv.command!r}", file=err_stream)
        return 2
    fmt = inv.format if inv.format is not None else _DEFAULT_FORMAT[inv.command]
    try:
        doc, columns, rows, summary, audit_ok = handler(inv)
        if fmt == "json":
            _write(emit_report(doc, "json"), inv.out, out_stream)
        elif fmt == "csv":
            _write(emit_report({"columns": columns, "rows": rows}, "csv"),
                   inv.out, out_stream)
            if inv.out is not None and summary is not None:
                _write(emit_report(summary, "json"), None, out_stream)
        else:
            raise UnsupportedFormat(f"unsupported format: {fmt!r}")
    except AuditFailure as exc:
        print(f"audit failure: {exc}", file=err_stream)
        return 3
    except ValidationError as exc:
        print(f"error: {exc}", file=err_stream)
        return 2
    except OSError as exc:
        print(f"i/o error: {exc}", file=err_stream)
        return 1
    return 0 if audit_ok else 3


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="xctin",
        description="TDMA-TIN rates, genie-aided capacity bounds, and "
                    "noisy-interference regime audits for the 3x2 Gaussian X channel.",
    )
    sub = parser.add_subparsers(dest="command", required=True, metavar="command")
    helps = {
        "eval": "rate, bound, and gap at one channel point",
        "classify": "regime memberships and certified GDoF",
        "bound": "per-ordering sum-capacity bound profile",
        "gdof": "per-ordering GDoF bound profile",
        "sweep": "regime sweep over the symmetric (alpha21, alpha12) plane",
        "gap-audit": "seeded constant-gap (7-bit) audit",
        "sandwich-audit": "seeded rate-vs-bound sandwich audit",
        "converge": "normalized rate/bound table along an SNR list",
    }
    for name, text in helps.items():
        p = sub.add_parser(name, help=text)
        p.add_argument("--scenario", metavar="PATH", default=None,
                       help="scenario JSON file ({rho_db, gains|alpha})")
        p.add_argument("--rho-db", metavar="DB[,DB...]", default=None,
                       help="SNR in dB; comma-separated list for audits/converge "
                            "(defaults: gap-audit 20,40,60; converge 40,60,90; "
                            "sandwich-audit samples log-uniform over [10, 90] dB)")
        p.add_argument("--alpha", metavar="A11,A12,A13,A21,A22,A23", default=None,
                       help="exponent grid, row-major (receiver 1 first)")
        p.add_argument("--beta", type=float, default=0.75,
                       help="sweep family cross exponent, 0.5 <= beta < 1 (default 0.75)")
        p.add_argument("--step", type=float, default=0.005,
                       help="sweep grid step (default 0.005)")
        p.add_argument("--n", type=int, default=None,
                       help="audit sample count (default: 1000 gap-audit, "
                            "10000 sandwich-audit)")
        p.add_argument("--seed", type=int, default=0,
                       help="audit PRNG seed (default 0)")
        p.add_argument("--out", metavar="PATH", default=None,
                       help="write data to PATH instead of stdout; with csv, the "
                            "JSON summary then goes to stdout")
        p.add_argument("--format", choices=("csv", "json"), default=None,
                       help="output format (default: json for point commands, "
                            "csv for sweep/audits/converge)")
        p.add_argument("--tolerance", type=float, default=0.0,
                       help="closed-boundary slack for regime classification (default 0)")
    return parser


def _parse_float_list(text: str, flag: str) -> tuple[float, ...]:
    try:
        values = tuple(float(part) for part in text.split(","))
    except ValueError:
        raise ValidationError(f"{flag} expects comma-separated numbers, got {text!r}") from None
    if not values:
        raise ValidationError(f"{flag} must not be empty")
    return values


def _invocation_from_namespace(ns: argparse.Namespace) -> CliInvocation:
    rho_db = _parse_float_list(ns.rho_db, "--rho-db") if ns.rho_db is not None else None
    alpha = None
    if ns.alpha is not None:
        alpha = _parse_float_list(ns.alpha, "--alpha")
        if len(alpha) != 6:
            raise ValidationError(f"--alpha needs six values, got {len(alpha)}")
    return CliInvocation(
        command=ns.command,
        scenario_path=ns.scenario,
        rho_db=rho_db,
        alpha=alpha,
        beta=ns.beta,
        step=ns.step,
        n=ns.n,
        seed=ns.seed,
        out=ns.out,
        format=ns.format,
        tolerance=ns.tolerance,
    )


def main(argv=None) -> int:
    parser = build_parser()
    ns = parser.parse_args(argv)
    try:
        inv = _invocation_from_namespace(ns)
    except ValidationError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    return run(inv)


if __name__ == "__main__":
    sys.exit(main())
