"""Desk-scale audits: regime sweeps, constant-gap and bound-sandwich checks,
and a GDoF convergence probe.

Every study is deterministic given its parameters and seed. Random draws come
from a seeded counter-based generator (see GENERATOR_ID, also echoed in JSON
summaries); record generation is sequential, so identical invocations produce
identical record streams byte for byte.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .achievability import tdma_tin_gdof, tdma_tin_rate
from .bounds import gdof_ub, sum_capacity_ub
from .channel import AlphaMatrix
from .errors import AuditFailure, InvalidBeta, SamplerExhausted, ValidationError
from .regime import classify, in_extended_regime

GENERATOR_ID = "numpy.random.Generator(numpy.random.Philox(seed)) [philox4x64-10]"

# Tolerances the sandwich audit asserts: achievability may exceed the bound
# only by floating-point noise.
SANDWICH_RATE_TOL_BITS = 1e-9
SANDWICH_GDOF_TOL = 1e-12

SWEEP_COLUMNS = ("alpha21", "alpha12", "extended", "gsj", "d_tt", "gdof_ub", "witness")
GAP_COLUMNS = ("sample", "rho", "gap_bits", "ub_bits", "rate_bits")
SANDWICH_COLUMNS = ("sample", "rho", "rate_bits", "ub_bits", "d_tt", "d_ub")
CONVERGE_COLUMNS = ("rho", "rate_norm", "ub_norm", "d_tt", "d_ub")


@dataclass(frozen=True)
class SweepRecord:
    """One grid point of the symmetric-family regime sweep."""

    alpha21: float
    alpha12: float
    in_extended: bool
    in_gsj: bool
    d_tt: float
    gdof_ub: float
    witness: str | None


@dataclass(frozen=True)
class GapReport:
    """Summary of a constant-gap audit (bound minus achievable rate, in bits)."""

    n_samples: int
    rho_list: tuple[float, ...]
    max_gap_bits: float
    mean_gap_bits: float
    min_gap_bits: float
    argmax_alpha: AlphaMatrix
    all_within_7: bool
    seed: int


@dataclass(frozen=True)
class SandwichReport:
    """Worst observed violations of rate <= bound and GDoF <= GDoF bound."""

    n_samples: int
    seed: int
    rho_list: tuple[float, ...] | None
    rho_range: tuple[float, float]
    max_rate_violation_bits: float
    max_gdof_violation: float


@dataclass(frozen=True)
class ConvergenceRow:
    """Normalized rate/bound at one SNR next to their GDoF limits."""

    rho: float
    rate_norm: float
    ub_norm: float
    d_tt: float
    d_ub: float


def sweep_regime_plane(beta: float, step: float, range_max: float = 0.75,
                       tol: float = 0.0) -> list[SweepRecord]:
    """Classify the (alpha21, alpha12) plane of the symmetric family
    alpha = [[1, alpha12, beta], [alpha21, 1, beta]].

    Grid points are k*step for integer k with k*step <= range_max (endpoints
    inclusive, generated by index so record counts do not drift), emitted
    row-major: alpha21 outer, alpha12 inner. beta = 0.5 is accepted for the
    regime-coincidence check; otherwise 0.5 < beta < 1.

    Raises AuditFailure if any record violates regime inclusion or, inside
    the extended regime, the achievable-GDoF/bound equality.
    """
    b = float(beta)
    if not (0.5 <= b < 1.0):
        raise InvalidBeta(f"beta must satisfy 0.5 <= beta < 1, got {beta!r}")
    s = float(step)
    rng_max = float(range_max)
    if not (math.isfinite(s) and 0.0 < s <= rng_max):
        raise ValidationError(f"step must satisfy 0 < step <= range_max, got {step!r}")
    k_max = int(math.floor(rng_max / s + 1e-9))
    records: list[SweepRecord] = []
    for k21 in range(k_max + 1):
        a21 = k21 * s
        for k12 in range(k_max + 1):
            a12 = k12 * s
            alpha = AlphaMatrix(((1.0, a12, b), (a21, 1.0, b)))
            verdict = classify(alpha, tol=tol)
            d_tt = tdma_tin_gdof(alpha).value
            ub = gdof_ub(alpha).value
            if verdict.in_gsj and not verdict.in_extended:
                raise AuditFailure(f"regime inclusion violated at ({a21}, {a12})")
            if verdict.in_extended and abs(d_tt - ub) > 1e-12:
                raise AuditFailure(
                    f"in-regime GDoF mismatch at ({a21}, {a12}): {d_tt!r} vs {ub!r}")
            witness = verdict.witness_extended.label() if verdict.in_extended else None
            records.append(SweepRecord(a21, a12, verdict.in_extended,
                                       verdict.in_gsj, d_tt, ub, witness))
    return records


def _draw_alpha(rng: np.random.Generator, box: tuple[float, float]) -> AlphaMatrix:
    """One exponent grid with entries uniform on (lo, hi], drawn row-major."""
    lo, hi = box
    v = hi - (hi - lo) * rng.random(6)
    return AlphaMatrix(((v[0], v[1], v[2]), (v[3], v[4], v[5])))


def sample_in_regime(n: int, rng: np.random.Generator,
                     box: tuple[float, float] = (0.0, 2.0),
                     exhaustion_window: int = 1_000_000) -> list[AlphaMatrix]:
    """Rejection-sample n grids uniform on the box and inside the extended
    regime.

    Rejection keeps the accepted distribution exactly uniform on the regime.
    Raises SamplerExhausted once acceptance drops below 0.1% over the
    exhaustion window, which flags a misconfigured box instead of hanging.
    """
    if n < 1:
        raise ValidationError(f"n must be >= 1, got {n!r}")
    lo, hi = float(box[0]), float(box[1])
    if not (0.0 <= lo < hi):
        raise ValidationError(f"box must satisfy 0 <= lo < hi, got {box!r}")
    out: list[AlphaMatrix] = []
    trials = 0
    while len(out) < n:
        trials += 1
        alpha = _draw_alpha(rng, (lo, hi))
        if in_extended_regime(alpha) is not None:
            out.append(alpha)
        elif trials >= exhaustion_window and len(out) < 0.001 * trials:
            raise SamplerExhausted(
                f"acceptance {len(out)}/{trials} is below 0.1%; box {box!r} "
                "barely intersects the extended regime")
    return out


def _sample_symmetric_in_regime(n: int, rng: np.random.Generator,
                                exhaustion_window: int = 1_000_000) -> list[AlphaMatrix]:
    """Like sample_in_regime but restricted to the symmetric sweep family:
    alpha = [[1, a12, beta], [a21, 1, beta]] with beta in [0.5, 1) and
    a21, a12 in [0, 0.75). Draw order per candidate: beta, a21, a12."""
    out: list[AlphaMatrix] = []
    trials = 0
    while len(out) < n:
        trials += 1
        b = 0.5 + 0.5 * rng.random()
        a21 = 0.75 * rng.random()
        a12 = 0.75 * rng.random()
        alpha = AlphaMatrix(((1.0, a12, b), (a21, 1.0, b)))
        if in_extended_regime(alpha) is not None:
            out.append(alpha)
        elif trials >= exhaustion_window and len(out) < 0.001 * trials:
            raise SamplerExhausted(f"acceptance {len(out)}/{trials} is below 0.1%")
    return out


def gap_audit_with_rows(n: int, rho_list, seed: int, beta_free: bool = True,
                        box: tuple[float, float] = (0.0, 2.0),
                        exhaustion_window: int = 1_000_000):
    """Constant-gap audit; returns (GapReport, rows).

    Draws n exponent grids inside the extended regime (all six entries free
    over the box when beta_free, otherwise the symmetric two-parameter
    family), then evaluates gap = sum-capacity bound - TDMA-TIN rate at every
    SNR in rho_list. Rows are (sample, rho, gap_bits, ub_bits, rate_bits) in
    draw-major order. A gap above 7 bits is reported, never raised: the
    7-bit claim is exactly what the audit is for.
    """
    if n < 1:
        raise ValidationError(f"n must be >= 1, got {n!r}")
    rhos = tuple(float(r) for r in rho_list)
    if not rhos or any(not r > 1.0 for r in rhos):
        raise ValidationError(f"every rho must be > 1, got {rho_list!r}")
    rng = np.random.Generator(np.random.Philox(seed))
    if beta_free:
        samples = sample_in_regime(n, rng, box, exhaustion_window)
    else:
        samples = _sample_symmetric_in_regime(n, rng, exhaustion_window)
    rows = []
    max_gap = -math.inf
    min_gap = math.inf
    total = 0.0
    argmax_alpha = samples[0]
    for idx, alpha in enumerate(samples):
        for rho in rhos:
            ub = sum_capacity_ub(rho, alpha).value
            rate = tdma_tin_rate(rho, alpha).value
            gap = ub - rate
            rows.append((idx, rho, gap, ub, rate))
            total += gap
            if gap > max_gap:
                max_gap = gap
                argmax_alpha = alpha
            if gap < min_gap:
                min_gap = gap
    report = GapReport(
        n_samples=n,
        rho_list=rhos,
        max_gap_bits=max_gap,
        mean_gap_bits=total / len(rows),
        min_gap_bits=min_gap,
        argmax_alpha=argmax_alpha,
        all_within_7=max_gap <= 7.0,
        seed=seed,
    )
    return report, rows


def gap_audit(n: int, rho_list, seed: int, beta_free: bool = True,
              box: tuple[float, float] = (0.0, 2.0)) -> GapReport:
    """See gap_audit_with_rows; this variant drops the per-evaluation rows."""
    report, _ = gap_audit_with_rows(n, rho_list, seed, beta_free, box)
    return report


def sandwich_audit_with_rows(n: int, rho_list=None, seed: int = 0,
                             box: tuple[float, float] = (0.0, 2.0),
                             rho_range: tuple[float, float] = (10.0, 1e9)):
    """Unconditional achievability-vs-bound audit; returns (SandwichReport, rows).

    Exponent grids are drawn uniform on the box with no regime restriction.
    With rho_list=None each draw gets one SNR, log-uniform on rho_range
    (draw order per sample: six exponents, then the SNR); otherwise every
    draw is evaluated at each listed SNR. Rows are
    (sample, rho, rate_bits, ub_bits, d_tt, d_ub).
    """
    if n < 1:
        raise ValidationError(f"n must be >= 1, got {n!r}")
    lo, hi = float(box[0]), float(box[1])
    if not (0.0 <= lo < hi):
        raise ValidationError(f"box must satisfy 0 <= lo < hi, got {box!r}")
    rhos = None
    if rho_list is not None:
        rhos = tuple(float(r) for r in rho_list)
        if not rhos or any(not r > 1.0 for r in rhos):
            raise ValidationError(f"every rho must be > 1, got {rho_list!r}")
    lg_lo, lg_hi = math.log10(rho_range[0]), math.log10(rho_range[1])
    rng = np.random.Generator(np.random.Philox(seed))
    rows = []
    max_rate_violation = -math.inf
    max_gdof_violation = -math.inf
    for idx in range(n):
        alpha = _draw_alpha(rng, (lo, hi))
        sample_rhos = rhos if rhos is not None else (10.0 ** rng.uniform(lg_lo, lg_hi),)
        d_tt = tdma_tin_gdof(alpha).value
        d_ub = gdof_ub(alpha).value
        max_gdof_violation = max(max_gdof_violation, d_tt - d_ub)
        for rho in sample_rhos:
            rate = tdma_tin_rate(rho, alpha).value
            ub = sum_capacity_ub(rho, alpha).value
            max_rate_violation = max(max_rate_violation, rate - ub)
            rows.append((idx, rho, rate, ub, d_tt, d_ub))
    report = SandwichReport(
        n_samples=n,
        seed=seed,
        rho_list=rhos,
        rho_range=(float(rho_range[0]), float(rho_range[1])),
        max_rate_violation_bits=max_rate_violation,
        max_gdof_violation=max_gdof_violation,
    )
    return report, rows


def sandwich_audit(n: int, rho_list=None, seed: int = 0,
                   box: tuple[float, float] = (0.0, 2.0),
                   rho_range: tuple[float, float] = (10.0, 1e9)) -> SandwichReport:
    """See sandwich_audit_with_rows; this variant drops the rows."""
    report, _ = sandwich_audit_with_rows(n, rho_list, seed, box, rho_range)
    return report


def gdof_convergence_probe(alpha: AlphaMatrix, rho_list) -> list[ConvergenceRow]:
    """Normalized rate/bound table along a strictly increasing SNR list.

    Each row carries R/log2(rho) and UB/log2(rho) next to the GDoF pair they
    approach; the normalized rate stays within 2/log2(rho) of the achievable
    GDoF on both sides.
    """
    rhos = [float(r) for r in rho_list]
    if not rhos or any(not r > 1.0 for r in rhos):
        raise ValidationError(f"every rho must be > 1, got {rho_list!r}")
    if any(b <= a for a, b in zip(rhos, rhos[1:])):
        raise ValidationError("rho values must be strictly increasing")
    d_tt = tdma_tin_gdof(alpha).value
    d_ub = gdof_ub(alpha).value
    rows = []
    for rho in rhos:
        lg = math.log2(rho)
        rows.append(ConvergenceRow(
            rho=rho,
            rate_norm=tdma_tin_rate(rho, alpha).value / lg,
            ub_norm=sum_capacity_ub(rho, alpha).value / lg,
            d_tt=d_tt,
            d_ub=d_ub,
        ))
    return rows
