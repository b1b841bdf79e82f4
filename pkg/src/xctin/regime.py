"""Noisy-interference regime classification for the 3x2 X channel.

An exponent grid sits in the extended noisy-interference regime when some
ordering p = (i1, i2, i3, j1, j2) of transmitters and receivers satisfies

    a[j1][i1] - a[j2][i1] >= psi(alpha, p)
    a[j2][i2] - a[j1][i2] >= max{a[j2][i1], a[j2][i3]}

with the threshold psi = max{a[j1][i3] - (a[j2][i3] - a[j2][i1])^+,
a[j1][i2]}. Inside the regime TDMA-TIN attains the channel's GDoF,

    a[j1][i1] - a[j2][i1] + a[j2][i2] - a[j1][i2],

and the sum capacity within a constant gap. The stricter reference regime
(tagged ``gsj`` in all outputs) replaces psi by max{a[j1][i3], a[j1][i2]},
which is never smaller, so it is contained in the extended regime.

This module also hosts the hypothesis checker for the one-bit entropy-gap
side condition that underpins the mixing (d = 1) branches of the
side-information bound.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .bounds import PERMUTATIONS, TxPermutation, genie_params
from .channel import AlphaMatrix
from .errors import NotApplicable, ValidationError


@dataclass(frozen=True)
class RegimeVerdict:
    """Memberships, their witness orderings, and the certified GDoF.

    in_gsj implies in_extended (regime inclusion). gdof_value is present
    exactly when in_extended holds and is evaluated at the extended witness.
    """

    in_extended: bool
    in_gsj: bool
    witness_extended: TxPermutation | None
    witness_gsj: TxPermutation | None
    gdof_value: float | None


@dataclass(frozen=True)
class AuxChannelPair:
    """Power gains of two noisy observations of one transmit pair.

    Models Y_A = h1*X_A + h2*X_B + Z_A and Y_B = h3*X_A + h4*X_B + Z_B with
    unit-variance noises and per-symbol power rho on each input; only the
    squared magnitudes matter.
    """

    h1_sq: float
    h2_sq: float
    h3_sq: float
    h4_sq: float
    rho: float

    def __post_init__(self):
        for name in ("h1_sq", "h2_sq", "h3_sq", "h4_sq"):
            v = getattr(self, name)
            if not (math.isfinite(v) and v >= 0.0):
                raise ValidationError(f"{name} must be finite and >= 0, got {v!r}")
        if not (math.isfinite(self.rho) and self.rho > 1.0):
            raise ValidationError(f"rho must be finite and > 1, got {self.rho!r}")


def psi(alpha: AlphaMatrix, p: TxPermutation) -> float:
    """Threshold max{a[j1][i3] - (a[j2][i3] - a[j2][i1])^+, a[j1][i2]}.

    The first argument can go negative and is deliberately not clipped; the
    outer max with a[j1][i2] >= 0 makes clipping immaterial.
    """
    a = alpha.a
    diff = a[p.j2 - 1][p.i3 - 1] - a[p.j2 - 1][p.i1 - 1]
    first = a[p.j1 - 1][p.i3 - 1] - (diff if diff > 0.0 else 0.0)
    second = a[p.j1 - 1][p.i2 - 1]
    return first if first > second else second


def in_extended_regime(alpha: AlphaMatrix, tol: float = 0.0) -> TxPermutation | None:
    """First ordering (lexicographic) meeting both regime conditions, or None.

    Boundaries are closed (>=); tol adds slack for classifying near-boundary
    floating-point points consistently (default 0: take the conditions
    literally).
    """
    a = alpha.a
    for p in PERMUTATIONS:
        cross1 = a[p.j2 - 1][p.i1 - 1]
        cross3 = a[p.j2 - 1][p.i3 - 1]
        hi = cross1 if cross1 > cross3 else cross3
        if (a[p.j1 - 1][p.i1 - 1] - cross1 + tol >= psi(alpha, p)
                and a[p.j2 - 1][p.i2 - 1] - a[p.j1 - 1][p.i2 - 1] + tol >= hi):
            return p
    return None


def in_gsj_regime(alpha: AlphaMatrix, tol: float = 0.0) -> TxPermutation | None:
    """Witness for the stricter reference regime (threshold without the
    positive-part reduction), or None."""
    a = alpha.a
    for p in PERMUTATIONS:
        t1 = a[p.j1 - 1][p.i3 - 1]
        t2 = a[p.j1 - 1][p.i2 - 1]
        thr = t1 if t1 > t2 else t2
        cross1 = a[p.j2 - 1][p.i1 - 1]
        cross3 = a[p.j2 - 1][p.i3 - 1]
        hi = cross1 if cross1 > cross3 else cross3
        if (a[p.j1 - 1][p.i1 - 1] - cross1 + tol >= thr
                and a[p.j2 - 1][p.i2 - 1] - a[p.j1 - 1][p.i2 - 1] + tol >= hi):
            return p
    return None


def classify(alpha: AlphaMatrix, tol: float = 0.0) -> RegimeVerdict:
    """Full verdict: both memberships, witnesses, and the certified GDoF."""
    pe = in_extended_regime(alpha, tol)
    pg = in_gsj_regime(alpha, tol)
    gdof = None
    if pe is not None:
        a = alpha.a
        gdof = (a[pe.j1 - 1][pe.i1 - 1] - a[pe.j2 - 1][pe.i1 - 1]
                + a[pe.j2 - 1][pe.i2 - 1] - a[pe.j1 - 1][pe.i2 - 1])
    return RegimeVerdict(pe is not None, pg is not None, pe, pg, gdof)


def entropy_gap_conditions_hold(pair: AuxChannelPair, rel_tol: float = 0.0) -> bool:
    """Whether |h1|^2 <= |h3|^2 <= |h4|^2/(rho*|h2|^2) and 1 < rho*|h3|^2.

    The chained inequalities are non-strict and accept a relative slack
    rel_tol; the lower bound on rho*|h3|^2 is strict, as required for the
    noise-rescaling step behind the condition.
    """
    if pair.h2_sq == 0.0:
        mix_bound = math.inf
    else:
        mix_bound = pair.h4_sq / (pair.rho * pair.h2_sq)
    return (pair.h1_sq <= pair.h3_sq * (1.0 + rel_tol)
            and pair.h3_sq <= mix_bound * (1.0 + rel_tol)
            and pair.rho * pair.h3_sq > 1.0)


def genie_aux_pair(rho: float, alpha: AlphaMatrix, p: TxPermutation) -> AuxChannelPair:
    """Map the side-information construction for ordering p onto the
    two-observation template.

    The granted observation is c*(h[j1][i1]*X_{i1} + d*h[j1][i3]*X_{i3}) plus
    fresh noise, compared against the cross observation at receiver j2, so
    h1 = c*h[j1][i1], h2 = c*h[j1][i3], h3 = h[j2][i1], h4 = h[j2][i3] with
    |h[j][i]|^2 = rho**(a[j][i] - 1).
    """
    gp = genie_params(alpha, p, rho)
    a = alpha.a
    return AuxChannelPair(
        h1_sq=gp.c_sq * rho ** (a[p.j1 - 1][p.i1 - 1] - 1.0),
        h2_sq=gp.c_sq * rho ** (a[p.j1 - 1][p.i3 - 1] - 1.0),
        h3_sq=rho ** (a[p.j2 - 1][p.i1 - 1] - 1.0),
        h4_sq=rho ** (a[p.j2 - 1][p.i3 - 1] - 1.0),
        rho=rho,
    )


def genie_satisfies_entropy_gap(rho: float, alpha: AlphaMatrix, p: TxPermutation,
                                rel_tol: float = 1e-9) -> bool:
    """Check the entropy-gap side condition for the mixing branches.

    Only the d = 1 branches of the parameter rule invoke the condition;
    raises NotApplicable for d = 0. Two of the mapped inequalities hold with
    exact equality in real arithmetic (always in case 3, and the first one
    in case 2), so the default slack absorbs floating-point rounding.
    """
    gp = genie_params(alpha, p, rho)
    if gp.d == 0:
        raise NotApplicable("the side condition is only invoked on the d = 1 branches")
    return entropy_gap_conditions_hold(genie_aux_pair(rho, alpha, p), rel_tol=rel_tol)
