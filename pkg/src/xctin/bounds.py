"""Genie-aided sum-capacity and GDoF upper bounds for the 3x2 X channel.

Each bound is indexed by an ordering p = (i1, i2, i3, j1, j2) of the three
transmitters and the two receivers. Receiver j1 is granted a noise-corrupted,
scaled observation of transmitter i1 (optionally mixed with transmitter i3),
receiver j2 is granted the cross observation of transmitter i2, and the
scaling power gain c^2 together with the mixing flag d is chosen by a
three-case rule on the exponents so that the side-information terms
telescope. Writing r[j][i] = rho**a[j][i], the finite-SNR sum-capacity bound
for one ordering is

  B(p) = log2(1 + r[j1][i2] + (1-d)*r[j1][i3]
              + (r[j1][i1] + d*r[j1][i3]) / (1 + c^2*(r[j1][i1] + d*r[j1][i3])))
       + log2(1 + r[j2][i1] + r[j2][i3] + r[j2][i2] / (1 + r[j1][i2]))
       + 1

and the sum capacity is at most the minimum of B over the twelve orderings.
Normalizing by log2(rho) and letting rho grow turns B(p) into the GDoF bound

  D(p) = max{a[j2][i1], a[j2][i3], a[j2][i2] - a[j1][i2]}
       + max{a[j1][i2], a[j1][i1] - a[j2][i1],
             a[j1][i3] - (a[j2][i3] - a[j2][i1])^+},

whose two case-specific forms (split on the sign of a[j2][i3] - a[j2][i1])
are exposed separately for cross-checking.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass

from .channel import AlphaMatrix
from .errors import CaseMismatch, ValidationError


@dataclass(frozen=True)
class TxPermutation:
    """Ordering (i1, i2, i3, j1, j2): all transmitters and receivers, distinct."""

    i1: int
    i2: int
    i3: int
    j1: int
    j2: int

    def __post_init__(self):
        if {self.i1, self.i2, self.i3} != {1, 2, 3}:
            raise ValidationError(f"(i1, i2, i3) must enumerate {{1,2,3}}, got "
                                  f"({self.i1}, {self.i2}, {self.i3})")
        if {self.j1, self.j2} != {1, 2}:
            raise ValidationError(f"(j1, j2) must enumerate {{1,2}}, got ({self.j1}, {self.j2})")

    def label(self) -> str:
        return f"{self.i1}{self.i2}{self.i3}{self.j1}{self.j2}"

    def as_tuple(self) -> tuple[int, int, int, int, int]:
        return (self.i1, self.i2, self.i3, self.j1, self.j2)


@dataclass(frozen=True)
class GenieParams:
    """Side-information scaling power c^2, mixing flag d, and the branch taken."""

    c_sq: float
    d: int
    case_id: int

    def __post_init__(self):
        if self.d not in (0, 1) or self.case_id not in (1, 2, 3):
            raise ValidationError("d must be 0/1 and case_id one of 1, 2, 3")
        if (self.d == 0) != (self.case_id == 1):
            raise ValidationError("d = 0 exactly in case 1")
        if not (math.isfinite(self.c_sq) and self.c_sq > 0.0):
            raise ValidationError(f"c_sq must be finite and > 0, got {self.c_sq!r}")


@dataclass(frozen=True)
class BoundResult:
    """Minimum over the twelve orderings, its argmin, and the full profile."""

    value: float
    argmin: TxPermutation
    per_perm: tuple[tuple[TxPermutation, float], ...]


PERMUTATIONS: tuple[TxPermutation, ...] = tuple(
    TxPermutation(i1, i2, i3, j1, j2)
    for (i1, i2, i3) in itertools.permutations((1, 2, 3))
    for (j1, j2) in ((1, 2), (2, 1))
)


def enumerate_permutations() -> tuple[TxPermutation, ...]:
    """All twelve orderings, lexicographic in (i1, i2, i3, j1, j2)."""
    return PERMUTATIONS


def _genie_params_rows(a, p: TxPermutation, rho: float) -> GenieParams:
    a_j1i1 = a[p.j1 - 1][p.i1 - 1]
    a_j1i3 = a[p.j1 - 1][p.i3 - 1]
    a_j2i1 = a[p.j2 - 1][p.i1 - 1]
    a_j2i3 = a[p.j2 - 1][p.i3 - 1]
    if a_j2i3 <= a_j2i1:
        return GenieParams(rho ** (a_j2i1 - a_j1i1), 0, 1)
    if a_j2i1 - a_j1i1 <= a_j2i3 - a_j1i3 - a_j2i1:
        return GenieParams(rho ** (a_j2i1 - a_j1i1), 1, 2)
    return GenieParams(rho ** (a_j2i3 - a_j2i1 - a_j1i3), 1, 3)


def genie_params(alpha: AlphaMatrix, p: TxPermutation, rho: float) -> GenieParams:
    """Pick the side-information parameters (c^2, d) for ordering p.

    Case 1, weak third cross link (a[j2][i3] <= a[j2][i1]):
        c^2 = rho**(a[j2][i1] - a[j1][i1]), d = 0.
    Case 2, strong third cross link with the scaling still anchored at i1:
        same c^2 with d = 1, taken when
        a[j2][i1] - a[j1][i1] <= a[j2][i3] - a[j1][i3] - a[j2][i1].
    Case 3, otherwise: c^2 = rho**(a[j2][i3] - a[j2][i1] - a[j1][i3]), d = 1.

    Boundary ties resolve in this order (both comparisons are <=); at the
    case-2/case-3 tie the two exponents coincide anyway.
    """
    return _genie_params_rows(alpha.a, p, rho)


def genie_params_from_gains(gains, p: TxPermutation, rho: float) -> GenieParams:
    """Side-information parameters computed directly from complex gains.

    Same three-branch rule stated on the raw gains:
        case 1: |h[j2][i3]| <= |h[j2][i1]|, c = h[j2][i1]/h[j1][i1];
        case 2: rho*|h[j2][i1]|^4/|h[j1][i1]|^2 <= |h[j2][i3]|^2/|h[j1][i3]|^2,
                same c;
        case 3: otherwise, c = h[j2][i3] / (h[j2][i1] * sqrt(rho) * h[j1][i3]).
    Only |c|^2 matters downstream, so the phases drop out here. Under the
    exponent parametrization this agrees with `genie_params` up to floating-
    point rounding.
    """
    h_j1i1_sq = abs(gains[p.j1 - 1][p.i1 - 1]) ** 2
    h_j1i3_sq = abs(gains[p.j1 - 1][p.i3 - 1]) ** 2
    h_j2i1_sq = abs(gains[p.j2 - 1][p.i1 - 1]) ** 2
    h_j2i3_sq = abs(gains[p.j2 - 1][p.i3 - 1]) ** 2
    if min(h_j1i1_sq, h_j1i3_sq, h_j2i1_sq, h_j2i3_sq) <= 0.0:
        raise ValidationError("gains must be nonzero")
    if h_j2i3_sq <= h_j2i1_sq:
        return GenieParams(h_j2i1_sq / h_j1i1_sq, 0, 1)
    if rho * h_j2i1_sq ** 2 / h_j1i1_sq <= h_j2i3_sq / h_j1i3_sq:
        return GenieParams(h_j2i1_sq / h_j1i1_sq, 1, 2)
    return GenieParams(h_j2i3_sq / (rho * h_j2i1_sq * h_j1i3_sq), 1, 3)


def _bound_single(rho: float, a, pw, p: TxPermutation) -> float:
    """B(p) from precomputed powers pw[j][i] = rho**a[j][i]."""
    gp = _genie_params_rows(a, p, rho)
    d = gp.d
    r_j1i1 = pw[p.j1 - 1][p.i1 - 1]
    r_j1i2 = pw[p.j1 - 1][p.i2 - 1]
    r_j1i3 = pw[p.j1 - 1][p.i3 - 1]
    r_j2i1 = pw[p.j2 - 1][p.i1 - 1]
    r_j2i2 = pw[p.j2 - 1][p.i2 - 1]
    r_j2i3 = pw[p.j2 - 1][p.i3 - 1]
    genie_power = r_j1i1 + d * r_j1i3
    term1 = math.log2(1.0 + r_j1i2 + (1 - d) * r_j1i3
                      + genie_power / (1.0 + gp.c_sq * genie_power))
    term2 = math.log2(1.0 + r_j2i1 + r_j2i3 + r_j2i2 / (1.0 + r_j1i2))
    return term1 + term2 + 1.0


def sum_capacity_ub_single(rho: float, alpha: AlphaMatrix, p: TxPermutation) -> float:
    """Sum-capacity bound B(p) in bits for one ordering (always > 1)."""
    a = alpha.a
    pw = tuple(tuple(rho ** x for x in row) for row in a)
    return _bound_single(rho, a, pw, p)


def sum_capacity_ub(rho: float, alpha: AlphaMatrix) -> BoundResult:
    """min_p B(p) with the full twelve-entry profile.

    Ties break to the lexicographically first ordering; the profile is always
    materialized so audits can report per-ordering diagnostics.
    """
    a = alpha.a
    pw = tuple(tuple(rho ** x for x in row) for row in a)
    per_perm = tuple((p, _bound_single(rho, a, pw, p)) for p in PERMUTATIONS)
    best_p, best = per_perm[0]
    for p, v in per_perm[1:]:
        if v < best:
            best_p, best = p, v
    return BoundResult(best, best_p, per_perm)


def gdof_ub_case1(alpha: AlphaMatrix, p: TxPermutation) -> float:
    """GDoF bound branch for a strong third cross link (a[j2][i3] > a[j2][i1])."""
    a = alpha.a
    a_j2i1 = a[p.j2 - 1][p.i1 - 1]
    a_j2i3 = a[p.j2 - 1][p.i3 - 1]
    if not a_j2i3 > a_j2i1:
        raise CaseMismatch(f"case 1 needs a[j2][i3] > a[j2][i1], got {a_j2i3!r} <= {a_j2i1!r}")
    first = max(a_j2i1, a_j2i3, a[p.j2 - 1][p.i2 - 1] - a[p.j1 - 1][p.i2 - 1])
    second = max(a[p.j1 - 1][p.i2 - 1],
                 a[p.j1 - 1][p.i1 - 1] - a_j2i1,
                 a[p.j1 - 1][p.i3 - 1] - (a_j2i3 - a_j2i1))
    return first + second


def gdof_ub_case2(alpha: AlphaMatrix, p: TxPermutation) -> float:
    """GDoF bound branch for a weak third cross link (a[j2][i3] <= a[j2][i1])."""
    a = alpha.a
    a_j2i1 = a[p.j2 - 1][p.i1 - 1]
    a_j2i3 = a[p.j2 - 1][p.i3 - 1]
    if not a_j2i3 <= a_j2i1:
        raise CaseMismatch(f"case 2 needs a[j2][i3] <= a[j2][i1], got {a_j2i3!r} > {a_j2i1!r}")
    first = max(a_j2i1, a_j2i3, a[p.j2 - 1][p.i2 - 1] - a[p.j1 - 1][p.i2 - 1])
    second = max(a[p.j1 - 1][p.i2 - 1],
                 a[p.j1 - 1][p.i3 - 1],
                 a[p.j1 - 1][p.i1 - 1] - a_j2i1)
    return first + second


def gdof_ub_single(alpha: AlphaMatrix, p: TxPermutation) -> float:
    """Combined GDoF bound D(p); the positive part unifies the two branches."""
    a = alpha.a
    a_j2i1 = a[p.j2 - 1][p.i1 - 1]
    a_j2i3 = a[p.j2 - 1][p.i3 - 1]
    diff = a_j2i3 - a_j2i1
    first = max(a_j2i1, a_j2i3, a[p.j2 - 1][p.i2 - 1] - a[p.j1 - 1][p.i2 - 1])
    second = max(a[p.j1 - 1][p.i2 - 1],
                 a[p.j1 - 1][p.i1 - 1] - a_j2i1,
                 a[p.j1 - 1][p.i3 - 1] - (diff if diff > 0.0 else 0.0))
    return first + second


def gdof_ub(alpha: AlphaMatrix) -> BoundResult:
    """min_p D(p) with the full profile; ties break lexicographically."""
    per_perm = tuple((p, gdof_ub_single(alpha, p)) for p in PERMUTATIONS)
    best_p, best = per_perm[0]
    for p, v in per_perm[1:]:
        if v < best:
            best_p, best = p, v
    return BoundResult(best, best_p, per_perm)
