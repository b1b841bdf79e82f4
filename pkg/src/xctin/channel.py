"""Channel parametrization for the 3x2 Gaussian X channel.

Three transmitters send to two receivers over static complex gains h[j][i]
(receiver j in {1,2}, transmitter i in {1,2,3}) with a common transmit SNR
rho > 1 and unit-variance noise. In the interference-limited setting every
received power ratio rho*|h[j][i]|^2 exceeds 1 and is summarized by the
link-strength exponent

    alpha[j][i] = log2(rho * |h[j][i]|^2) / log2(rho),

so that rho**alpha[j][i] recovers rho*|h[j][i]|^2 exactly. All rates in this
package are in bits (base-2 logarithms throughout).
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass

from .errors import DegenerateSnr, NotInterferenceLimited, ValidationError

N_RX = 2
N_TX = 3

# rho**alpha must stay finite in double precision at the audit SNRs, so
# scenario ingestion rejects exponents above this cap.
DEFAULT_ALPHA_CAP = 4.0


def rho_from_db(rho_db: float) -> float:
    """Convert an SNR in dB to linear scale: rho = 10**(dB/10)."""
    return 10.0 ** (float(rho_db) / 10.0)


@dataclass(frozen=True)
class AlphaMatrix:
    """2x3 grid of link-strength exponents; rows = receivers, columns = transmitters.

    Entries must be finite and nonnegative. Zero entries are admissible here
    because GDoF-domain work (regime sweeps, limit cases) needs the closed
    boundary; the strict positivity of physical scenarios is enforced by
    `validate_scenario`, not by this container.
    """

    a: tuple[tuple[float, float, float], tuple[float, float, float]]

    def __post_init__(self):
        try:
            rows = tuple(tuple(float(x) for x in row) for row in self.a)
        except (TypeError, ValueError) as exc:
            raise ValidationError(f"alpha entries must be numbers: {exc}") from None
        if len(rows) != N_RX or any(len(row) != N_TX for row in rows):
            raise ValidationError(f"alpha must be a {N_RX}x{N_TX} grid")
        for j, row in enumerate(rows, start=1):
            for i, x in enumerate(row, start=1):
                if not math.isfinite(x):
                    raise ValidationError(f"alpha[{j}][{i}] is not finite: {x!r}")
                if x < 0.0:
                    raise ValidationError(f"alpha[{j}][{i}] must be >= 0, got {x!r}")
        object.__setattr__(self, "a", rows)

    @classmethod
    def from_rows(cls, rows) -> "AlphaMatrix":
        return cls(tuple(tuple(row) for row in rows))

    def entry(self, j: int, i: int) -> float:
        """Exponent of the link from transmitter i to receiver j (1-based)."""
        return self.a[j - 1][i - 1]

    def flat(self) -> tuple[float, ...]:
        """Row-major (a11, a12, a13, a21, a22, a23)."""
        return self.a[0] + self.a[1]


@dataclass(frozen=True)
class ChannelScenario:
    """Transmit SNR plus either raw complex gains or a ready exponent grid.

    Exactly one of `gains`/`alpha` is set at construction. Gain phases are
    retained but unused: every downstream formula depends on a gain only
    through rho*|h|^2.
    """

    rho: float
    gains: tuple[tuple[complex, ...], ...] | None = None
    alpha: AlphaMatrix | None = None

    def __post_init__(self):
        try:
            rho = float(self.rho)
        except (TypeError, ValueError) as exc:
            raise ValidationError(f"rho must be a number: {exc}") from None
        if not math.isfinite(rho) or rho <= 1.0:
            raise DegenerateSnr(f"rho must be finite and > 1, got {self.rho!r}")
        object.__setattr__(self, "rho", rho)
        if (self.gains is None) == (self.alpha is None):
            raise ValidationError("scenario needs exactly one of gains/alpha")
        if self.gains is not None:
            try:
                g = tuple(tuple(complex(h) for h in row) for row in self.gains)
            except (TypeError, ValueError) as exc:
                raise ValidationError(f"gain entries must be complex numbers: {exc}") from None
            if len(g) != N_RX or any(len(row) != N_TX for row in g):
                raise ValidationError(f"gains must be a {N_RX}x{N_TX} grid")
            for row in g:
                for h in row:
                    if not (math.isfinite(h.real) and math.isfinite(h.imag)):
                        raise ValidationError("gains must be finite")
            object.__setattr__(self, "gains", g)


def alpha_from_gain(h: complex, rho: float) -> float:
    """Link-strength exponent log2(rho*|h|^2)/log2(rho) of a single gain.

    Requires rho > 1 and rho*|h|^2 > 1. The boundary rho*|h|^2 = 1
    (exponent exactly 0) is rejected rather than mapped to 0.
    """
    try:
        rho = float(rho)
        h = complex(h)
    except (TypeError, ValueError) as exc:
        raise ValidationError(f"bad gain/SNR: {exc}") from None
    if not math.isfinite(rho) or rho <= 1.0:
        raise DegenerateSnr(f"rho must be finite and > 1, got {rho!r}")
    inr = rho * abs(h) ** 2
    if not inr > 1.0:
        raise NotInterferenceLimited(
            f"rho*|h|^2 = {inr!r} must exceed 1 (interference-limited assumption)"
        )
    return math.log2(inr) / math.log2(rho)


def effective_inr(rho: float, alpha: float) -> float:
    """Received power ratio rho**alpha; inverts `alpha_from_gain`."""
    if not rho > 1.0:
        raise DegenerateSnr(f"rho must be > 1, got {rho!r}")
    if not (math.isfinite(alpha) and alpha >= 0.0):
        raise ValidationError(f"alpha must be finite and >= 0, got {alpha!r}")
    return rho ** alpha


def validate_scenario(scenario: ChannelScenario,
                      alpha_cap: float = DEFAULT_ALPHA_CAP) -> AlphaMatrix:
    """Materialize and check the exponent grid of a scenario.

    Gains convert entry-wise via `alpha_from_gain` (failures name the
    offending (receiver, transmitter) entry); a direct grid passes through
    unchanged. Every exponent must be strictly positive and at most
    alpha_cap.
    """
    if scenario.gains is not None:
        rows = []
        for j, row in enumerate(scenario.gains, start=1):
            out = []
            for i, h in enumerate(row, start=1):
                try:
                    out.append(alpha_from_gain(h, scenario.rho))
                except NotInterferenceLimited as exc:
                    raise NotInterferenceLimited(f"link ({j},{i}): {exc}", j=j, i=i) from None
            rows.append(tuple(out))
        alpha = AlphaMatrix(tuple(rows))
    else:
        alpha = scenario.alpha
    for j in (1, 2):
        for i in (1, 2, 3):
            x = alpha.entry(j, i)
            if x <= 0.0:
                raise NotInterferenceLimited(
                    f"link ({j},{i}): exponent {x!r} is not > 0", j=j, i=i)
            if x > alpha_cap:
                raise ValidationError(
                    f"alpha[{j}][{i}] = {x!r} exceeds the cap {alpha_cap}")
    return alpha


def scenario_from_dict(payload) -> ChannelScenario:
    """Build a scenario from its JSON wire format.

    Accepted shapes (exactly one of gains/alpha):
        {"rho_db": <num>, "gains": [[[re, im] x3] x2]}
        {"rho_db": <num>, "alpha": [[a11, a12, a13], [a21, a22, a23]]}
    Row 1 is receiver 1.
    """
    if not isinstance(payload, dict):
        raise ValidationError("scenario must be a JSON object")
    if "rho_db" not in payload:
        raise ValidationError("scenario is missing rho_db")
    try:
        rho = rho_from_db(float(payload["rho_db"]))
    except (TypeError, ValueError) as exc:
        raise ValidationError(f"bad rho_db: {exc}") from None
    has_gains = "gains" in payload
    has_alpha = "alpha" in payload
    if has_gains == has_alpha:
        raise ValidationError("scenario needs exactly one of gains/alpha")
    if has_gains:
        try:
            gains = tuple(
                tuple(complex(float(re), float(im)) for (re, im) in row)
                for row in payload["gains"]
            )
        except (TypeError, ValueError) as exc:
            raise ValidationError(f"malformed gains grid: {exc}") from None
        return ChannelScenario(rho=rho, gains=gains)
    try:
        alpha = AlphaMatrix.from_rows(payload["alpha"])
    except TypeError as exc:
        raise ValidationError(f"malformed alpha grid: {exc}") from None
    return ChannelScenario(rho=rho, alpha=alpha)


def load_scenario(path) -> ChannelScenario:
    """Read a scenario JSON file (UTF-8)."""
    with open(path, "r", encoding="utf-8") as fh:
        try:
            payload = json.load(fh)
        except json.JSONDecodeError as exc:
            raise ValidationError(f"invalid scenario JSON: {exc}") from None
    return scenario_from_dict(payload)
