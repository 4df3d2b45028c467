"""Confined scalar-field mode spectrum and normalization.

All metric components entering these formulas are taken at z = 0 (zero-order
treatment of the z-dependence); callers pass a single MetricComponents value.
The longitudinal profile is sin(n*pi*(z + L/2)/L), vanishing on both plates,
multiplied by a z-dependent phase exp(i * phase_rate * z) whose rate is
returned by :func:`mode_phase_rate`.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import InvalidMetricError
from .metric import MetricComponents, det_neg, inverse_components

TWO_PI_SQ = (2.0 * math.pi) ** 2


@dataclass(frozen=True)
class ModeSpec:
    """Mode labels: longitudinal index n >= 1 and transverse wave numbers."""

    n: int
    kx: float = 0.0
    ky: float = 0.0

    def __post_init__(self):
        if self.n < 1:
            raise ValueError(f"longitudinal index must be >= 1, got n={self.n!r}")


@dataclass(frozen=True)
class ModeData:
    """Frequency, squared normalization and phase rate of one mode."""

    omega: float
    norm_sq: float
    phase_rate: float

    def __post_init__(self):
        if not self.omega > 0.0:
            raise ValueError("mode frequency must be positive")
        if not self.norm_sq > 0.0:
            raise ValueError("mode normalization must be positive")


def mode_frequency(c: MetricComponents, L: float, m: ModeSpec) -> float:
    """Frequency of mode m for plate separation L.

    omega = sqrt(g^33^2 / (g^03^2 - g^00 g^33))
            * sqrt((g^11/g^33) kx^2 + (g^22/g^33) ky^2 + (n pi / L)^2)

    Both radicands are positive for a valid (+,-,-,-) signature; a
    non-positive radicand raises InvalidMetricError rather than guessing an
    alternative sign convention.
    """
    inv = inverse_components(c)
    denom = inv.g03 * inv.g03 - inv.g00 * inv.g33
    if not denom > 0.0:
        raise InvalidMetricError(
            f"frequency prefactor radicand non-positive: g^03^2 - g^00 g^33 = {denom!r}"
        )
    prefactor_sq = inv.g33 * inv.g33 / denom
    dispersion = (
        (inv.g11 / inv.g33) * m.kx * m.kx
        + (inv.g22 / inv.g33) * m.ky * m.ky
        + (m.n * math.pi / L) ** 2
    )
    if not dispersion > 0.0:
        raise InvalidMetricError(
            f"dispersion radicand non-positive: {dispersion!r}"
        )
    return math.sqrt(prefactor_sq) * math.sqrt(dispersion)


def mode_norm_sq(c: MetricComponents, L: float, omega: float) -> float:
    """Squared normalization constant of a mode of frequency omega.

    N^2 = g00 * sqrt(-g00 g11 g22 g33) / ((-g) (2 pi)^2 L omega), with the
    continuum delta-function convention in the transverse wave numbers.
    """
    if not omega > 0.0:
        raise ValueError(f"omega must be positive, got {omega!r}")
    numerator = c.g00 * math.sqrt(-c.g00 * c.g11 * c.g22 * c.g33)
    return numerator / (det_neg(c) * TWO_PI_SQ * L * omega)


def mode_phase_rate(c: MetricComponents, omega: float) -> float:
    """Rate coefficient of the longitudinal phase factor exp(i*rate*z).

    Equals omega * g^03 / g^33, which vanishes for static metrics.
    """
    if not omega > 0.0:
        raise ValueError(f"omega must be positive, got {omega!r}")
    inv = inverse_components(c)
    return omega * inv.g03 / inv.g33


def mode_data(c: MetricComponents, L: float, m: ModeSpec) -> ModeData:
    """Convenience bundle of frequency, normalization and phase rate."""
    omega = mode_frequency(c, L, m)
    return ModeData(
        omega=omega,
        norm_sq=mode_norm_sq(c, L, omega),
        phase_rate=mode_phase_rate(c, omega),
    )
