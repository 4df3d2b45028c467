"""Zero-temperature renormalized Casimir energies for the plate cavity.

The flat-space energy depends only on the proper geometry,

    E_p = -pi^2 S_p / (1440 L_p^3),

and the stationary background enters through two observer factors: the
redshift factor sqrt(g00(0)/g00_hat(0)) for the observer at the coordinate
origin, and the ratio g00(0)/g00(z) moving the observer to z.  The product
g00(z) * E_z is therefore constant across the cavity's background.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .geometry import CavitySpec, ProperGeometry, proper_geometry
from .metric import MetricModel, components_at, dragged_g00


@dataclass(frozen=True)
class EnergyReport:
    """Energies seen by the flat, origin and z observers."""

    E_p: float
    E_0: float
    E_z: float
    redshift_factor: float

    def __post_init__(self):
        if not self.E_p < 0.0:
            raise ValueError("flat Casimir energy must be negative")
        if not (self.E_0 < 0.0 and self.E_z < 0.0):
            raise ValueError("observed Casimir energies must be negative")
        if not self.redshift_factor > 0.0:
            raise ValueError("redshift factor must be positive")


def casimir_energy_flat(geom: ProperGeometry) -> float:
    """Flat-space Casimir energy -pi^2 S_p / (1440 L_p^3)."""
    return -math.pi ** 2 * geom.S_p / (1440.0 * geom.L_p ** 3)


def redshift_factor(model: MetricModel) -> float:
    """sqrt(g00/g00_hat) at z = 0; exactly 1 for static metrics."""
    c = components_at(model, 0.0)
    return math.sqrt(c.g00 / dragged_g00(c))


def observer_energy(model: MetricModel, geom: ProperGeometry, z: float) -> float:
    """Energy seen by the stationary observer at z, for precomputed geometry."""
    c0 = components_at(model, 0.0)
    cz = components_at(model, z)
    factor = math.sqrt(c0.g00 / dragged_g00(c0))
    return (c0.g00 / cz.g00) * factor * casimir_energy_flat(geom)


def casimir_energy_origin(model: MetricModel, cavity: CavitySpec) -> EnergyReport:
    """Full energy report; E_z is evaluated at the cavity's observer_z."""
    geom = proper_geometry(model, cavity)
    E_p = casimir_energy_flat(geom)
    factor = redshift_factor(model)
    E_0 = factor * E_p
    c0 = components_at(model, 0.0)
    cz = components_at(model, cavity.observer_z)
    return EnergyReport(
        E_p=E_p,
        E_0=E_0,
        E_z=(c0.g00 / cz.g00) * E_0,
        redshift_factor=factor,
    )


def casimir_energy_at(model: MetricModel, cavity: CavitySpec, z: float) -> float:
    """Energy seen by a stationary observer at coordinate z."""
    return observer_energy(model, proper_geometry(model, cavity), z)
