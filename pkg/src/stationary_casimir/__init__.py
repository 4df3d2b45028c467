"""Casimir energy and thermal Casimir thermodynamics between parallel plates
in stationary spacetime backgrounds, in natural units (hbar = c = k_B = 1).

The package is organized around small immutable value types and pure
functions:

- :mod:`~stationary_casimir.metric`: stationary metric models and pointwise
  derived quantities (inverse components, determinant, dragged-frame g00).
- :mod:`~stationary_casimir.geometry`: proper length, area and volume of the
  plate cavity by quadrature.
- :mod:`~stationary_casimir.modes`: confined scalar mode spectrum and
  normalization at zero-order metric components.
- :mod:`~stationary_casimir.casimir`: zero-temperature renormalized energies
  and the observer dependence law.
- :mod:`~stationary_casimir.thermal`: thermal corrections, renormalization
  and derived thermodynamics (U, S, C_V).
- :mod:`~stationary_casimir.oracle`: independent brute-force reference
  computations and golden-fixture handling.
- :mod:`~stationary_casimir.cli`: config-driven command line.
"""

from .casimir import (
    EnergyReport,
    casimir_energy_at,
    casimir_energy_flat,
    casimir_energy_origin,
    observer_energy,
    redshift_factor,
)
from .errors import (
    AccuracyFloorError,
    CasimirError,
    ConfigError,
    InternalConsistencyError,
    InvalidMetricError,
    OracleConvergenceError,
    OutOfDomainError,
)
from .geometry import (
    CavitySpec,
    ProperGeometry,
    proper_area,
    proper_geometry,
    proper_length,
)
from .metric import (
    CATALOG_NAMES,
    InverseComponents,
    MetricComponents,
    MetricModel,
    catalog_model,
    components_at,
    constant_metric,
    det_neg,
    dragged_g00,
    inverse_components,
    polynomial_metric,
    validate_model,
    validation_failures,
)
from .modes import ModeData, ModeSpec, mode_data, mode_frequency, mode_norm_sq, mode_phase_rate
from .thermal import (
    BETA_TILDE_FLOOR,
    SeriesControl,
    ThermalPoint,
    ThermoReport,
    ZETA_3,
    ZETA_4,
    asymptotic_expansion,
    blackbody_free_energy,
    bracket_sum,
    bracket_sum_with_derivatives,
    high_temperature_exponent,
    thermal_free_energy_raw,
    thermal_free_energy_renormalized,
    thermal_point,
    thermodynamics,
)

__version__ = "0.1.0"

__all__ = [
    "AccuracyFloorError",
    "BETA_TILDE_FLOOR",
    "CATALOG_NAMES",
    "CasimirError",
    "CavitySpec",
    "ConfigError",
    "EnergyReport",
    "InternalConsistencyError",
    "InvalidMetricError",
    "InverseComponents",
    "MetricComponents",
    "MetricModel",
    "ModeData",
    "ModeSpec",
    "OracleConvergenceError",
    "OutOfDomainError",
    "ProperGeometry",
    "SeriesControl",
    "ThermalPoint",
    "ThermoReport",
    "ZETA_3",
    "ZETA_4",
    "asymptotic_expansion",
    "blackbody_free_energy",
    "bracket_sum",
    "bracket_sum_with_derivatives",
    "casimir_energy_at",
    "casimir_energy_flat",
    "casimir_energy_origin",
    "catalog_model",
    "components_at",
    "constant_metric",
    "det_neg",
    "dragged_g00",
    "high_temperature_exponent",
    "inverse_components",
    "mode_data",
    "mode_frequency",
    "mode_norm_sq",
    "mode_phase_rate",
    "observer_energy",
    "polynomial_metric",
    "proper_area",
    "proper_geometry",
    "proper_length",
    "redshift_factor",
    "thermal_free_energy_raw",
    "thermal_free_energy_renormalized",
    "thermal_point",
    "thermodynamics",
    "validate_model",
    "validation_failures",
    "__version__",
]
