"""Stationary metrics with a single time-space cross term, depending on z only.

Every metric handled by this package has the line element

    ds^2 = g00(z) dt^2 + g11(z) dx^2 + g22(z) dy^2 + g33(z) dz^2
           + 2 g03(z) dt dz

with signature (+,-,-,-):  g00 > 0 and g11, g22, g33 < 0.  Components are
constants or polynomials in z; a small catalog of named models is provided.
All functions here are pure and the data types are immutable, so values can
be shared freely between threads.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import InvalidMetricError, OutOfDomainError

#: Number of uniform samples used to validate a model over its z-domain.
VALIDATION_GRID_POINTS = 129


def _polyval(coeffs, z):
    """Evaluate a polynomial given coefficients in ascending order."""
    acc = 0.0
    for c in reversed(coeffs):
        acc = acc * z + c
    return acc


def _check_signature(g00, g11, g22, g33, g03, z=None):
    """Raise InvalidMetricError naming the first violated inequality."""
    where = "" if z is None else f" at z={z:.9g}"
    if not g00 > 0.0:
        raise InvalidMetricError(f"g00 > 0 violated{where}: g00={g00!r}")
    if not g11 < 0.0:
        raise InvalidMetricError(f"g11 < 0 violated{where}: g11={g11!r}")
    if not g22 < 0.0:
        raise InvalidMetricError(f"g22 < 0 violated{where}: g22={g22!r}")
    if not g33 < 0.0:
        raise InvalidMetricError(f"g33 < 0 violated{where}: g33={g33!r}")
    disc = g03 * g03 - g00 * g33
    if not disc > 0.0:
        raise InvalidMetricError(
            f"g03^2 - g00*g33 > 0 violated{where}: value={disc!r}"
        )
    dragged = g00 - g03 * g03 / g33
    if not dragged > 0.0:
        raise InvalidMetricError(
            f"g00 - g03^2/g33 > 0 violated{where}: value={dragged!r}"
        )
    if not g11 * g22 * disc > 0.0:
        raise InvalidMetricError(
            f"-det(g) > 0 violated{where}: value={g11 * g22 * disc!r}"
        )


@dataclass(frozen=True)
class MetricComponents:
    """Covariant components at a single point, validated on construction.

    Attributes
    ----------
    g00, g11, g22, g33 : float
        Diagonal components; g00 > 0, the spatial three are negative.
    g03 : float
        Time-space cross component; zero for static metrics.
    """

    g00: float
    g11: float
    g22: float
    g33: float
    g03: float = 0.0

    def __post_init__(self):
        _check_signature(self.g00, self.g11, self.g22, self.g33, self.g03)


@dataclass(frozen=True)
class InverseComponents:
    """Contravariant components g^ab; field names carry upper indices."""

    g00: float
    g11: float
    g22: float
    g33: float
    g03: float


@dataclass(frozen=True)
class MetricModel:
    """Metric with polynomial-in-z components on a finite validity domain.

    Coefficient tuples are ascending (constant term first).  Instances are
    created through :func:`constant_metric`, :func:`polynomial_metric` or
    :func:`catalog_model`, all of which validate the signature on a uniform
    grid of ``VALIDATION_GRID_POINTS`` samples across ``domain``.
    """

    name: str
    g00: tuple
    g11: tuple
    g22: tuple
    g33: tuple
    g03: tuple
    domain: tuple


def components_at(model: MetricModel, z: float) -> MetricComponents:
    """Evaluate the five covariant components of `model` at coordinate z.

    Raises
    ------
    OutOfDomainError
        If z lies outside the model's declared domain.
    InvalidMetricError
        If the evaluated components violate the signature inequalities.
    """
    zmin, zmax = model.domain
    if not (zmin <= z <= zmax):
        raise OutOfDomainError(
            f"z={z!r} outside domain [{zmin!r}, {zmax!r}] of metric '{model.name}'"
        )
    g00 = _polyval(model.g00, z)
    g11 = _polyval(model.g11, z)
    g22 = _polyval(model.g22, z)
    g33 = _polyval(model.g33, z)
    g03 = _polyval(model.g03, z)
    _check_signature(g00, g11, g22, g33, g03, z=z)
    return MetricComponents(g00, g11, g22, g33, g03)


def inverse_components(c: MetricComponents) -> InverseComponents:
    """Contravariant components from the 2x2 t-z block and the diagonal.

    With D = g03^2 - g00*g33 (positive for a valid signature):

        g^00 = -g33/D,  g^11 = 1/g11,  g^22 = 1/g22,
        g^33 = -g00/D,  g^03 = g03/D.
    """
    disc = c.g03 * c.g03 - c.g00 * c.g33
    return InverseComponents(
        g00=-c.g33 / disc,
        g11=1.0 / c.g11,
        g22=1.0 / c.g22,
        g33=-c.g00 / disc,
        g03=c.g03 / disc,
    )


def det_neg(c: MetricComponents) -> float:
    """Return -det(g) = g11*g22*(g03^2 - g00*g33), positive for valid input."""
    return c.g11 * c.g22 * (c.g03 * c.g03 - c.g00 * c.g33)


def dragged_g00(c: MetricComponents) -> float:
    """00-component seen in the locally non-rotating (dragged) frame.

    Returns g00 - g03^2/g33, which is >= g00 for a valid signature and
    reduces to g00 exactly in the static case g03 = 0.
    """
    return c.g00 - c.g03 * c.g03 / c.g33


def validate_model(model: MetricModel) -> None:
    """Check the signature inequalities on a uniform grid over the domain."""
    zmin, zmax = model.domain
    if not zmax > zmin:
        raise InvalidMetricError(
            f"empty domain [{zmin!r}, {zmax!r}] for metric '{model.name}'"
        )
    step = (zmax - zmin) / (VALIDATION_GRID_POINTS - 1)
    for i in range(VALIDATION_GRID_POINTS):
        components_at(model, zmin + i * step)


def validation_failures(model: MetricModel) -> list:
    """Collect signature violations over the grid instead of raising.

    Returns a list of human-readable messages, empty when the model is valid.
    Used by the command-line ``validate`` report.
    """
    failures = []
    zmin, zmax = model.domain
    if not zmax > zmin:
        return [f"empty domain [{zmin!r}, {zmax!r}]"]
    step = (zmax - zmin) / (VALIDATION_GRID_POINTS - 1)
    for i in range(VALIDATION_GRID_POINTS):
        z = zmin + i * step
        try:
            components_at(model, z)
        except InvalidMetricError as exc:
            failures.append(str(exc))
    return failures


def polynomial_metric(g00, g11, g22, g33, g03=(0.0,), domain=(-100.0, 100.0),
                      name="polynomial") -> MetricModel:
    """Build and validate a model from ascending coefficient sequences."""
    model = MetricModel(
        name=name,
        g00=tuple(float(v) for v in g00),
        g11=tuple(float(v) for v in g11),
        g22=tuple(float(v) for v in g22),
        g33=tuple(float(v) for v in g33),
        g03=tuple(float(v) for v in g03),
        domain=(float(domain[0]), float(domain[1])),
    )
    validate_model(model)
    return model


def constant_metric(g00, g11, g22, g33, g03=0.0, domain=(-100.0, 100.0),
                    name="constant") -> MetricModel:
    """Build and validate a model with z-independent components."""
    return polynomial_metric((g00,), (g11,), (g22,), (g33,), (g03,),
                             domain=domain, name=name)


#: Names accepted by :func:`catalog_model`.
CATALOG_NAMES = ("minkowski", "static-conformal", "rotating-unit-det")


def catalog_model(name: str, domain=(-100.0, 100.0), **params) -> MetricModel:
    """Return a named catalog metric.

    ``minkowski``
        diag(1, -1, -1, -1); no parameters.
    ``static-conformal``
        g00 = 1 + 2*phi, spatial components -(1 - 2*phi), g03 = 0, for a
        constant potential ``phi``.  Signature requires |phi| < 1/2.
        Default phi = 0.01.
    ``rotating-unit-det``
        Constant components (1, -1, -1, -(1 - a^2), a) with cross term
        ``a``; -det(g) = 1 identically for every |a| < 1.  Default a = 0.5.
    """
    if name == "minkowski":
        _reject_params(name, params)
        return constant_metric(1.0, -1.0, -1.0, -1.0, 0.0, domain=domain,
                               name="minkowski")
    if name == "static-conformal":
        phi = float(params.pop("phi", 0.01))
        _reject_params(name, params)
        spatial = -(1.0 - 2.0 * phi)
        return constant_metric(1.0 + 2.0 * phi, spatial, spatial, spatial, 0.0,
                               domain=domain, name="static-conformal")
    if name == "rotating-unit-det":
        a = float(params.pop("a", 0.5))
        _reject_params(name, params)
        return constant_metric(1.0, -1.0, -1.0, -(1.0 - a * a), a,
                               domain=domain, name="rotating-unit-det")
    raise ValueError(
        f"unknown catalog metric '{name}'; available: {', '.join(CATALOG_NAMES)}"
    )


def _reject_params(name, params):
    if params:
        raise ValueError(
            f"unsupported parameter(s) {sorted(params)} for catalog metric '{name}'"
        )
