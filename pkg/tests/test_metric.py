"""Metric components, inverses, determinants and model validation."""

import math

import numpy as np
import pytest

from stationary_casimir import (
    InvalidMetricError,
    MetricComponents,
    OutOfDomainError,
    catalog_model,
    components_at,
    constant_metric,
    det_neg,
    dragged_g00,
    inverse_components,
    polynomial_metric,
)

from conftest import random_components


def as_matrix(c):
    return np.array([
        [c.g00, 0.0, 0.0, c.g03],
        [0.0, c.g11, 0.0, 0.0],
        [0.0, 0.0, c.g22, 0.0],
        [c.g03, 0.0, 0.0, c.g33],
    ])


def test_minkowski_components():
    model = catalog_model("minkowski")
    c = components_at(model, 0.0)
    assert (c.g00, c.g11, c.g22, c.g33, c.g03) == (1.0, -1.0, -1.0, -1.0, 0.0)


def test_constant_components_anywhere():
    model = constant_metric(2.0, -1.0, -1.0, -1.0, 1.0)
    c = components_at(model, 0.3)
    assert (c.g00, c.g11, c.g22, c.g33, c.g03) == (2.0, -1.0, -1.0, -1.0, 1.0)


def test_invalid_signature_raises():
    with pytest.raises(InvalidMetricError, match="g00"):
        constant_metric(-1.0, -1.0, -1.0, -1.0, 0.0)
    with pytest.raises(InvalidMetricError, match="g33"):
        MetricComponents(1.0, -1.0, -1.0, 1.0, 0.0)


def test_validation_grid_catches_interior_flip():
    # g00 = 1 - z^2 goes non-positive inside |z| > 1
    with pytest.raises(InvalidMetricError, match="g00"):
        polynomial_metric((1.0, 0.0, -1.0), (-1.0,), (-1.0,), (-1.0,),
                          domain=(-2.0, 2.0))


def test_out_of_domain():
    model = constant_metric(1.0, -1.0, -1.0, -1.0, domain=(-1.0, 1.0))
    with pytest.raises(OutOfDomainError):
        components_at(model, 1.5)


def test_inverse_minkowski_self():
    c = MetricComponents(1.0, -1.0, -1.0, -1.0, 0.0)
    inv = inverse_components(c)
    assert (inv.g00, inv.g11, inv.g22, inv.g33, inv.g03) == (1.0, -1.0, -1.0, -1.0, 0.0)


def test_inverse_example_against_matrix_oracle():
    c = MetricComponents(2.0, -1.0, -1.0, -1.0, 1.0)
    inv = inverse_components(c)
    # frozen values, D = 3
    assert inv.g00 == pytest.approx(1.0 / 3.0, rel=1e-15)
    assert inv.g11 == -1.0
    assert inv.g22 == -1.0
    assert inv.g33 == pytest.approx(-2.0 / 3.0, rel=1e-15)
    assert inv.g03 == pytest.approx(1.0 / 3.0, rel=1e-15)
    # independent 4x4 inversion
    numeric = np.linalg.inv(as_matrix(c))
    assert inv.g00 == pytest.approx(numeric[0, 0], rel=1e-12)
    assert inv.g33 == pytest.approx(numeric[3, 3], rel=1e-12)
    assert inv.g03 == pytest.approx(numeric[0, 3], rel=1e-12)


def test_inverse_matches_matrix_oracle_random(rng):
    for _ in range(300):
        c = random_components(rng)
        inv = inverse_components(c)
        numeric = np.linalg.inv(as_matrix(c))
        assert inv.g00 == pytest.approx(numeric[0, 0], rel=1e-12)
        assert inv.g11 == pytest.approx(numeric[1, 1], rel=1e-12)
        assert inv.g22 == pytest.approx(numeric[2, 2], rel=1e-12)
        assert inv.g33 == pytest.approx(numeric[3, 3], rel=1e-12)
        assert inv.g03 == pytest.approx(numeric[0, 3], rel=1e-12)
        # covariant times contravariant t-z block is the identity
        block = np.array([[c.g00, c.g03], [c.g03, c.g33]])
        inv_block = np.array([[inv.g00, inv.g03], [inv.g03, inv.g33]])
        assert np.allclose(block @ inv_block, np.eye(2), atol=1e-12)


def test_det_neg_values(rng):
    assert det_neg(MetricComponents(1.0, -1.0, -1.0, -1.0, 0.0)) == 1.0
    assert det_neg(MetricComponents(2.0, -1.0, -1.0, -1.0, 1.0)) == pytest.approx(3.0, rel=1e-15)
    for _ in range(200):
        c = random_components(rng)
        assert det_neg(c) == pytest.approx(-np.linalg.det(as_matrix(c)), rel=1e-12)


def test_dragged_g00(rng):
    assert dragged_g00(MetricComponents(1.0, -1.0, -1.0, -1.0, 0.0)) == 1.0
    assert dragged_g00(MetricComponents(2.0, -1.0, -1.0, -1.0, 1.0)) == pytest.approx(3.0, rel=1e-15)
    for _ in range(200):
        c = random_components(rng)
        # testable identity: g00_hat = (g03^2 - g00 g33)/(-g33)
        expected = (c.g03 ** 2 - c.g00 * c.g33) / (-c.g33)
        assert dragged_g00(c) == pytest.approx(expected, rel=1e-12)
        assert dragged_g00(c) >= c.g00


def test_static_reduction(rng):
    for _ in range(100):
        c = random_components(rng)
        static = MetricComponents(c.g00, c.g11, c.g22, c.g33, 0.0)
        inv = inverse_components(static)
        assert inv.g03 == 0.0
        assert dragged_g00(static) == static.g00
        assert det_neg(static) == pytest.approx(
            static.g11 * static.g22 * (-static.g00 * static.g33), rel=1e-15)


def test_catalog_static_conformal():
    model = catalog_model("static-conformal", phi=0.01)
    c = components_at(model, 0.0)
    assert c.g00 == pytest.approx(1.02, rel=1e-15)
    assert c.g11 == pytest.approx(-0.98, rel=1e-15)
    assert c.g03 == 0.0


def test_catalog_rotating_unit_det():
    model = catalog_model("rotating-unit-det")
    c = components_at(model, 0.0)
    assert c.g03 != 0.0
    assert det_neg(c) == 1.0  # exact by construction
    model2 = catalog_model("rotating-unit-det", a=0.3)
    assert det_neg(components_at(model2, 0.0)) == pytest.approx(1.0, rel=1e-15)


def test_catalog_rejects_unknown():
    with pytest.raises(ValueError, match="unknown catalog"):
        catalog_model("kerr")
    with pytest.raises(ValueError, match="unsupported parameter"):
        catalog_model("minkowski", phi=0.1)
