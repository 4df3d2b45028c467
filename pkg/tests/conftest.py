"""Shared helpers for the test suite."""

import numpy as np
import pytest

from stationary_casimir import MetricComponents, constant_metric


def random_components(rng):
    """A random valid (+,-,-,-) metric point; any real g03 keeps D > 0."""
    g00 = float(np.exp(rng.uniform(-1.0, 1.0)))
    g11 = -float(np.exp(rng.uniform(-1.0, 1.0)))
    g22 = -float(np.exp(rng.uniform(-1.0, 1.0)))
    g33 = -float(np.exp(rng.uniform(-1.0, 1.0)))
    g03 = float(rng.uniform(-2.0, 2.0))
    return MetricComponents(g00, g11, g22, g33, g03)


def random_constant_model(rng, name="random"):
    c = random_components(rng)
    return constant_metric(c.g00, c.g11, c.g22, c.g33, c.g03, name=name)


@pytest.fixture
def rng():
    return np.random.default_rng(20260809)
