"""Sectioned key-value run-configuration files.

Grammar (see README for the full reference)::

    # comment                       full-line or trailing
    [metric]                        sections: metric, cavity, thermal,
    catalog = minkowski             series, output
    key = value [value ...]         values are whitespace-separated tokens

Multi-valued metric components are polynomial coefficients in ascending
order; single values are constants.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import ConfigError
from .geometry import CavitySpec
from .metric import MetricModel, catalog_model, polynomial_metric
from .thermal import SeriesControl

_SECTIONS = ("metric", "cavity", "thermal", "series", "output")
_METRIC_KEYS = ("catalog", "phi", "a", "domain", "g00", "g11", "g22", "g33", "g03")
_CAVITY_KEYS = ("L", "x_range", "y_range", "observer_z")
_THERMAL_KEYS = ("mode", "temperature", "sweep", "points", "spacing")
_SERIES_KEYS = ("max_terms", "tolerance")
_OUTPUT_KEYS = ("csv", "precision")
_KEYS = {
    "metric": _METRIC_KEYS,
    "cavity": _CAVITY_KEYS,
    "thermal": _THERMAL_KEYS,
    "series": _SERIES_KEYS,
    "output": _OUTPUT_KEYS,
}


@dataclass(frozen=True)
class ThermalConfig:
    mode: str = "coordinate"
    temperature: float = None
    sweep: tuple = None
    points: int = 60
    spacing: str = "linear"


@dataclass(frozen=True)
class OutputConfig:
    csv: str = None
    precision: int = 12


@dataclass(frozen=True)
class RunConfig:
    model: MetricModel
    cavity: CavitySpec
    thermal: ThermalConfig
    series: SeriesControl
    output: OutputConfig


def _tokenize(text: str, name: str):
    """Yield (lineno, section, key, tokens) entries, validating structure."""
    section = None
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if line.startswith("[") and line.endswith("]"):
            section = line[1:-1].strip()
            if section not in _SECTIONS:
                raise ConfigError(
                    f"{name} line {lineno}: unknown section [{section}]"
                )
            continue
        if "=" not in line:
            raise ConfigError(
                f"{name} line {lineno}: expected 'key = value', got {line!r}"
            )
        if section is None:
            raise ConfigError(
                f"{name} line {lineno}: entry before any [section] header"
            )
        key, _, value = line.partition("=")
        key = key.strip()
        if key not in _KEYS[section]:
            raise ConfigError(
                f"{name} line {lineno}: unknown key '{key}' in [{section}]"
            )
        tokens = value.split()
        if not tokens:
            raise ConfigError(f"{name} line {lineno}: empty value for '{key}'")
        yield lineno, section, key, tokens


def _floats(tokens, name, lineno, key):
    try:
        return tuple(float(t) for t in tokens)
    except ValueError:
        raise ConfigError(
            f"{name} line {lineno}: non-numeric value for '{key}': {' '.join(tokens)}"
        ) from None


def _single_float(tokens, name, lineno, key):
    values = _floats(tokens, name, lineno, key)
    if len(values) != 1:
        raise ConfigError(f"{name} line {lineno}: '{key}' takes exactly one value")
    return values[0]


def _single_int(tokens, name, lineno, key):
    value = _single_float(tokens, name, lineno, key)
    if value != int(value):
        raise ConfigError(f"{name} line {lineno}: '{key}' must be an integer")
    return int(value)


def parse_config_text(text: str, name: str = "<config>") -> RunConfig:
    entries = {section: {} for section in _SECTIONS}
    for lineno, section, key, tokens in _tokenize(text, name):
        entries[section][key] = (tokens, lineno)

    model = _build_metric(entries["metric"], name)
    cavity = _build_cavity(entries["cavity"], name)
    thermal = _build_thermal(entries["thermal"], name)
    series = _build_series(entries["series"], name)
    output = _build_output(entries["output"], name)
    return RunConfig(model=model, cavity=cavity, thermal=thermal,
                     series=series, output=output)


def load_config(path) -> RunConfig:
    with open(path, encoding="utf-8") as handle:
        return parse_config_text(handle.read(), name=str(path))


def _build_metric(block, name):
    if not block:
        raise ConfigError(f"{name}: missing [metric] section")
    domain = (-100.0, 100.0)
    if "domain" in block:
        tokens, lineno = block["domain"]
        values = _floats(tokens, name, lineno, "domain")
        if len(values) != 2:
            raise ConfigError(f"{name} line {lineno}: 'domain' takes two values")
        domain = values
    if "catalog" in block:
        tokens, lineno = block["catalog"]
        if len(tokens) != 1:
            raise ConfigError(f"{name} line {lineno}: 'catalog' takes one name")
        params = {}
        for key in ("phi", "a"):
            if key in block:
                ktokens, klineno = block[key]
                params[key] = _single_float(ktokens, name, klineno, key)
        for key in ("g00", "g11", "g22", "g33", "g03"):
            if key in block:
                _, klineno = block[key]
                raise ConfigError(
                    f"{name} line {klineno}: explicit component '{key}' not "
                    "allowed together with 'catalog'"
                )
        try:
            return catalog_model(tokens[0], domain=domain, **params)
        except ValueError as exc:
            raise ConfigError(f"{name} line {lineno}: {exc}") from None
    missing = [k for k in ("g00", "g11", "g22", "g33") if k not in block]
    if missing:
        raise ConfigError(
            f"{name}: [metric] needs 'catalog' or explicit components; "
            f"missing {', '.join(missing)}"
        )
    coeffs = {}
    for key in ("g00", "g11", "g22", "g33"):
        tokens, lineno = block[key]
        coeffs[key] = _floats(tokens, name, lineno, key)
    if "g03" in block:
        tokens, lineno = block["g03"]
        coeffs["g03"] = _floats(tokens, name, lineno, "g03")
    else:
        coeffs["g03"] = (0.0,)
    return polynomial_metric(coeffs["g00"], coeffs["g11"], coeffs["g22"],
                             coeffs["g33"], coeffs["g03"], domain=domain,
                             name="config")


def _build_cavity(block, name):
    if "L" not in block:
        raise ConfigError(f"{name}: [cavity] section must set 'L'")
    tokens, lineno = block["L"]
    L = _single_float(tokens, name, lineno, "L")
    x_range = (0.0, 1.0)
    y_range = (0.0, 1.0)
    observer_z = 0.0
    if "x_range" in block:
        tokens, lineno = block["x_range"]
        x_range = _floats(tokens, name, lineno, "x_range")
        if len(x_range) != 2:
            raise ConfigError(f"{name} line {lineno}: 'x_range' takes two values")
    if "y_range" in block:
        tokens, lineno = block["y_range"]
        y_range = _floats(tokens, name, lineno, "y_range")
        if len(y_range) != 2:
            raise ConfigError(f"{name} line {lineno}: 'y_range' takes two values")
    if "observer_z" in block:
        tokens, lineno = block["observer_z"]
        observer_z = _single_float(tokens, name, lineno, "observer_z")
    try:
        return CavitySpec(L=L, x_range=x_range, y_range=y_range,
                          observer_z=observer_z)
    except ValueError as exc:
        raise ConfigError(f"{name}: invalid [cavity]: {exc}") from None


def _build_thermal(block, name):
    mode = "coordinate"
    temperature = None
    sweep = None
    points = 60
    spacing = "linear"
    if "mode" in block:
        tokens, lineno = block["mode"]
        mode = tokens[0]
        if mode not in ("coordinate", "proper"):
            raise ConfigError(
                f"{name} line {lineno}: 'mode' must be coordinate or proper"
            )
    if "temperature" in block:
        tokens, lineno = block["temperature"]
        temperature = _single_float(tokens, name, lineno, "temperature")
        if not temperature > 0.0:
            raise ConfigError(f"{name} line {lineno}: temperature must be positive")
    if "sweep" in block:
        tokens, lineno = block["sweep"]
        sweep = _floats(tokens, name, lineno, "sweep")
        if len(sweep) != 2:
            raise ConfigError(f"{name} line {lineno}: 'sweep' takes two values")
        if not (sweep[0] > 0.0 and sweep[1] >= sweep[0]):
            raise ConfigError(
                f"{name} line {lineno}: sweep range must be positive and ordered"
            )
    if temperature is not None and sweep is not None:
        raise ConfigError(f"{name}: [thermal] sets both 'temperature' and 'sweep'")
    if "points" in block:
        tokens, lineno = block["points"]
        points = _single_int(tokens, name, lineno, "points")
        if points < 1:
            raise ConfigError(f"{name} line {lineno}: 'points' must be >= 1")
    if "spacing" in block:
        tokens, lineno = block["spacing"]
        spacing = tokens[0]
        if spacing not in ("linear", "log"):
            raise ConfigError(f"{name} line {lineno}: 'spacing' must be linear or log")
    return ThermalConfig(mode=mode, temperature=temperature, sweep=sweep,
                         points=points, spacing=spacing)


def _build_series(block, name):
    max_terms = 500
    tolerance = 1e-16
    if "max_terms" in block:
        tokens, lineno = block["max_terms"]
        max_terms = _single_int(tokens, name, lineno, "max_terms")
    if "tolerance" in block:
        tokens, lineno = block["tolerance"]
        tolerance = _single_float(tokens, name, lineno, "tolerance")
    try:
        return SeriesControl(max_terms=max_terms, term_tolerance=tolerance)
    except ValueError as exc:
        raise ConfigError(f"{name}: invalid [series]: {exc}") from None


def _build_output(block, name):
    csv = None
    precision = 12
    if "csv" in block:
        tokens, _ = block["csv"]
        csv = " ".join(tokens)
    if "precision" in block:
        tokens, lineno = block["precision"]
        precision = _single_int(tokens, name, lineno, "precision")
        if not 1 <= precision <= 17:
            raise ConfigError(f"{name} line {lineno}: 'precision' must be in [1, 17]")
    return OutputConfig(csv=csv, precision=precision)
