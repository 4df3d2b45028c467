"""Independent brute-force reference computations.

Everything here validates the closed-form implementations from the outside:
quadrature against analytic formulas, mpmath extended precision against the
double-precision series, finite differencing of the full wave operator
against the dispersion relation.  None of the series-evaluation code of the
main modules is reused.

Fixture files
-------------
Golden oracle outputs are stored as plain text, one record per line::

    name, key=value, ..., value=<decimal>, bound=<decimal>, params=<k=v;...>

Lines starting with ``#`` are comments.  ``value`` is the oracle output at
full precision, ``bound`` the certified remainder (tail bound, fit residual
or quadrature residual) and ``params`` the oracle parameters that produced
the record.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import mpmath as mp
import numpy as np
from scipy import integrate

from .errors import OracleConvergenceError
from .metric import MetricComponents, det_neg
from .modes import ModeSpec, mode_frequency, mode_norm_sq

TWO_PI_SQ = (2.0 * math.pi) ** 2


# ---------------------------------------------------------------------------
# Exponential-cutoff mode sum for the flat-space Casimir energy


@dataclass(frozen=True)
class CutoffSweep:
    """Per-area cutoff energies E(lambda)/S and their lambda -> 0 extrapolation.

    ``fit_residual`` is the maximum fit deviation relative to the
    extrapolated value; ``residual_ok`` flags whether it met the 1e-4
    threshold.  The residual is always reported, never hidden.
    """

    lambdas: tuple
    values_per_area: tuple
    extrapolated: float
    fit_residual: float
    residual_ok: bool


FIT_RESIDUAL_THRESHOLD = 1e-4


def _spectral_weight(kappa: float, lam: float) -> float:
    """F(kappa) = int_0^inf k sqrt(k^2+kappa^2) exp(-lam sqrt(k^2+kappa^2)) dk."""
    def integrand(k):
        w = math.sqrt(k * k + kappa * kappa)
        return k * w * math.exp(-lam * w)

    value, _ = integrate.quad(integrand, 0.0, np.inf,
                              epsabs=1e-300, epsrel=1e-12, limit=400)
    return value


def cutoff_energy_per_area_at(L: float, lam: float) -> float:
    """Regularized energy per unit plate area at fixed cutoff length lam.

    Boundary mode sum minus the free-space continuum with the identical
    cutoff.  The n = 0 edge of the discrete spectrum is counted with weight
    one half; without it the difference would retain a plate-independent
    surface divergence ~1/lam^3 and never converge as lam -> 0.
    """
    edge = 0.5 * _spectral_weight(0.0, lam)
    terms = []
    n = 1
    while n < 100000:
        t = _spectral_weight(n * math.pi / L, lam)
        terms.append(t)
        if t < 1e-14:
            break
        n += 1
    boundary_sum = math.fsum(terms) + edge
    continuum, _ = integrate.quad(
        lambda t: _spectral_weight(t * math.pi / L, lam),
        0.0, np.inf, epsabs=1e-300, epsrel=1e-11, limit=400,
    )
    return (boundary_sum - continuum) / (4.0 * math.pi)


def cutoff_casimir_energy_per_area(L: float, lambdas=None) -> CutoffSweep:
    """Cutoff sweep and polynomial extrapolation to lambda = 0.

    The default grid is eight cutoffs from L/10 down to L/24; a degree-4
    polynomial in lambda is fitted and its constant term taken as the
    extrapolated energy per area (target: -pi^2/(1440 L^3)).
    """
    if not L > 0.0:
        raise ValueError(f"plate separation must be positive, got {L!r}")
    if lambdas is None:
        lambdas = tuple(np.linspace(L / 10.0, L / 24.0, 8))
    lambdas = tuple(float(v) for v in lambdas)
    if len(lambdas) < 6:
        raise ValueError("need at least six cutoff values for the degree-4 fit")
    for a, b in zip(lambdas, lambdas[1:]):
        if not b < a:
            raise ValueError("cutoff values must be strictly decreasing")
    if not (0.0 < lambdas[0] <= L / 10.0):
        raise ValueError(f"cutoffs must lie in (0, L/10], got largest {lambdas[0]!r}")

    values = tuple(cutoff_energy_per_area_at(L, lam) for lam in lambdas)
    coeffs = np.polynomial.polynomial.polyfit(lambdas, values, 4)
    fitted = np.polynomial.polynomial.polyval(np.array(lambdas), coeffs)
    extrapolated = float(coeffs[0])
    fit_residual = float(np.max(np.abs(fitted - np.array(values))) / abs(extrapolated))
    return CutoffSweep(
        lambdas=lambdas,
        values_per_area=values,
        extrapolated=extrapolated,
        fit_residual=fit_residual,
        residual_ok=fit_residual <= FIT_RESIDUAL_THRESHOLD,
    )


# ---------------------------------------------------------------------------
# Extended-precision thermal bracket


def _highprec_bracket_and_bound(beta_tilde: float, digits: int, max_terms: int):
    """mpmath bracket value plus a bound on the neglected exponential tail."""
    if digits < 30:
        raise ValueError(f"digits must be >= 30, got {digits!r}")
    if max_terms < 10 ** 5:
        raise ValueError(f"max_terms must be >= 1e5, got {max_terms!r}")
    with mp.workdps(digits + 10):
        bt = mp.mpf(beta_tilde)
        # Terms beyond m_stop contribute only exp(-2 pi m bt) corrections on
        # top of the zeta tail; run until those drop below the target digits.
        m_stop = int(mp.ceil((digits + 15) * mp.log(10) / (2 * mp.pi * bt)))
        m_stop = max(m_stop, 1)
        m_stop = min(m_stop, max_terms)
        total = mp.mpf(0)
        for m in range(1, m_stop + 1):
            x = mp.pi * m * bt
            mb = m * bt
            total += mp.coth(x) / mb ** 3 + mp.pi / (mb ** 2 * mp.sinh(x) ** 2)
        tail = mp.zeta(3, m_stop + 1) / bt ** 3
        value = total + tail
        # Geometric overestimate of the dropped exponential corrections.
        x_next = 2 * mp.pi * (m_stop + 1) * bt
        mb_next = (m_stop + 1) * bt
        lead = (2 / mb_next ** 3 + 4 * mp.pi / mb_next ** 2) * mp.e ** (-x_next)
        bound = lead / (1 - mp.e ** (-2 * mp.pi * bt))
        if bound > mp.mpf(10) ** (-digits) * value:
            raise OracleConvergenceError(
                f"thermal bracket tail bound not met at beta_tilde={beta_tilde!r}: "
                f"bound={mp.nstr(bound, 8)} exceeds 1e-{digits} of value "
                f"{mp.nstr(value, 8)} (max_terms={max_terms})"
            )
        return +value, +bound


def highprec_thermal_bracket(beta_tilde: float, digits: int = 50,
                             max_terms: int = 10 ** 6):
    """Bracket series in software extended precision (mpmath).

    Raises OracleConvergenceError with the bound report when ``max_terms``
    is insufficient to certify ``digits`` correct digits.
    """
    return _highprec_bracket_and_bound(beta_tilde, digits, max_terms)[0]


def highprec_renormalized_free_energy(beta_tilde: float, S_p: float = 1.0,
                                      L_p: float = 1.0, digits: int = 50,
                                      max_terms: int = 10 ** 6):
    """Renormalized proper correction dF_p evaluated fully in mpmath."""
    with mp.workdps(digits + 10):
        bt = mp.mpf(beta_tilde)
        bracket = _highprec_bracket_and_bound(beta_tilde, digits, max_terms)[0]
        subtracted = bracket - mp.pi ** 3 / (45 * bt ** 4)
        return +(-mp.mpf(S_p) / (32 * mp.pi * mp.mpf(L_p) ** 3) * subtracted)


def highprec_heat_capacity_scaled(one_over_bt: float, digits: int = 40):
    """(L_p^2/S_p) dCv_p at 1/bt, via mpmath numerical differentiation.

    Uses dCv_p = -T_p * d2(dF_p)/dT_p2 with an explicit extended-precision
    central second difference (step 10^(-digits//3), far below any feature
    scale but far above the arithmetic noise); shares no derivative
    formulas with the thermal module.
    """
    with mp.workdps(digits + 15):
        T_p = mp.mpf(one_over_bt) / 2  # unit L_p

        def f(T):
            bt = 1 / (2 * T)
            bracket = _highprec_bracket_and_bound(bt, digits, 10 ** 6)[0]
            return -(bracket - mp.pi ** 3 / (45 * bt ** 4)) / (32 * mp.pi)

        h = mp.mpf(10) ** (-(digits // 3))
        second = (f(T_p + h) - 2 * f(T_p) + f(T_p - h)) / h ** 2
        return +(-T_p * second)


# ---------------------------------------------------------------------------
# Mode construction and Klein-Gordon checks


def _mode_profile(c: MetricComponents, L: float, m: ModeSpec, omega: float):
    """Longitudinal profile psi(z) and its exact derivative.

    psi(z) = exp(i alpha z) sin(n pi (z + L/2) / L) with alpha derived
    locally as -omega g03/g00 (equal to omega g^03/g^33).
    """
    alpha = -omega * c.g03 / c.g00
    kz = m.n * math.pi / L

    def psi(z):
        return complex(math.cos(alpha * z), math.sin(alpha * z)) * math.sin(kz * (z + L / 2.0))

    def dpsi(z):
        phase = complex(math.cos(alpha * z), math.sin(alpha * z))
        s = math.sin(kz * (z + L / 2.0))
        ds = kz * math.cos(kz * (z + L / 2.0))
        return phase * (1j * alpha * s + ds)

    return psi, dpsi, alpha


def mode_norm_check(c: MetricComponents, L: float, m: ModeSpec) -> float:
    """Relative residual of mode_norm_sq against the scalar-product quadrature.

    The Klein-Gordon product of the constructed mode with itself is
    integrated numerically along z on the constant-time hypersurface (the
    transverse plane contributes a box area that cancels against the
    box-normalized momentum delta), giving an implied normalization that is
    compared with the closed form.
    """
    omega = mode_frequency(c, L, m)
    psi, dpsi, _ = _mode_profile(c, L, m, omega)
    disc = c.g03 * c.g03 - c.g00 * c.g33
    g00_up = -c.g33 / disc
    n_t = math.sqrt(g00_up)
    n_z = -c.g03 * math.sqrt(g00_up) / c.g33
    sqrt_gs = math.sqrt(det_neg(c) / c.g00)

    def density(z):
        p = psi(z)
        dp = dpsi(z)
        # n^mu d_mu acting on the mode: the time factor contributes -i omega.
        directional = n_t * (-1j * omega) * p + n_z * dp
        current = 1j * (directional * p.conjugate() - p * directional.conjugate())
        return current.real

    product, _ = integrate.quad(density, -L / 2.0, L / 2.0,
                                epsabs=1e-14, epsrel=1e-12, limit=200)
    implied = 1.0 / (TWO_PI_SQ * sqrt_gs * product)
    expected = mode_norm_sq(c, L, omega)
    return abs(implied - expected) / expected


def mode_orthogonality_check(c: MetricComponents, L: float, n1: int, n2: int,
                             kx: float = 0.0, ky: float = 0.0) -> float:
    """Normalized Klein-Gordon product of two modes with distinct n, same k."""
    m1 = ModeSpec(n=n1, kx=kx, ky=ky)
    m2 = ModeSpec(n=n2, kx=kx, ky=ky)
    w1 = mode_frequency(c, L, m1)
    w2 = mode_frequency(c, L, m2)
    psi1, dpsi1, _ = _mode_profile(c, L, m1, w1)
    psi2, dpsi2, _ = _mode_profile(c, L, m2, w2)
    disc = c.g03 * c.g03 - c.g00 * c.g33
    g00_up = -c.g33 / disc
    n_t = math.sqrt(g00_up)
    n_z = -c.g03 * math.sqrt(g00_up) / c.g33

    def cross_density(z):
        p1, p2 = psi1(z), psi2(z)
        d1 = n_t * (-1j * w1) * p1 + n_z * dpsi1(z)
        d2 = n_t * (-1j * w2) * p2 + n_z * dpsi2(z)
        return 1j * (d1 * p2.conjugate() - p1 * d2.conjugate())

    # The cross product integrates to ~0; absolute tolerance governs and the
    # relative target is left loose to avoid spurious roundoff reports.
    re, _ = integrate.quad(lambda z: cross_density(z).real, -L / 2.0, L / 2.0,
                           epsabs=1e-14, epsrel=1e-6, limit=200)
    im, _ = integrate.quad(lambda z: cross_density(z).imag, -L / 2.0, L / 2.0,
                           epsabs=1e-14, epsrel=1e-6, limit=200)

    def self_density(psi, dpsi, w):
        def d(z):
            p = psi(z)
            dd = n_t * (-1j * w) * p + n_z * dpsi(z)
            return (1j * (dd * p.conjugate() - p * dd.conjugate())).real
        val, _ = integrate.quad(d, -L / 2.0, L / 2.0,
                                epsabs=1e-14, epsrel=1e-12, limit=200)
        return val

    norm = math.sqrt(self_density(psi1, dpsi1, w1) * self_density(psi2, dpsi2, w2))
    return abs(complex(re, im)) / norm


# Fourth-order central-difference weights for first and second derivatives.
_D1_OFFSETS = (-2, -1, 1, 2)
_D1_WEIGHTS = (1.0 / 12.0, -8.0 / 12.0, 8.0 / 12.0, -1.0 / 12.0)
_D2_OFFSETS = (-2, -1, 0, 1, 2)
_D2_WEIGHTS = (-1.0 / 12.0, 16.0 / 12.0, -30.0 / 12.0, 16.0 / 12.0, -1.0 / 12.0)
_FD_SCALE = 6e-3  # near-optimal step for 4th-order stencils in double


def mode_pde_residual(c: MetricComponents, L: float, m: ModeSpec,
                      samples: int = 12, seed: int = 0) -> float:
    """Max relative residual of the scalar wave operator on the mode.

    For constant components the wave equation reduces to
    g^mu nu d_mu d_nu phi = 0 with the inverse metric taken from a numerical
    4x4 inversion.  All derivatives are 4th-order finite differences of the
    constructed mode, evaluated at random interior points away from the
    nodal planes.
    """
    omega = mode_frequency(c, L, m)
    _, _, alpha = _mode_profile(c, L, m, omega)
    kz = m.n * math.pi / L

    matrix = np.array([
        [c.g00, 0.0, 0.0, c.g03],
        [0.0, c.g11, 0.0, 0.0],
        [0.0, 0.0, c.g22, 0.0],
        [c.g03, 0.0, 0.0, c.g33],
    ])
    inv = np.linalg.inv(matrix)

    def phi(t, x, y, z):
        arg = -omega * t + m.kx * x + m.ky * y + alpha * z
        return complex(math.cos(arg), math.sin(arg)) * math.sin(kz * (z + L / 2.0))

    h_t = _FD_SCALE / max(omega, 1.0)
    h_x = _FD_SCALE / max(abs(m.kx), 1.0)
    h_y = _FD_SCALE / max(abs(m.ky), 1.0)
    h_z = _FD_SCALE / max(kz + abs(alpha), 1.0)

    rng = np.random.default_rng(seed)
    worst = 0.0
    taken = 0
    while taken < samples:
        t0 = rng.uniform(-1.0, 1.0)
        x0 = rng.uniform(-1.0, 1.0)
        y0 = rng.uniform(-1.0, 1.0)
        z0 = rng.uniform(-0.45 * L, 0.45 * L)
        if abs(math.sin(kz * (z0 + L / 2.0))) < 0.2:
            continue
        taken += 1

        def d2(axis, h):
            acc = 0j
            for off, w in zip(_D2_OFFSETS, _D2_WEIGHTS):
                point = [t0, x0, y0, z0]
                point[axis] += off * h
                acc += w * phi(*point)
            return acc / (h * h)

        f_tt = d2(0, h_t)
        f_xx = d2(1, h_x)
        f_yy = d2(2, h_y)
        f_zz = d2(3, h_z)
        f_tz = 0j
        for ot, wt in zip(_D1_OFFSETS, _D1_WEIGHTS):
            inner = 0j
            for oz, wz in zip(_D1_OFFSETS, _D1_WEIGHTS):
                inner += wz * phi(t0 + ot * h_t, x0, y0, z0 + oz * h_z)
            f_tz += wt * inner / h_z
        f_tz /= h_t

        residual = (
            inv[0, 0] * f_tt + inv[1, 1] * f_xx + inv[2, 2] * f_yy
            + inv[3, 3] * f_zz + 2.0 * inv[0, 3] * f_tz
        )
        value = abs(phi(t0, x0, y0, z0))
        scale = value * (
            abs(inv[0, 0]) * omega ** 2 + abs(inv[1, 1]) * m.kx ** 2
            + abs(inv[2, 2]) * m.ky ** 2 + abs(inv[3, 3]) * (kz ** 2 + alpha ** 2)
            + 2.0 * abs(inv[0, 3]) * omega * (abs(alpha) + kz)
        )
        worst = max(worst, abs(residual) / scale)
    return worst


# ---------------------------------------------------------------------------
# Fixture records


@dataclass(frozen=True)
class FixtureRecord:
    """One golden oracle output: inputs, value, certified bound, parameters."""

    name: str
    inputs: tuple  # ((key, value-string), ...)
    value: str
    bound: str
    params: str


FIXTURE_HEADER = (
    "# stationary-casimir oracle fixtures\n"
    "# one record per line:\n"
    "#   name, key=value, ..., value=<decimal>, bound=<decimal>, params=<k=v;...>\n"
)


def format_fixture(record: FixtureRecord) -> str:
    fields = [record.name]
    fields.extend(f"{k}={v}" for k, v in record.inputs)
    fields.append(f"value={record.value}")
    fields.append(f"bound={record.bound}")
    fields.append(f"params={record.params}")
    return ", ".join(fields)


def write_fixtures(path, records, append: bool = False) -> None:
    mode = "a" if append else "w"
    with open(path, mode, encoding="ascii", newline="\n") as handle:
        if not append:
            handle.write(FIXTURE_HEADER)
        for record in records:
            handle.write(format_fixture(record) + "\n")


def read_fixtures(path):
    """Parse a fixture file into FixtureRecord values."""
    records = []
    with open(path, encoding="ascii") as handle:
        for raw in handle:
            line = raw.strip()
            if not line or line.startswith("#"):
                continue
            fields = [f.strip() for f in line.split(",")]
            name = fields[0]
            inputs = []
            value = bound = params = ""
            for f in fields[1:]:
                key, _, val = f.partition("=")
                if key == "value":
                    value = val
                elif key == "bound":
                    bound = val
                elif key == "params":
                    params = val
                else:
                    inputs.append((key, val))
            records.append(FixtureRecord(name=name, inputs=tuple(inputs),
                                         value=value, bound=bound, params=params))
    return records


def thermal_bracket_fixture(beta_tilde: float, digits: int = 50,
                            max_terms: int = 10 ** 6) -> FixtureRecord:
    """Golden record for the bracket series at one beta_tilde."""
    value, bound = _highprec_bracket_and_bound(beta_tilde, digits, max_terms)
    with mp.workdps(digits + 10):
        return FixtureRecord(
            name="thermal_bracket",
            inputs=(("beta_tilde", repr(beta_tilde)),),
            value=mp.nstr(value, digits),
            bound=mp.nstr(bound, 8),
            params=f"digits={digits};max_terms={max_terms}",
        )


def renormalized_free_energy_fixture(beta_tilde: float, digits: int = 50,
                                     max_terms: int = 10 ** 6) -> FixtureRecord:
    """Golden record for dF_p at unit proper geometry."""
    value = highprec_renormalized_free_energy(beta_tilde, 1.0, 1.0, digits, max_terms)
    _, bound = _highprec_bracket_and_bound(beta_tilde, digits, max_terms)
    with mp.workdps(digits + 10):
        return FixtureRecord(
            name="renormalized_free_energy",
            inputs=(("beta_tilde", repr(beta_tilde)), ("S_p", "1"), ("L_p", "1")),
            value=mp.nstr(value, digits),
            bound=mp.nstr(bound, 8),
            params=f"digits={digits};max_terms={max_terms}",
        )


def cutoff_fixture(L: float, lambdas=None) -> FixtureRecord:
    """Golden record for the cutoff-extrapolated flat Casimir energy per area."""
    sweep = cutoff_casimir_energy_per_area(L, lambdas)
    lam_text = ";".join(f"{v:.6g}" for v in sweep.lambdas)
    return FixtureRecord(
        name="cutoff_casimir_per_area",
        inputs=(("L", repr(L)),),
        value=repr(sweep.extrapolated),
        bound=repr(sweep.fit_residual),
        params=f"lambdas={lam_text};degree=4",
    )
