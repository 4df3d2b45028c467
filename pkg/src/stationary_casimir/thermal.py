"""Thermal corrections to the cavity free energy and derived thermodynamics.

Everything thermal is controlled by the dimensionless inverse temperature

    bt = 1 / (2 * T_p * L_p),

where T_p = T / sqrt(g00(0)) is the proper temperature.  The central object
is the bracket series

    B(bt) = sum_{m>=1} [ coth(pi m bt)/(m bt)^3 + pi/((m bt)^2 sinh(pi m bt)^2) ],

summed with compensated summation.  Terms with pi*m*bt > 37 are within one
double-precision ulp of 1/(m bt)^3, so the series is cut there and completed
analytically with a Hurwitz-zeta tail; the neglected exponential corrections
are below 1e-16 relative for every bt above the accuracy floor.

The raw correction (with the spacetime determinant at z = 0) is

    dF = -sqrt(-g) S_p/(32 pi L_p^3) * B(bt) + zeta(3) sqrt(-g) S_p/(32 pi (L_p bt)^3)

and the renormalized proper correction subtracts the large-volume asymptotics,

    dF_p = -S_p/(32 pi L_p^3) * (B(bt) - pi^3/(45 bt^4)).

Accuracy floor: below bt = 0.01 the subtraction against pi^3/(45 bt^4)
cancels too many leading digits in double precision (about six lost at the
floor itself), so evaluations there raise AccuracyFloorError instead of
returning degraded values.  The high-precision oracle covers smaller bt.

Derivatives with respect to T_p (entropy, internal energy, heat capacity)
are evaluated term by term in closed form and cross-checked on every call
against central finite differences with step 5e-5 * T_p: the entropy
against a first difference of dF_p, and the heat capacity against a first
difference of the analytic entropy (a plain second difference of dF_p
cannot resolve the tiny curvature in the heat-capacity tail in double
precision).  Steps between 1e-3 * T_p and 1e-5 * T_p reproduce the
analytic values to better than 1e-6 relative (see the step-sweep test).
A disagreement beyond 1e-6 raises InternalConsistencyError.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from scipy.special import zeta as _hurwitz_zeta

from .casimir import observer_energy
from .errors import AccuracyFloorError, InternalConsistencyError
from .geometry import ProperGeometry
from .metric import MetricModel, components_at, det_neg

#: Riemann zeta values stored to 30 significant digits.
ZETA_3 = 1.20205690315959428539973816151
ZETA_4 = 1.08232323371113819151600369654

#: Smallest bt accepted by the double-precision series evaluations.
BETA_TILDE_FLOOR = 0.01

#: Beyond this x = pi*m*bt, coth(x) - 1 and 1/sinh(x)^2 are below 1e-31.
EXP_NEGLIGIBLE_X = 37.0

#: Relative step of the built-in finite-difference derivative cross-check.
FD_STEP = 5e-5
FD_CHECK_TOL = 1e-6
#: Safety multiple on the double-precision noise floor of the cross-checks.
FD_NOISE_SAFETY = 8.0


@dataclass(frozen=True)
class SeriesControl:
    """Truncation controls for the bracket series."""

    max_terms: int = 500
    term_tolerance: float = 1e-16
    summation: str = "compensated"

    def __post_init__(self):
        if self.max_terms < 1:
            raise ValueError(f"max_terms must be >= 1, got {self.max_terms!r}")
        if not self.term_tolerance >= 0.0:
            raise ValueError("term_tolerance must be non-negative")
        if self.summation != "compensated":
            raise ValueError(
                f"unsupported summation mode {self.summation!r}; "
                "only 'compensated' is implemented"
            )


DEFAULT_SERIES = SeriesControl()


@dataclass(frozen=True)
class ThermalPoint:
    """Coordinate temperature, proper temperature and bt = 1/(2 T_p L_p)."""

    T: float
    T_p: float
    beta_tilde: float

    def __post_init__(self):
        if not (self.T > 0.0 and self.T_p > 0.0 and self.beta_tilde > 0.0):
            raise ValueError("temperatures and beta_tilde must be positive")


@dataclass(frozen=True)
class ThermoReport:
    """Thermal corrections and totals at one temperature.

    The *_p fields are the proper corrections (flat-background values); the
    totals F_total and U include the observed zero-temperature energy, and
    S_entropy and C_V carry the sqrt(-g(0)) determinant factor.  Scaled
    fields are the dimensionless combinations (L_p^3/S_p) dF_p,
    (L_p^3/S_p) dU_p, (L_p^2/S_p) dS_p and (L_p^2/S_p) dCv_p.
    blackbody_F is the proper black-body free energy -pi^2 V_p T_p^4 / 90.
    """

    dF_p: float
    dU_p: float
    dS_p: float
    dCv_p: float
    F_total: float
    U: float
    S_entropy: float
    C_V: float
    blackbody_F: float
    F_scaled: float
    U_scaled: float
    S_scaled: float
    Cv_scaled: float


def thermal_point(model: MetricModel, geom: ProperGeometry, temperature: float,
                  mode: str = "coordinate") -> ThermalPoint:
    """Build a ThermalPoint from a coordinate or proper temperature."""
    if not temperature > 0.0:
        raise ValueError(f"temperature must be positive, got {temperature!r}")
    g00_origin = components_at(model, 0.0).g00
    if mode == "coordinate":
        T = temperature
        T_p = T / math.sqrt(g00_origin)
    elif mode == "proper":
        T_p = temperature
        T = T_p * math.sqrt(g00_origin)
    else:
        raise ValueError(f"temperature mode must be 'coordinate' or 'proper', got {mode!r}")
    return ThermalPoint(T=T, T_p=T_p, beta_tilde=1.0 / (2.0 * T_p * geom.L_p))


def _require_floor(beta_tilde: float) -> None:
    if not beta_tilde > 0.0:
        raise ValueError(f"beta_tilde must be positive, got {beta_tilde!r}")
    if beta_tilde < BETA_TILDE_FLOOR:
        raise AccuracyFloorError(
            f"beta_tilde={beta_tilde!r} is below the accuracy floor "
            f"{BETA_TILDE_FLOOR}; the renormalizing subtraction loses too many "
            "digits in double precision there (use the high-precision oracle)"
        )


def _phi_derivatives(x: float):
    """phi, phi', phi'' for phi(x) = coth(x)/x^3 + 1/(x^2 sinh(x)^2)."""
    coth = 1.0 / math.tanh(x)
    s = math.sinh(x)
    csch2 = 1.0 / (s * s)
    x2 = x * x
    x3 = x2 * x
    x4 = x2 * x2
    x5 = x4 * x
    phi = coth / x3 + csch2 / x2
    dphi = -3.0 * coth / x4 - 3.0 * csch2 / x3 - 2.0 * csch2 * coth / x2
    d2phi = (
        12.0 * coth / x5
        + 12.0 * csch2 / x4
        + 10.0 * csch2 * coth / x3
        + 2.0 * csch2 * (2.0 * coth * coth + csch2) / x2
    )
    return phi, dphi, d2phi


def _bracket_core(beta_tilde: float, ctl: SeriesControl):
    """(B, dB/dbt, d2B/dbt2) without the accuracy-floor guard."""
    pi = math.pi
    pi3 = pi ** 3
    terms0 = []
    terms1 = []
    terms2 = []
    running = 0.0
    tail_start = ctl.max_terms + 1
    m = 1
    while m <= ctl.max_terms:
        x = pi * m * beta_tilde
        if x > EXP_NEGLIGIBLE_X:
            tail_start = m
            break
        phi, dphi, d2phi = _phi_derivatives(x)
        term = pi3 * phi
        terms0.append(term)
        terms1.append(pi3 * pi * m * dphi)
        terms2.append(pi3 * (pi * m) ** 2 * d2phi)
        running += term
        if term < ctl.term_tolerance * running:
            tail_start = m + 1
            break
        m += 1

    # Hurwitz-zeta completion of the pure 1/(m bt)^3 tail; the dropped
    # exponential corrections are below the terms already accepted.
    tail = float(_hurwitz_zeta(3.0, tail_start))
    bt3 = beta_tilde ** 3
    bt4 = bt3 * beta_tilde
    bt5 = bt4 * beta_tilde
    b0 = math.fsum(terms0) + tail / bt3
    b1 = math.fsum(terms1) - 3.0 * tail / bt4
    b2 = math.fsum(terms2) + 12.0 * tail / bt5
    return b0, b1, b2


def bracket_sum(beta_tilde: float, ctl: SeriesControl = DEFAULT_SERIES) -> float:
    """Compensated evaluation of the bracket series B(bt).

    Raises AccuracyFloorError below bt = 0.01.
    """
    _require_floor(beta_tilde)
    return _bracket_core(beta_tilde, ctl)[0]


def bracket_sum_with_derivatives(beta_tilde: float,
                                 ctl: SeriesControl = DEFAULT_SERIES):
    """B(bt) together with its first two bt-derivatives, term by term."""
    _require_floor(beta_tilde)
    return _bracket_core(beta_tilde, ctl)


def _renormalized_from_bracket(b0: float, beta_tilde: float,
                               geom: ProperGeometry) -> float:
    subtracted = b0 - math.pi ** 3 / (45.0 * beta_tilde ** 4)
    return -geom.S_p / (32.0 * math.pi * geom.L_p ** 3) * subtracted


def thermal_free_energy_raw(model: MetricModel, geom: ProperGeometry,
                            point: ThermalPoint,
                            ctl: SeriesControl = DEFAULT_SERIES) -> float:
    """Unrenormalized thermal correction, carrying sqrt(-g(0))."""
    _require_floor(point.beta_tilde)
    sqrt_det = math.sqrt(det_neg(components_at(model, 0.0)))
    b0 = _bracket_core(point.beta_tilde, ctl)[0]
    scale = geom.S_p / (32.0 * math.pi * geom.L_p ** 3)
    return sqrt_det * (-scale * b0 + scale * ZETA_3 / point.beta_tilde ** 3)


def thermal_free_energy_renormalized(beta_tilde: float, geom: ProperGeometry,
                                     ctl: SeriesControl = DEFAULT_SERIES) -> float:
    """Renormalized proper correction dF_p; vanishes as L_p grows at fixed T_p."""
    _require_floor(beta_tilde)
    b0 = _bracket_core(beta_tilde, ctl)[0]
    return _renormalized_from_bracket(b0, beta_tilde, geom)


def asymptotic_expansion(geom: ProperGeometry, T_p: float):
    """Large-volume expansion terms of the raw correction per sqrt(-g).

    Returns the triple (T^4 term, T^3 term, constant term)

        (-V_p pi^2 T_p^4 / 90,  S_p zeta(3) T_p^3 / (4 pi),
         -pi^2 S_p / (720 L_p^3))

    used for renormalization bookkeeping.  The first two are subtracted by
    the renormalized correction; the constant already vanishes for
    infinitely separated plates and is kept for diagnostics only.
    """
    if not T_p > 0.0:
        raise ValueError(f"T_p must be positive, got {T_p!r}")
    term_t4 = -geom.V_p * math.pi ** 2 * T_p ** 4 / 90.0
    term_t3 = geom.S_p * ZETA_3 * T_p ** 3 / (4.0 * math.pi)
    term_const = -math.pi ** 2 * geom.S_p / (720.0 * geom.L_p ** 3)
    return term_t4, term_t3, term_const


def blackbody_free_energy(T_p: float, V_p: float) -> float:
    """Black-body radiation free energy -pi^2 V_p T_p^4 / 90."""
    if not (T_p > 0.0 and V_p > 0.0):
        raise ValueError("T_p and V_p must be positive")
    return -math.pi ** 2 * V_p * T_p ** 4 / 90.0


def _rel_diff(a: float, b: float) -> float:
    scale = max(abs(a), abs(b))
    if scale == 0.0:
        return 0.0
    return abs(a - b) / scale


def thermodynamics(model: MetricModel, geom: ProperGeometry, point: ThermalPoint,
                   ctl: SeriesControl = DEFAULT_SERIES,
                   observer_z: float = 0.0) -> ThermoReport:
    """Free energy, internal energy, entropy and heat capacity at one point.

    Totals use the zero-temperature energy seen by the stationary observer
    at ``observer_z`` (coordinate origin by default):

        F_total = E_z + sqrt(-g) dF_p
        U       = E_z + sqrt(-g) dU_p       dU_p = dF_p + T_p dS_p
        S       = -dF_total/dT_p = sqrt(-g) dS_p,  dS_p = -d(dF_p)/dT_p
        C_V     = sqrt(-g) dCv_p,            dCv_p = d(dU_p)/dT_p

    The entropy sign follows S = -dF/dT_p throughout, which makes dS_p
    non-negative on the plotted temperature range.
    """
    bt = point.beta_tilde
    _require_floor(bt)
    T_p = point.T_p
    L_p = geom.L_p

    b0, b1, b2 = _bracket_core(bt, ctl)
    pi3_45 = math.pi ** 3 / 45.0
    g0 = b0 - pi3_45 / bt ** 4
    g1 = b1 + 4.0 * pi3_45 / bt ** 5
    g2 = b2 - 20.0 * pi3_45 / bt ** 6

    cc = -geom.S_p / (32.0 * math.pi * L_p ** 3)
    dF_p = cc * g0
    dS_p = cc * 2.0 * L_p * bt * bt * g1
    dU_p = cc * (g0 + bt * g1)
    dCv_p = -cc * 2.0 * L_p * bt * bt * (bt * g2 + 2.0 * g1)

    # Per-call cross-check of the analytic derivatives against central
    # finite differences in T_p (the floor guard is bypassed for the
    # two probe points, which sit a relative 5e-5 away).
    h = FD_STEP * T_p
    bt_plus = 1.0 / (2.0 * (T_p + h) * L_p)
    bt_minus = 1.0 / (2.0 * (T_p - h) * L_p)
    b_plus = _bracket_core(bt_plus, ctl)
    b_minus = _bracket_core(bt_minus, ctl)
    f_plus = _renormalized_from_bracket(b_plus[0], bt_plus, geom)
    f_minus = _renormalized_from_bracket(b_minus[0], bt_minus, geom)
    dS_fd = -(f_plus - f_minus) / (2.0 * h)

    def _entropy_at(bt_probe, b_probe, T_probe):
        g1_probe = b_probe[1] + 4.0 * pi3_45 / bt_probe ** 5
        return cc * bt_probe / T_probe * g1_probe

    dS_plus = _entropy_at(bt_plus, b_plus, T_p + h)
    dS_minus = _entropy_at(bt_minus, b_minus, T_p - h)
    dCv_fd = T_p * (dS_plus - dS_minus) / (2.0 * h)

    # Noise floors of the finite differences: rounding of the summed series
    # (magnitude |b0|, |b1| before the renormalizing subtraction) divided by
    # the step.  Differences below the floor are unresolvable in double
    # precision, not evidence of disagreement.
    eps = 2.220446049250313e-16
    s_noise = FD_NOISE_SAFETY * eps * abs(cc) * abs(b0) / (FD_STEP * T_p)
    cv_noise = FD_NOISE_SAFETY * eps * abs(cc) * 2.0 * L_p * bt * bt * abs(b1) / FD_STEP
    if abs(dS_p - dS_fd) > max(FD_CHECK_TOL * max(abs(dS_p), abs(dS_fd)), s_noise):
        raise InternalConsistencyError(
            f"entropy derivative cross-check failed at T_p={T_p!r}: "
            f"analytic={dS_p!r}, finite-difference={dS_fd!r}"
        )
    if abs(dCv_p - dCv_fd) > max(FD_CHECK_TOL * max(abs(dCv_p), abs(dCv_fd)), cv_noise):
        raise InternalConsistencyError(
            f"heat-capacity derivative cross-check failed at T_p={T_p!r}: "
            f"analytic={dCv_p!r}, finite-difference={dCv_fd!r}"
        )

    sqrt_det = math.sqrt(det_neg(components_at(model, 0.0)))
    E_obs = observer_energy(model, geom, observer_z)
    F_total = E_obs + sqrt_det * dF_p
    U = E_obs + sqrt_det * dU_p
    S_entropy = sqrt_det * dS_p
    C_V = sqrt_det * dCv_p

    # U crosses zero where E_z and the thermal part cancel, so the identity
    # gap is measured against the participating terms, not against U itself.
    identity_scale = max(abs(U), abs(F_total), abs(T_p * S_entropy))
    identity_gap = abs(U - (F_total + T_p * S_entropy))
    if identity_gap > 1e-10 * identity_scale:
        raise InternalConsistencyError(
            f"thermodynamic identity violated by {identity_gap!r} "
            f"(scale {identity_scale!r}) at T_p={T_p!r}"
        )

    shape = geom.L_p ** 3 / geom.S_p
    shape2 = geom.L_p ** 2 / geom.S_p
    return ThermoReport(
        dF_p=dF_p,
        dU_p=dU_p,
        dS_p=dS_p,
        dCv_p=dCv_p,
        F_total=F_total,
        U=U,
        S_entropy=S_entropy,
        C_V=C_V,
        blackbody_F=blackbody_free_energy(T_p, geom.V_p),
        F_scaled=shape * dF_p,
        U_scaled=shape * dU_p,
        S_scaled=shape2 * dS_p,
        Cv_scaled=shape2 * dCv_p,
    )


def high_temperature_exponent(ctl: SeriesControl = DEFAULT_SERIES,
                              u_lo: float = 20.0, u_hi: float = 40.0,
                              points: int = 21) -> float:
    """Fitted power of |dF_p| against 1/bt on [u_lo, u_hi] (unit geometry).

    A log-log least-squares slope near 1 means the renormalized correction
    grows linearly with the proper temperature at high temperature.
    """
    import numpy as np

    geom = ProperGeometry(L_p=1.0, S_p=1.0, V_p=1.0)
    us = np.linspace(u_lo, u_hi, points)
    vals = [abs(thermal_free_energy_renormalized(1.0 / u, geom, ctl)) for u in us]
    slope = np.polyfit(np.log(us), np.log(vals), 1)[0]
    return float(slope)
