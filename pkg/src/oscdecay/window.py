"""Exponential-time windows, admissibility gates and oscillation periods.

A mode contributes a clean exponential stretch of the lab-frame decay law
only while the branch-cut background stays negligible against it. The
gate parameter xi'_j measures that background against mode j; admitted
modes carry time intervals [2 zeta_min gamma / Gamma_j, 2 zeta_max gamma / Gamma_j]
whose union is the usable window.
"""

import math
from dataclasses import dataclass

import numpy as np

from .kinematics import BoostContext, RestModeSet

__all__ = [
    "COMMENSURATE_REL_TOL",
    "ConstraintCheck",
    "PeriodReport",
    "TimeWindow",
    "WindowError",
    "WindowParams",
    "constraint_report",
    "exponential_windows",
    "periods",
    "w_fn",
    "xi_prime",
]

COMMENSURATE_REL_TOL = 1e-9


class WindowError(ValueError):
    """Window construction was requested outside its domain."""


@dataclass(frozen=True)
class WindowParams:
    """Dimensionless window bounds and grading thresholds.

    zeta_min/zeta_max bound the exponential times 2 zeta gamma / Gamma_j;
    the defaults honor the ratio zeta_min/zeta_max ~= 1.83e-5 that the
    merge condition relies on. xi_gate admits a mode when xi'_j <= gate.
    pass_ratio/warn_ratio grade the "much greater than one" checks.
    """

    zeta_min: float = 1e-4
    zeta_max: float = 5.4645
    xi_gate: float = 1e-3
    pass_ratio: float = 10.0
    warn_ratio: float = 3.0

    def __post_init__(self):
        if not (0.0 < self.zeta_min < self.zeta_max):
            raise WindowError(
                "need 0 < zeta_min < zeta_max, got %r, %r" % (self.zeta_min, self.zeta_max)
            )
        if self.xi_gate <= 0.0:
            raise WindowError("xi_gate must be positive, got %r" % self.xi_gate)
        if not (0.0 < self.warn_ratio <= self.pass_ratio):
            raise WindowError(
                "need 0 < warn_ratio <= pass_ratio, got %r, %r"
                % (self.warn_ratio, self.pass_ratio)
            )


@dataclass(frozen=True)
class TimeWindow:
    """Admitted exponential-time intervals in both frames.

    admitted lists mode indices with xi'_j <= gate (ascending); excluded
    holds (index, xi'_j) for the rest. intervals_* follow the admitted
    order; each lab interval is exactly gamma times its rest counterpart.
    merged is true when consecutive admitted widths satisfy
    Gamma_{j_l}/Gamma_{j_{l+1}} > zeta_min/zeta_max, so the union is a
    single interval.
    """

    admitted: tuple
    excluded: tuple
    xi_values: tuple
    intervals_rest: tuple
    intervals_lab: tuple
    union_rest: tuple
    union_lab: tuple
    merged: bool
    gamma: float
    params: WindowParams


@dataclass(frozen=True)
class ConstraintCheck:
    """One graded validity check: value is the tested ratio."""

    name: str
    value: float
    status: str
    detail: str


@dataclass(frozen=True)
class PeriodReport:
    """Oscillation periods of the windowed decay law in both frames.

    T0/Tp are None when the active frequencies are not commensurate.
    k_values holds the integer ratios omega_max / Omega_j of the active
    oscillating modes when they exist.
    """

    T0: object
    Tp: object
    commensurate: bool
    omega_max: float
    k_values: object


def w_fn(M: float, Omega: float, a: float) -> float:
    """Background strength factor W = 1 + a r (3 - r) / (1 - r)^2, r = (Omega/M)^2.

    W grows from 1 (no oscillation) toward 29/18 at the extreme corner
    Omega = M/2, a = 1/2; the endpoint itself is admitted here so the
    bound can be probed even though mode validation stops short of it.
    """
    M = float(M)
    Omega = float(Omega)
    a = float(a)
    if M <= 0.0:
        raise WindowError("w_fn requires M > 0, got %r" % M)
    if not 0.0 <= Omega < M:
        raise WindowError("w_fn requires 0 <= Omega < M, got Omega=%r, M=%r" % (Omega, M))
    if not 0.0 <= a <= 0.5:
        raise WindowError("w_fn requires 0 <= a <= 1/2, got %r" % a)
    r = (Omega / M) ** 2
    return 1.0 + a * r * (3.0 - r) / ((1.0 - r) * (1.0 - r))


def _background_sum(modes: RestModeSet) -> float:
    return sum(
        float(modes.w[l]) * float(modes.Gamma[l])
        * w_fn(modes.M, float(modes.Omega[l]), float(modes.a[l]))
        for l in range(modes.N)
    )


def xi_prime(modes: RestModeSet, ctx: BoostContext, j: int) -> float:
    """Gate parameter of mode j: branch-cut background over its pole term.

    xi'_j = sqrt(Gamma_j/(pi M) * sqrt(1 - 1/gamma^2))
            * sum_l w_l Gamma_l W(M, Omega_l, a_l) / (2 M w_j (1 - 2 a_j)).
    The nonrelativistic limit gamma -> 1+ is excluded: the vanishing
    velocity factor would admit every mode for the wrong reason.
    """
    if ctx.gamma <= 1.0:
        raise WindowError("xi_prime requires gamma > 1 (nonrelativistic boost excluded)")
    j = int(j)
    if not 0 <= j < modes.N:
        raise WindowError("mode index %r out of range 0..%d" % (j, modes.N - 1))
    aj = float(modes.a[j])
    if aj >= 0.5:
        raise WindowError("gate diverges as a -> 1/2, got a=%r" % aj)
    # sqrt(1 - 1/gamma^2) written in factored form to stay accurate near gamma = 1
    velocity = math.sqrt((1.0 - 1.0 / ctx.gamma) * (1.0 + 1.0 / ctx.gamma))
    gj = float(modes.Gamma[j])
    lead = math.sqrt(gj / (math.pi * modes.M) * velocity)
    return lead * _background_sum(modes) / (2.0 * modes.M * float(modes.w[j]) * (1.0 - 2.0 * aj))


def _merge_intervals(intervals):
    if not intervals:
        return ()
    spans = sorted(intervals)
    out = [list(spans[0])]
    for lo, hi in spans[1:]:
        if lo <= out[-1][1]:
            out[-1][1] = max(out[-1][1], hi)
        else:
            out.append([lo, hi])
    return tuple((lo, hi) for lo, hi in out)


def exponential_windows(modes: RestModeSet, ctx: BoostContext, params: WindowParams = None) -> TimeWindow:
    """Admit modes through the xi' gate and build their time intervals.

    Returns an empty window (no intervals, merged false) when every mode
    is excluded; the excluded list keeps the offending xi' values as the
    diagnostic.
    """
    if params is None:
        params = WindowParams()
    if ctx.gamma <= 1.0:
        raise WindowError("exponential_windows requires gamma > 1")

    xi = tuple(xi_prime(modes, ctx, j) for j in range(modes.N))
    admitted = tuple(j for j in range(modes.N) if xi[j] <= params.xi_gate)
    excluded = tuple((j, xi[j]) for j in range(modes.N) if xi[j] > params.xi_gate)

    intervals_rest = tuple(
        (2.0 * params.zeta_min / float(modes.Gamma[j]), 2.0 * params.zeta_max / float(modes.Gamma[j]))
        for j in admitted
    )
    # lab intervals are exactly gamma times the rest ones, by construction
    intervals_lab = tuple((ctx.gamma * lo, ctx.gamma * hi) for lo, hi in intervals_rest)

    ratio = params.zeta_min / params.zeta_max
    merged = bool(admitted) and all(
        float(modes.Gamma[admitted[i]]) / float(modes.Gamma[admitted[i + 1]]) > ratio
        for i in range(len(admitted) - 1)
    )

    return TimeWindow(
        admitted=admitted,
        excluded=excluded,
        xi_values=xi,
        intervals_rest=intervals_rest,
        intervals_lab=intervals_lab,
        union_rest=_merge_intervals(intervals_rest),
        union_lab=_merge_intervals(intervals_lab),
        merged=merged,
        gamma=ctx.gamma,
        params=params,
    )


def _grade(value: float, params: WindowParams) -> str:
    if value >= params.pass_ratio:
        return "pass"
    if value >= params.warn_ratio:
        return "warn"
    return "fail"


def constraint_report(modes: RestModeSet, ctx: BoostContext, window: TimeWindow):
    """Grade the validity conditions of the window approximation.

    Four checks, each reported as a ConstraintCheck with the tested ratio:
    the window start must sit inside the closed form's domain (binary),
    the mass gap, the momentum and the phase accumulated at the window
    start must all be large (graded pass/warn/fail).
    """
    params = window.params
    if not window.admitted:
        detail = "no admitted modes"
        return tuple(
            ConstraintCheck(name=name, value=float("nan"), status="fail", detail=detail)
            for name in ("domain-at-start", "mass-gap", "momentum", "phase-at-start")
        )

    gamma = ctx.gamma
    gamma1 = float(modes.Gamma[0])
    gamma_fast = float(modes.Gamma[window.admitted[-1]])
    omega_max = float(modes.Omega.max())
    zmin = params.zeta_min

    checks = []

    # window start after 1/(10 Gamma_1): 2 zmin gamma / Gamma_fast > 1/(10 Gamma_1)
    v1 = 20.0 * zmin * gamma * gamma1 / gamma_fast
    checks.append(ConstraintCheck(
        name="domain-at-start",
        value=v1,
        status="pass" if v1 > 1.0 else "fail",
        detail="20 zeta_min gamma Gamma_1 / Gamma_fast must exceed 1",
    ))

    v2 = 2.0 * zmin * gamma * (modes.M - omega_max) / gamma_fast
    checks.append(ConstraintCheck(
        name="mass-gap",
        value=v2,
        status=_grade(v2, params),
        detail="(M - Omega_max) times the window start must be large",
    ))

    # p = M sqrt(gamma^2 - 1); both momentum-scale conditions reduce to
    # the phase p t at the window start, reported from each side
    v3 = 2.0 * zmin * gamma * math.sqrt((gamma - 1.0) * (gamma + 1.0)) * modes.M / gamma_fast
    checks.append(ConstraintCheck(
        name="momentum",
        value=v3,
        status=_grade(v3, params),
        detail="M sqrt(gamma^2-1) times the window start must be large",
    ))

    t_start = window.union_lab[0][0]
    v4 = ctx.p * t_start
    checks.append(ConstraintCheck(
        name="phase-at-start",
        value=v4,
        status=_grade(v4, params),
        detail="p t must be large at the window start",
    ))

    return tuple(checks)


def periods(modes: RestModeSet, ctx: BoostContext, window: TimeWindow = None, active_modes=None) -> PeriodReport:
    """Oscillation periods of the active modes in both frames.

    With one oscillating active mode the periods are T0 = 2 pi / Omega and
    Tp = gamma T0. Several oscillating modes share a period only when each
    frequency divides the largest one: Omega_j = omega_max / k_j with
    natural k_j (tolerance COMMENSURATE_REL_TOL on roundness); then
    T0 = 2 pi / omega_max and Tp = gamma T0. Otherwise the flag comes back
    false and the periods are None.
    """
    if active_modes is None:
        if window is None:
            raise WindowError("periods needs a window or an explicit active_modes set")
        active_modes = window.admitted
    active = sorted(set(int(i) for i in active_modes))
    if any(i < 0 or i >= modes.N for i in active):
        raise WindowError("active mode index out of range: %r" % (active,))

    osc = [j for j in active if float(modes.a[j]) > 0.0 and float(modes.Omega[j]) > 0.0]
    if not osc:
        raise WindowError("no oscillating active mode (need a_j > 0 and Omega_j > 0)")

    omega_max = max(float(modes.Omega[j]) for j in osc)
    k_values = []
    for j in osc:
        ratio = omega_max / float(modes.Omega[j])
        k = round(ratio)
        if k < 1 or abs(ratio - k) > COMMENSURATE_REL_TOL * k:
            return PeriodReport(
                T0=None, Tp=None, commensurate=False, omega_max=omega_max, k_values=None
            )
        k_values.append(int(k))

    T0 = 2.0 * math.pi / omega_max
    return PeriodReport(
        T0=T0,
        Tp=ctx.gamma * T0,
        commensurate=True,
        omega_max=omega_max,
        k_values=tuple(k_values),
    )
