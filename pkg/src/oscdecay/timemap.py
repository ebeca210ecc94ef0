"""Inversion of the rest-frame decay law and the frame-to-frame time map.

The rest-frame survival probability of a valid mode set decreases
strictly, so it has an inverse. Composing that inverse with the boosted
survival probability gives the time map phi_p; over the exponential
window the map is close to the line t / gamma, and linearity_fit
quantifies how close.
"""

import math
from dataclasses import dataclass

import numpy as np
from scipy.optimize import brentq

from .boost import survival_boosted
from .kinematics import BoostContext, RestModeSet
from .restframe import CurveSeries, amplitude_rest, survival_rest
from .window import TimeWindow

__all__ = [
    "INVERT_REL_TOL",
    "LinearityFit",
    "TAIL_CAP_OVER_GAMMA1",
    "TimeMapError",
    "invert_survival_rest",
    "linearity_fit",
    "phi_p",
]

INVERT_REL_TOL = 1e-12
# targets needing times beyond this multiple of 1/Gamma_1 are rejected
TAIL_CAP_OVER_GAMMA1 = 1e4
# below this target the inversion works on log P0 to keep conditioning
_LOG_SWITCH = 1e-2


class TimeMapError(ValueError):
    """The time map was requested outside its domain."""


@dataclass(frozen=True)
class LinearityFit:
    """Least-squares line through phi_p samples inside the window."""

    slope: float
    intercept: float
    max_residual: float
    interval: tuple
    expected_slope: float
    rel_slope_error: float
    n_points: int


def invert_survival_rest(modes: RestModeSet, r: float) -> float:
    """The time at which the rest-frame survival equals r.

    Brackets the root by doubling from 1/Gamma_1, then refines with a
    safeguarded bracketing solver; for r < 1e-2 the solve runs on
    2 log(amplitude) instead of the probability itself, which keeps the
    deep tail conditioned and immune to squaring underflow. The result
    satisfies |P0(t) - r| <= 1e-12 r.
    """
    r = float(r)
    if not 0.0 < r <= 1.0:
        raise TimeMapError("target probability must lie in (0, 1], got %r" % r)
    if r == 1.0:
        return 0.0

    gamma1 = float(modes.Gamma[0])
    cap = TAIL_CAP_OVER_GAMMA1 / gamma1
    log_r = math.log(r)

    def log_gap(t):
        # 2 log amplitude - log r; amplitude is a positive sum, so the log
        # exists wherever exp(-Gamma t / 2) has not underflowed
        return 2.0 * math.log(float(amplitude_rest(modes, t))) - log_r

    lo = 0.0
    hi = 1.0 / gamma1
    while log_gap(hi) > 0.0:
        lo = hi
        hi *= 2.0
        if hi > cap:
            raise TimeMapError(
                "target %r lies below the representable tail (t beyond %r)" % (r, cap)
            )

    if r < _LOG_SWITCH:
        root = brentq(log_gap, lo, hi, xtol=1e-300, rtol=4.0 * np.finfo(float).eps)
        resid = abs(log_gap(root))
        if resid > INVERT_REL_TOL:
            raise TimeMapError(
                "inversion residual %r exceeds %r in log space at r=%r"
                % (resid, INVERT_REL_TOL, r)
            )
    else:
        def gap(t):
            return float(survival_rest(modes, t)) - r

        root = brentq(gap, lo, hi, xtol=1e-300, rtol=4.0 * np.finfo(float).eps)
        resid = abs(gap(root))
        if resid > INVERT_REL_TOL * r:
            raise TimeMapError(
                "inversion residual %r exceeds %r at r=%r" % (resid, INVERT_REL_TOL * r, r)
            )
    return float(root)


def phi_p(modes: RestModeSet, ctx: BoostContext, t) -> float:
    """Rest-frame time whose survival matches the boosted one at lab time t.

    phi_p(t) = P0^{-1}(P_p(t)). The boosted probability must fall in
    (0, 1]; rounding-level overshoot above 1 (at most 1e-12) is clamped,
    anything larger is reported with the offending value.
    """
    ev = survival_boosted(modes, ctx, float(t))
    r = ev.P_p
    if r > 1.0:
        if r <= 1.0 + 1e-12:
            r = 1.0
        else:
            raise TimeMapError(
                "boosted survival %r exceeds 1 at t=%r; the time map is undefined there"
                % (r, ev.t)
            )
    if r <= 0.0:
        raise TimeMapError("boosted survival %r underflowed at t=%r" % (r, ev.t))
    return invert_survival_rest(modes, r)


def linearity_fit(series: CurveSeries, window: TimeWindow, ctx: BoostContext) -> LinearityFit:
    """Fit a line to time-map samples inside the window; compare to 1/gamma.

    series holds phi_p values on a lab-frame time grid. Points inside the
    lab window union are fitted by least squares; at least 20 are
    required. The report carries the worst residual from the fitted line
    and the relative slope error against the expected 1/gamma.
    """
    t = series.t
    mask = np.zeros(t.shape, dtype=bool)
    for lo, hi in window.union_lab:
        mask |= (t >= lo) & (t <= hi)
    n = int(mask.sum())
    if n < 20:
        raise TimeMapError(
            "insufficient coverage: %d grid points inside the window (need >= 20)" % n
        )

    tw = t[mask]
    vw = series.values[mask]
    slope, intercept = np.polyfit(tw, vw, 1)
    residuals = vw - (slope * tw + intercept)
    expected = 1.0 / ctx.gamma
    return LinearityFit(
        slope=float(slope),
        intercept=float(intercept),
        max_residual=float(np.abs(residuals).max()),
        interval=(float(tw[0]), float(tw[-1])),
        expected_slope=expected,
        rel_slope_error=abs(float(slope) - expected) / expected,
        n_points=n,
    )
