"""Laboratory-frame survival probability of a moving oscillating decay.

The closed form combines, per mode, a pole part K (three damped complex
exponentials built from the square-root frequencies Upsilon) and a
branch-cut part Phi (Bessel/Struve combinations), weighted as
K + i (p Gamma / (pi M^2)) Phi. The squared modulus of the weighted sum
over modes is the survival probability at momentum p.
"""

import cmath
import math
from dataclasses import dataclass

import numpy as np

from .kinematics import BoostContext, RestModeSet
from .restframe import amplitude_rest, survival_rest, survival_rest_split
from .specfun import upsilon, xi_fn

__all__ = [
    "BoostDomainError",
    "BoostedEvaluation",
    "P_ZERO_REL",
    "UNITY_EXCESS_TOL",
    "VALIDITY_THRESHOLD",
    "boosted_split",
    "k_fn",
    "phi_fn",
    "survival_boosted",
    "survival_boosted_window_approx",
]

# momenta below P_ZERO_REL * M take the exact rest-frame branch
P_ZERO_REL = 1e-12
# tolerated approximation overshoot of the probability above 1 in-domain
UNITY_EXCESS_TOL = 1e-6
# quantitative stand-in for "much larger than one" in the domain test
VALIDITY_THRESHOLD = 10.0


class BoostDomainError(ValueError):
    """A boosted evaluation was requested outside its domain."""


@dataclass(frozen=True)
class BoostedEvaluation:
    """One evaluation of the boosted survival probability at lab time t.

    K_sum = sum_j w_j K_j, Phi_term = i sum_j w_j (p Gamma_j/(pi M^2)) Phi_j
    and P_p = |K_sum + Phi_term|^2. in_validity_domain records whether
    every mode satisfies t > 1/(10 Gamma_j) or (M - Omega_max) t >= 10;
    exceeds_unity flags a tolerated overshoot of 1 (at most 1e-6 in-domain).
    """

    t: float
    K_sum: complex
    Phi_term: complex
    P_p: float
    in_validity_domain: bool
    exceeds_unity: bool


def k_fn(M: float, Gamma: float, p: float, Omega: float, a: float, t: float) -> complex:
    """Pole part of one boosted mode.

    (1-a) e^{-Y(M) t/2} + (a/2)[e^{-Y(M-Omega) t/2} + e^{-Y(M+Omega) t/2}]
    where Y(m) = upsilon(m, Gamma, p). At p = 0 this reduces to the
    rest-frame phase e^{-i M t} times the damped cosine factor.
    """
    t = float(t)
    if t < 0.0:
        raise BoostDomainError("k_fn requires t >= 0, got %r" % t)
    out = (1.0 - a) * cmath.exp(-0.5 * t * upsilon(M, Gamma, p))
    if a > 0.0:
        out += 0.5 * a * (
            cmath.exp(-0.5 * t * upsilon(M - Omega, Gamma, p))
            + cmath.exp(-0.5 * t * upsilon(M + Omega, Gamma, p))
        )
    return out


def phi_fn(M: float, p: float, Omega: float, a: float, t: float) -> complex:
    """Branch-cut part of one boosted mode.

    (1-a) Xi(M) + (a/2)[Xi(M-Omega)/(1-Omega/M)^2 + Xi(M+Omega)/(1+Omega/M)^2]
    with Xi = xi_fn(., p, t). The p = 0 limit is handled by the rest
    branch of survival_boosted, not here.
    """
    if p <= 0.0:
        raise BoostDomainError("phi_fn requires p > 0; the p = 0 limit has no branch-cut term")
    if t <= 0.0:
        raise BoostDomainError("phi_fn requires t > 0, got %r" % t)
    out = (1.0 - a) * xi_fn(M, p, t)
    if a > 0.0:
        rm = 1.0 - Omega / M
        rp = 1.0 + Omega / M
        out += 0.5 * a * (
            xi_fn(M - Omega, p, t) / (rm * rm) + xi_fn(M + Omega, p, t) / (rp * rp)
        )
    return out


def _in_validity_domain(modes: RestModeSet, t: float) -> bool:
    # per-mode condition (t > 1/(10 Gamma_j)) or ((M - Omega_max) t >= 10);
    # the second clause is mode independent and the first is weakest at the
    # smallest width, so the conjunction over modes collapses to two tests.
    if (modes.M - float(modes.Omega.max())) * t >= VALIDITY_THRESHOLD:
        return True
    return t > 0.1 / float(modes.Gamma[0])


def survival_boosted(modes: RestModeSet, ctx: BoostContext, t) -> BoostedEvaluation:
    """Boosted survival probability at a single lab time.

    Momenta below P_ZERO_REL * M route to the exact rest-frame branch
    (the closed form's p -> 0 limit). Otherwise the full pole plus
    branch-cut combination is evaluated; a probability above 1 + 1e-6
    inside the validity domain raises, smaller overshoot is flagged.
    """
    t = float(t)
    if not math.isfinite(t) or t < 0.0:
        raise BoostDomainError("time must be finite and >= 0, got %r" % t)
    M = modes.M
    p = ctx.p

    if p < P_ZERO_REL * M:
        amp = float(amplitude_rest(modes, t))
        return BoostedEvaluation(
            t=t,
            K_sum=cmath.exp(-1j * M * t) * amp,
            Phi_term=0j,
            P_p=amp * amp,
            in_validity_domain=True,
            exceeds_unity=amp * amp > 1.0,
        )

    if t == 0.0:
        raise BoostDomainError("t = 0 is outside the moving-frame closed form (p > 0)")

    pref = p / (math.pi * M * M)
    K_sum = 0j
    Phi_sum = 0j
    for j in range(modes.N):
        wj = float(modes.w[j])
        Gj = float(modes.Gamma[j])
        Oj = float(modes.Omega[j])
        aj = float(modes.a[j])
        K_sum += wj * k_fn(M, Gj, p, Oj, aj, t)
        Phi_sum += wj * Gj * phi_fn(M, p, Oj, aj, t)
    Phi_term = 1j * pref * Phi_sum

    amp = K_sum + Phi_term
    P_p = amp.real * amp.real + amp.imag * amp.imag
    valid = _in_validity_domain(modes, t)
    if valid and P_p > 1.0 + UNITY_EXCESS_TOL:
        raise BoostDomainError(
            "in-domain probability %r exceeds 1 beyond the %g tolerance"
            % (P_p, UNITY_EXCESS_TOL)
        )
    return BoostedEvaluation(
        t=t,
        K_sum=K_sum,
        Phi_term=Phi_term,
        P_p=P_p,
        in_validity_domain=valid,
        exceeds_unity=P_p > 1.0,
    )


def _mask_modes(modes: RestModeSet, active_modes) -> RestModeSet:
    idx = sorted(set(int(i) for i in active_modes))
    if not idx:
        raise BoostDomainError("outside exponential window: no active modes")
    if idx[0] < 0 or idx[-1] >= modes.N:
        raise BoostDomainError("active mode index out of range 0..%d: %r" % (modes.N - 1, idx))
    sel = np.asarray(idx, dtype=int)
    return RestModeSet(
        M=modes.M,
        w=modes.w[sel],
        Gamma=modes.Gamma[sel],
        Omega=modes.Omega[sel],
        a=modes.a[sel],
    )


def survival_boosted_window_approx(modes: RestModeSet, ctx: BoostContext, t, active_modes):
    """Window form of the boosted survival: active rest modes at t/gamma.

    |sum_l w_l e^{-Gamma_l t/(2 gamma)} (1 - a_l + a_l cos(Omega_l t/gamma))|^2
    over the active index set; with every mode active this is exactly
    survival_rest(modes, t/gamma).
    """
    sub = _mask_modes(modes, active_modes)
    return survival_rest(sub, np.asarray(t, dtype=float) / ctx.gamma)


def boosted_split(modes: RestModeSet, ctx: BoostContext, t, active_modes):
    """Window form split into (exponential, oscillating) parts.

    Both parts scale like their rest-frame counterparts evaluated at
    t/gamma; their sum reproduces survival_boosted_window_approx.
    """
    sub = _mask_modes(modes, active_modes)
    return survival_rest_split(sub, np.asarray(t, dtype=float) / ctx.gamma)
