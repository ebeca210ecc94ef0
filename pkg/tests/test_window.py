"""Window mechanics: gate parameter, intervals, merge flag, periods."""

import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

import oscdecay as od
from oscdecay.window import WindowError

from conftest import make_boosted, make_single_mode


def test_w_no_oscillation_is_one():
    assert od.w_fn(100.0, 0.0, 0.3) == 1.0


def test_w_frozen_spot(frozen_spots):
    got = od.w_fn(100.0, 10.0, 0.04)
    assert got == pytest.approx(frozen_spots["W_M100_Om10_a004"], rel=1e-14)
    assert got == pytest.approx(1.0012203, abs=1e-7)


def test_w_limit_endpoint():
    # a=1/2, Omega=M/2 is outside the model range but the formula's
    # endpoint value 29/18 bounds the sweep below
    assert od.w_fn(2.0, 1.0, 0.5) == pytest.approx(29.0 / 18.0, rel=1e-14)


def test_w_rejects_frequency_at_mass():
    with pytest.raises(WindowError):
        od.w_fn(100.0, 100.0, 0.04)


@settings(max_examples=500, deadline=None)
@given(
    st.floats(min_value=1.0, max_value=1e4),
    st.floats(min_value=1e-3, max_value=0.4999),
    st.floats(min_value=1e-3, max_value=0.4999),
)
def test_w_bounds_on_open_ranges(M, frac, a):
    # 1 < W < 29/18 for 0 < Omega < M/2, 0 < a < 1/2; the lower corners
    # are kept float-resolvable (W-1 ~ 3 a Omega^2/M^2 underflows to 0)
    val = od.w_fn(M, frac * M, a)
    assert 1.0 < val < 29.0 / 18.0


def test_xi_prime_frozen_spot(mode_p200_m80, frozen_spots):
    modes, ctx = mode_p200_m80
    got = od.xi_prime(modes, ctx, 0)
    assert got == pytest.approx(
        frozen_spots["xi_prime_M80_G1_Om10_a004_p200"], rel=1e-13
    )
    assert got <= 1e-3


def test_xi_prime_rejects_nonrelativistic_limit():
    modes = make_single_mode(100.0, 10.0, 0.04)
    ctx = od.shifted_kinematics(modes, 0.0)
    with pytest.raises(WindowError):
        od.xi_prime(modes, ctx, 0)


def test_xi_prime_monotone_in_weight():
    # two-mode set, growing w_0 at fixed everything else lowers xi'_0
    def xi0(w0):
        modes = od.validate_modes(
            {"M": 300.0, "w": [w0, 1.0 - w0], "Gamma": [1.0, 2.0],
             "Omega": [10.0, 0.0], "a": [0.04, 0.0]}
        )
        ctx = od.shifted_kinematics(modes, 600.0)
        return od.xi_prime(modes, ctx, 0)

    vals = [xi0(w) for w in (0.2, 0.4, 0.6, 0.8)]
    assert np.all(np.diff(vals) < 0)


def test_xi_prime_monotone_in_amplitude():
    # Omega kept small so rate positivity holds up to a = 0.45
    def xi(a):
        modes = make_single_mode(300.0, 0.3, a)
        ctx = od.shifted_kinematics(modes, 600.0)
        return od.xi_prime(modes, ctx, 0)

    vals = [xi(a) for a in (0.0, 0.15, 0.3, 0.45)]
    assert np.all(np.diff(vals) > 0)


def test_single_mode_window_bounds(mode_p200_m80):
    modes, ctx = mode_p200_m80
    win = od.exponential_windows(modes, ctx)
    assert win.admitted == (0,)
    (lo, hi), = win.intervals_lab
    assert lo == 2 * win.params.zeta_min * ctx.gamma / 1.0
    assert hi == 2 * win.params.zeta_max * ctx.gamma / 1.0
    assert win.merged


def test_window_covariance_exact(mode_p200_m80):
    modes, ctx = mode_p200_m80
    win = od.exponential_windows(modes, ctx)
    for (rlo, rhi), (llo, lhi) in zip(win.intervals_rest, win.intervals_lab):
        assert llo == ctx.gamma * rlo
        assert lhi == ctx.gamma * rhi
    for (rlo, rhi), (llo, lhi) in zip(win.union_rest, win.union_lab):
        assert llo == ctx.gamma * rlo
        assert lhi == ctx.gamma * rhi


def test_two_mode_merged_union():
    # width ratio far above zeta_min/zeta_max: one merged interval from
    # the fast mode's start to the slow mode's end
    modes = od.validate_modes(
        {"M": 300.0, "w": [0.5, 0.5], "Gamma": [1.0, 4.0],
         "Omega": [10.0, 0.0], "a": [0.04, 0.0]}
    )
    ctx = od.shifted_kinematics(modes, 600.0)
    win = od.exponential_windows(modes, ctx)
    assert win.admitted == (0, 1)
    assert win.merged
    assert len(win.union_lab) == 1
    lo, hi = win.union_lab[0]
    assert lo == 2 * win.params.zeta_min * ctx.gamma / 4.0
    assert hi == 2 * win.params.zeta_max * ctx.gamma / 1.0


def test_merged_flag_flips_at_exact_ratio():
    params = od.WindowParams()
    ratio = params.zeta_min / params.zeta_max

    def build(eps):
        G2 = (1.0 + eps) / ratio
        modes = od.validate_modes(
            {"M": 4e6, "w": [0.5, 0.5], "Gamma": [1.0, G2],
             "Omega": [0.0, 0.0], "a": [0.0, 0.0]}
        )
        ctx = od.shifted_kinematics(modes, 4e6)
        return od.exponential_windows(modes, ctx, params)

    below = build(-1e-12)   # Gamma1/Gamma2 just above the ratio
    above = build(+1e-12)   # just below
    assert below.admitted == above.admitted == (0, 1)
    assert below.merged and len(below.union_lab) == 1
    assert not above.merged and len(above.union_lab) == 2


def test_gate_excludes_large_amplitude_mode():
    # a=0.49 drives xi' through the 1/(1-2a) factor far past the gate
    modes = od.validate_modes(
        {"M": 100.0, "w": [0.5, 0.5], "Gamma": [1.0, 70.0],
         "Omega": [10.0, 10.0], "a": [0.04, 0.49]},
        narrow_width_threshold=1.0,
    )
    ctx = od.shifted_kinematics(modes, 210.0)
    win = od.exponential_windows(modes, ctx)
    assert 1 not in win.admitted
    excluded = dict(win.excluded)
    assert 1 in excluded and excluded[1] > win.params.xi_gate


def test_empty_window_diagnostics():
    # wide single mode: xi' = 2.9e-3 over the gate, nothing admitted
    modes = make_single_mode(21.0, 0.0, 0.0)
    ctx = od.shifted_kinematics(modes, 105.0)
    win = od.exponential_windows(modes, ctx)
    assert win.admitted == ()
    assert win.union_lab == ()
    assert not win.merged
    assert dict(win.excluded)[0] > win.params.xi_gate


def test_window_params_validation():
    with pytest.raises(WindowError):
        od.WindowParams(zeta_min=2.0, zeta_max=1.0)
    with pytest.raises(WindowError):
        od.WindowParams(zeta_min=-1.0)


def test_constraint_report_default_zeta(mode_p200_m80):
    # the published ratio forces zeta_min=1e-4, putting the window start
    # below every validity scale: all four checks fail honestly
    modes, ctx = mode_p200_m80
    win = od.exponential_windows(modes, ctx)
    checks = od.constraint_report(modes, ctx, win)
    assert [c.name for c in checks] == [
        "domain-at-start", "mass-gap", "momentum", "phase-at-start",
    ]
    assert all(c.status == "fail" for c in checks)


def test_constraint_report_passes_with_raised_floor(mode_p200_m80):
    modes, ctx = mode_p200_m80
    params = od.WindowParams(zeta_min=0.05)
    win = od.exponential_windows(modes, ctx, params)
    checks = od.constraint_report(modes, ctx, win)
    assert all(c.status == "pass" for c in checks)


def test_constraint_report_momentum_fails_near_rest(mode_p200_m80):
    modes, _ = mode_p200_m80
    ctx = od.shifted_kinematics(modes, 0.8)  # p = M/100
    params = od.WindowParams(zeta_min=0.05)
    win = od.exponential_windows(modes, ctx, params)
    checks = {c.name: c for c in od.constraint_report(modes, ctx, win)}
    assert checks["momentum"].status == "fail"


def test_constraint_report_empty_window():
    modes = make_single_mode(21.0, 0.0, 0.0)
    ctx = od.shifted_kinematics(modes, 105.0)
    win = od.exponential_windows(modes, ctx)
    checks = od.constraint_report(modes, ctx, win)
    assert all(c.status == "fail" for c in checks)
    assert all(math.isnan(c.value) for c in checks)


def test_periods_single_mode(mode_p200_m80):
    modes, ctx = mode_p200_m80
    report = od.periods(modes, ctx, active_modes=[0])
    assert report.commensurate
    assert report.T0 == pytest.approx(2 * math.pi / 10.0, rel=1e-15)
    assert report.Tp == ctx.gamma * report.T0
    assert report.T0 == pytest.approx(0.6283, abs=1e-4)
    assert report.Tp == pytest.approx(1.6918, abs=2e-4)


def test_periods_commensurate_three_modes():
    modes = od.validate_modes(
        {"M": 200.0, "w": [0.4, 0.3, 0.3], "Gamma": [1.0, 2.0, 3.5],
         "Omega": [10.0, 20.0, 40.0], "a": [0.04, 0.04, 0.04]}
    )
    ctx = od.shifted_kinematics(modes, 400.0)
    report = od.periods(modes, ctx, active_modes=[0, 1, 2])
    assert report.commensurate
    assert report.omega_max == 40.0
    assert tuple(report.k_values) == (4, 2, 1)
    assert report.T0 == pytest.approx(2 * math.pi / 40.0, rel=1e-15)
    assert report.Tp == ctx.gamma * report.T0


def test_periods_non_commensurate():
    modes = od.validate_modes(
        {"M": 200.0, "w": [0.5, 0.5], "Gamma": [2.2, 3.5],
         "Omega": [25.0, 40.0], "a": [0.04, 0.04]}
    )
    ctx = od.shifted_kinematics(modes, 400.0)
    report = od.periods(modes, ctx, active_modes=[0, 1])
    assert not report.commensurate
    assert report.T0 is None and report.Tp is None
    assert report.omega_max == 40.0


def test_periods_require_oscillating_mode():
    modes = make_single_mode(100.0, 0.0, 0.0)
    ctx = od.shifted_kinematics(modes, 210.0)
    with pytest.raises(WindowError):
        od.periods(modes, ctx, active_modes=[0])


def test_periods_default_to_window_admitted(mode_p200_m80):
    modes, ctx = mode_p200_m80
    win = od.exponential_windows(modes, ctx)
    report = od.periods(modes, ctx, window=win)
    assert report.commensurate
    assert report.Tp == ctx.gamma * report.T0
