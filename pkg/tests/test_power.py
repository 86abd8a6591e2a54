"""Closed-form powers, the sup/WAP process simulators, and the finite-sample
Monte Carlo machinery."""
import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from scipy.stats import norm

from spikelr.errors import DomainError
from spikelr.power import (McExactCritical, PowerCurve, SupDistribution,
                           _upper_quantile, capped_theta_grid, classical_power,
                           empirical_power, envelope, lr_power_curve,
                           mc_exact_critical, simulate_sup, wap_power_curve)


# ---------------------------------------------------------------------------
# closed forms

def test_envelope_hand_values_and_zero():
    assert envelope(0.0, 0.05, "lambda") == 0.05
    assert envelope(0.0, 0.05, "mu") == 0.05
    assert envelope(2.0, 0.05, "lambda") == pytest.approx(0.409, abs=5e-4)
    assert envelope(2.0, 0.05, "mu") == pytest.approx(0.339, abs=5e-4)


def test_envelope_dominance_chain():
    # best lambda >= best mu >= john >= alpha, pointwise
    alpha = 0.05
    for theta in np.linspace(0.0, 6.0, 100):
        lam = envelope(theta, alpha, "lambda")
        mu = envelope(theta, alpha, "mu")
        john = classical_power(theta, alpha, "john")
        assert lam >= mu - 1e-12
        assert mu >= john - 1e-9
        assert john >= alpha - 1e-12


@given(theta=st.floats(0.0, 8.0), alpha=st.floats(0.01, 0.5))
@settings(max_examples=200, deadline=None)
def test_envelope_dominance_property(theta, alpha):
    lam = envelope(theta, alpha, "lambda")
    mu = envelope(theta, alpha, "mu")
    john = classical_power(theta, alpha, "john")
    assert alpha - 1e-12 <= john <= mu + 1e-9
    assert mu <= lam + 1e-12 and lam <= 1.0 + 1e-12


@given(st.lists(st.floats(-50.0, 50.0), min_size=1, max_size=400),
       st.floats(0.01, 0.999))
@settings(max_examples=200, deadline=None)
def test_upper_quantile_property(values, level):
    samples = np.sort(np.asarray(values))
    q = _upper_quantile(samples, level)
    # the reported quantile is an observed value covering >= level of the mass
    assert q in samples
    assert (samples <= q).mean() >= level - 1e-12


def test_envelopes_reach_one():
    assert envelope(8.0, 0.05, "lambda") > 0.999
    assert envelope(8.0, 0.05, "mu") > 0.999


def test_envelope_monotone_in_theta():
    for kind in ("lambda", "mu"):
        vals = [envelope(t, 0.05, kind) for t in np.linspace(0, 6, 200)]
        assert np.all(np.diff(vals) >= 0.0)


def test_envelope_guards():
    with pytest.raises(DomainError):
        envelope(-0.5, 0.05, "lambda")
    with pytest.raises(DomainError):
        envelope(1.0, 0.0, "lambda")
    with pytest.raises(DomainError):
        envelope(1.0, 0.05, "spherical")


def test_classical_power_values():
    alpha = 0.05
    for test in ("john", "lw", "clr", "tw"):
        c = 0.5 if test == "clr" else None
        assert classical_power(0.0, alpha, test, c) == alpha
    # largest-eigenvalue test is power-blind inside the transition
    assert classical_power(3.0, alpha, "tracy_widom_mu") == alpha
    # psi saturates: the john curve tops out at a strictly interior value
    top = 1.0 - norm.cdf(norm.ppf(0.95) - 0.5)
    assert classical_power(50.0, alpha, "john") == pytest.approx(top, rel=1e-12)
    assert top == pytest.approx(0.126, abs=5e-4)
    # ledoit-wolf shares the john curve
    for theta in (0.5, 1.5, 3.0):
        assert classical_power(theta, alpha, "lw") == classical_power(
            theta, alpha, "john")


def test_clr_power_limits_and_ordering():
    alpha, theta = 0.05, 1.5
    john = classical_power(theta, alpha, "john")
    assert abs(classical_power(theta, alpha, "clr", 1e-4) - john) < 1e-3
    assert abs(classical_power(theta, alpha, "clr", 0.999) - alpha) < 1e-2
    # between triviality and the john curve at moderate c
    for t in np.linspace(0.0, 6.0, 50):
        v = classical_power(t, alpha, "clr", 0.5)
        assert alpha - 1e-12 <= v <= classical_power(t, alpha, "john") + 1e-12


def test_classical_power_guards():
    with pytest.raises(DomainError):
        classical_power(1.0, 0.05, "clr")
    with pytest.raises(DomainError):
        classical_power(1.0, 0.05, "clr", 1.0)
    with pytest.raises(DomainError):
        classical_power(1.0, 0.05, "clr", -0.2)
    with pytest.raises(DomainError):
        classical_power(1.0, 0.05, "hotelling")


# ---------------------------------------------------------------------------
# container validation

def test_power_curve_validation():
    with pytest.raises(DomainError):
        PowerCurve(np.array([0.0, 0.0, 1.0]), np.array([0.05, 0.1, 0.2]),
                   "x", 0.05)
    with pytest.raises(DomainError):
        PowerCurve(np.array([0.0, 1.0]), np.array([0.05, 1.4]), "x", 0.05)
    with pytest.raises(DomainError):
        PowerCurve(np.array([0.0, 1.0]), np.array([0.05, 0.5]), "x", 1.5)


def test_sup_distribution_validation_and_quantile_convention():
    with pytest.raises(DomainError):
        SupDistribution(np.array([2.0, 1.0]), (6.0, 2), 2, "lambda", 0)
    with pytest.raises(DomainError):
        SupDistribution(np.array([1.0, 2.0]), (6.0, 2), 5, "lambda", 0)
    # upper-type empirical quantile: order statistic at ceil(level * N)
    d = SupDistribution(np.arange(1.0, 21.0), (6.0, 2), 20, "lambda", 0)
    assert d.quantile(0.95) == 19.0
    assert d.quantile(0.5) == 10.0
    d = SupDistribution(np.arange(1.0, 11.0), (6.0, 2), 10, "lambda", 0)
    assert d.quantile(0.95) == 10.0


# ---------------------------------------------------------------------------
# process simulation

def test_simulate_sup_degenerate_grid_is_exactly_zero():
    d = simulate_sup("lambda", (0.0, 1), 10_000, seed=3)
    assert np.all(d.samples == 0.0)
    shifted = simulate_sup("lambda", (0.0, 1), 10_000, seed=3, shift_theta1=2.0)
    assert np.all(shifted.samples == 0.0)


def test_simulate_sup_zero_shift_matches_null_bitwise():
    null = simulate_sup("mu", (6.0, 50), 10_000, seed=11)
    shifted = simulate_sup("mu", (6.0, 50), 10_000, seed=11, shift_theta1=0.0)
    np.testing.assert_array_equal(null.samples, shifted.samples)


def test_simulate_sup_basic_shape_and_shift_moves_mass_up():
    null = simulate_sup("lambda", (6.0, 80), 20_000, seed=7)
    assert len(null.samples) == null.draws == 20_000
    assert np.all(np.diff(null.samples) >= 0.0)
    shifted = simulate_sup("lambda", (6.0, 80), 20_000, seed=7,
                           shift_theta1=2.0)
    assert shifted.quantile(0.5) > null.quantile(0.5)


def test_simulate_sup_jitter_sweep_quantile_stable():
    base = simulate_sup("lambda", (6.0, 120), 20_000, seed=19)
    forced = simulate_sup("lambda", (6.0, 120), 20_000, seed=19, jitter=1e-6)
    assert abs(base.quantile(0.95) - forced.quantile(0.95)) < 0.06


def test_simulate_sup_draws_doubled_quantile_stable():
    a = simulate_sup("lambda", (6.0, 100), 20_000, seed=23)
    b = simulate_sup("lambda", (6.0, 100), 40_000, seed=23)
    qa, qb = a.quantile(0.95), b.quantile(0.95)
    # combined bootstrap SE of the two empirical quantiles
    ses = []
    rng = np.random.default_rng(0)
    for s in (a.samples, b.samples):
        qs = [np.quantile(rng.choice(s, size=len(s)), 0.95) for _ in range(200)]
        ses.append(np.std(qs))
    assert abs(qa - qb) < 2.0 * math.hypot(*ses)


def test_simulate_sup_guards():
    with pytest.raises(DomainError):
        simulate_sup("lambda", (6.0, 100), 5000, seed=0)
    with pytest.raises(DomainError):
        simulate_sup("lambda", (25.0, 100), 10_000, seed=0)
    with pytest.raises(DomainError):
        simulate_sup("lambda", (6.0, 1), 10_000, seed=0)
    with pytest.raises(DomainError):
        simulate_sup("lambda", (6.0, 100), 10_000, seed=0, shift_theta1=-1.0)


# ---------------------------------------------------------------------------
# power curves

@pytest.fixture(scope="module")
def lr_curve():
    return lr_power_curve("lambda", np.array([0.0, 1.0, 2.0, 3.0, 4.0]),
                          0.05, (6.0, 100), 20_000, seed=5)


def test_lr_power_curve_size_and_shape(lr_curve):
    assert lr_curve.label == "lr_sup_lambda"
    assert lr_curve.c is None
    # exceedance of the null's own quantile: alpha up to the ceil rounding
    assert lr_curve.values[0] == pytest.approx(0.05, abs=2 * 0.0016)
    assert np.all(np.diff(lr_curve.values) > -0.02)


def test_lr_power_curve_below_envelope(lr_curve):
    for theta, value in zip(lr_curve.theta_grid, lr_curve.values):
        assert value <= envelope(float(theta), 0.05, "lambda") + 0.02


def test_wap_close_to_lr(lr_curve):
    wap = wap_power_curve("lambda", lr_curve.theta_grid, 0.05, (6.0, 100),
                          20_000, seed=5)
    assert wap.label == "wap_lambda"
    assert wap.values[0] == pytest.approx(0.05, abs=2 * 0.0016)
    np.testing.assert_allclose(wap.values, lr_curve.values, atol=0.03)
    # the averaged statistic gives up nothing at small and middling theta1
    for theta, w, l in zip(wap.theta_grid, wap.values, lr_curve.values):
        if theta <= 3.0:
            assert w >= l - 0.02


def test_wap_weight_guard():
    with pytest.raises(DomainError):
        wap_power_curve("lambda", np.array([0.0, 1.0]), 0.05, (6.0, 50),
                        10_000, seed=1, weight="beta")


def test_power_curve_grid_guards():
    with pytest.raises(DomainError):
        lr_power_curve("lambda", np.array([1.0, 0.5]), 0.05, (6.0, 50),
                       10_000, seed=1)
    with pytest.raises(DomainError):
        lr_power_curve("lambda", np.array([]), 0.05, (6.0, 50), 10_000, seed=1)


# ---------------------------------------------------------------------------
# finite-sample Monte Carlo critical values

@pytest.fixture(scope="module")
def mc_base():
    return mc_exact_critical("mu", p=50, n=100, theta_grid_M=6.0, reps=200,
                             alpha=0.05, seed=9, points=31)


def test_capped_theta_grid_respects_guard():
    grid = capped_theta_grid(6.0, 61, c_p=1.0)
    assert grid[0] == 0.0
    assert grid.max() < 1.526
    with pytest.raises(DomainError):
        capped_theta_grid(6.0, 3, c_p=0.5)  # only theta = 0 survives


def test_mc_exact_critical_basic(mc_base):
    assert mc_base.failures == 0
    assert mc_base.value > 0.0
    assert mc_base.theta_grid.max() < 1.526
    assert len(mc_base.samples) == mc_base.reps
    assert float(mc_base) == mc_base.value


def test_mc_exact_critical_scale_free_for_mu(mc_base):
    scaled = mc_exact_critical("mu", p=50, n=100, theta_grid_M=6.0, reps=200,
                               alpha=0.05, seed=9, points=31, sigma2=5.0)
    assert scaled.value == mc_base.value
    np.testing.assert_array_equal(scaled.samples, mc_base.samples)


def test_mc_exact_critical_seed_stability(mc_base):
    other = mc_exact_critical("mu", p=50, n=100, theta_grid_M=6.0, reps=200,
                              alpha=0.05, seed=1009, points=31)
    rng = np.random.default_rng(1)
    boot = [np.quantile(rng.choice(mc_base.samples, size=len(mc_base.samples)),
                        0.95) for _ in range(300)]
    se = float(np.std(boot))
    assert abs(other.value - mc_base.value) < 2.0 * math.hypot(se, se)


def test_mc_exact_critical_guards():
    with pytest.raises(DomainError):
        mc_exact_critical("nu", 50, 100, 6.0, 200, 0.05, 0)
    with pytest.raises(DomainError):
        mc_exact_critical("mu", 50, 100, 6.0, 50, 0.05, 0)


# ---------------------------------------------------------------------------
# finite-sample empirical power

def test_empirical_power_null_size():
    rate = empirical_power("john", 0.0, p=100, n=200, reps=400, alpha=0.05,
                           seed=17)
    assert rate == pytest.approx(0.05, abs=0.025)


def test_empirical_power_guards():
    with pytest.raises(DomainError):
        empirical_power("bartlett", 1.0, 50, 100, 10, 0.05, 0)
    with pytest.raises(DomainError):
        empirical_power("john", 1.0, 50, 100, 0, 0.05, 0)
    with pytest.raises(DomainError):
        empirical_power("john", -1.0, 50, 100, 10, 0.05, 0)
