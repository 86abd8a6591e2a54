"""Classical sphericity tests: algebraic identities on hand-built spectra,
null calibration and contiguous power from the shared batches."""
import math

import numpy as np
import pytest
from scipy.stats import norm

from spikelr.classical import (clr_statistic, clr_test, john_test, john_u,
                               ledoit_wolf_test, ledoit_wolf_w,
                               tracy_widom_test, tw_statistic)
from spikelr.errors import DomainError, InapplicableTestError
from spikelr.sampler import SpikedModel, eigen_sample_from_values, sample_eigs
from spikelr.tw1 import tw1_quantile


# ---------------------------------------------------------------------------
# exact values on hand-built spectra

def test_flat_spectrum_gives_degenerate_statistics():
    eigs = eigen_sample_from_values(np.ones(6), n=12)
    assert john_u(eigs) == 0.0
    assert ledoit_wolf_w(eigs) == pytest.approx(0.0, abs=1e-15)
    rep = john_test(eigs)
    assert rep.statistic == pytest.approx(-3.5)
    assert not rep.reject


def test_clr_statistic_recomputed_directly():
    lam = np.array([1.7, 1.2, 0.9, 0.6, 0.35])
    eigs = eigen_sample_from_values(lam, n=20)
    p, n = 5, 20
    correction = p * (1.0 - (1.0 - n / p) * math.log1p(-p / n))
    expect = lam.sum() - np.log(lam).sum() - p - correction
    assert clr_statistic(eigs) == pytest.approx(expect, rel=1e-14)
    rep = clr_test(eigs, alpha=0.10)
    sd = math.sqrt(-2.0 * math.log1p(-0.25) - 0.5)
    assert rep.statistic == pytest.approx(
        (expect + 0.5 * math.log1p(-0.25)) / sd, rel=1e-12)
    assert rep.critical_value == pytest.approx(norm.ppf(0.90), rel=1e-12)


def test_john_scale_invariant_ledoit_wolf_not():
    base = sample_eigs(SpikedModel(p=30, n=90, seed=3))
    scaled = eigen_sample_from_values(3.0 * np.concatenate(
        [base.lam]), n=90)
    assert john_test(scaled).statistic == pytest.approx(
        john_test(base).statistic, abs=1e-10)
    assert abs(ledoit_wolf_test(scaled).statistic
               - ledoit_wolf_test(base).statistic) > 1.0


def test_tw_statistic_formula_and_kinds():
    eigs = sample_eigs(SpikedModel(p=50, n=100, seed=9))
    c_p, n = 0.5, 100
    edge = (1.0 + math.sqrt(c_p)) ** 2
    scale = n ** (2 / 3) * c_p ** (1 / 6) * (1 + math.sqrt(c_p)) ** (-4 / 3)
    assert tw_statistic(eigs, "lambda") == pytest.approx(
        scale * (eigs.lam[0] - edge), rel=1e-12)
    assert tw_statistic(eigs, "mu") == pytest.approx(
        scale * (eigs.p * eigs.mu[0] - edge), rel=1e-12)
    with pytest.raises(DomainError):
        tw_statistic(eigs, "sigma")


def test_tw_statistic_single_eigenvalue_spectrum():
    eigs = eigen_sample_from_values([2.0], n=1)
    # mu is empty at m = 1; the normalized top is p * 1 by the unit sum
    scale = 2.0 ** (-4.0 / 3.0)
    assert tw_statistic(eigs, "mu") == pytest.approx(scale * (1.0 - 4.0))
    assert tw_statistic(eigs, "lambda") == pytest.approx(scale * (2.0 - 4.0))


# ---------------------------------------------------------------------------
# report plumbing

def test_report_consistency_and_json_fields():
    eigs = sample_eigs(SpikedModel(p=40, n=80, seed=1))
    for rep in (john_test(eigs), ledoit_wolf_test(eigs), clr_test(eigs),
                tracy_widom_test(eigs), tracy_widom_test(eigs, kind="mu")):
        assert rep.reject == (rep.statistic > rep.critical_value)
        blob = rep.to_json()
        assert set(blob) == {"test", "stat", "crit", "alpha", "reject",
                             "p", "n", "seed"}
        assert blob["p"] == 40 and blob["n"] == 80
    assert tracy_widom_test(eigs).test_name == "tracy_widom_lambda"
    assert tracy_widom_test(eigs, kind="mu").test_name == "tracy_widom_mu"
    assert tracy_widom_test(eigs).critical_value == pytest.approx(
        tw1_quantile(0.95), rel=1e-12)


def test_alpha_validation():
    eigs = sample_eigs(SpikedModel(p=10, n=20, seed=2))
    for bad in (0.0, 1.0, -0.1, 2.0):
        with pytest.raises(DomainError):
            john_test(eigs, alpha=bad)


def test_clr_applicability_guards():
    square = sample_eigs(SpikedModel(p=30, n=30, seed=4))
    with pytest.raises(InapplicableTestError):
        clr_statistic(square)
    tall = sample_eigs(SpikedModel(p=40, n=20, seed=4))
    with pytest.raises(InapplicableTestError):
        clr_test(tall)
    with_zero = eigen_sample_from_values([2.0, 1.0, 0.0], n=6)
    with pytest.raises(DomainError):
        clr_statistic(with_zero)


# ---------------------------------------------------------------------------
# null calibration from the shared batches

def test_john_null_law_moments(classical_null_batch):
    nu_p = classical_null_batch["nu_minus_p"]
    reps = len(nu_p)
    se = nu_p.std(ddof=1) / math.sqrt(reps)
    assert nu_p.mean() == pytest.approx(1.0, abs=3 * se)
    assert nu_p.var(ddof=1) == pytest.approx(4.0, rel=0.15)


def test_clr_null_law_moments(classical_null_batch):
    raw = classical_null_batch["clr_raw"]
    se = raw.std(ddof=1) / math.sqrt(len(raw))
    assert raw.mean() == pytest.approx(-0.5 * math.log1p(-0.5), abs=3 * se)
    assert raw.var(ddof=1) == pytest.approx(
        -2.0 * math.log1p(-0.5) - 1.0, rel=0.15)
    std = classical_null_batch["clr"]
    assert std.mean() == pytest.approx(0.0, abs=3 / math.sqrt(len(std)))
    assert std.var(ddof=1) == pytest.approx(1.0, rel=0.15)


def test_tw_null_quantile_matches_table(tw_null_batch):
    emp = np.quantile(tw_null_batch, 0.95)
    assert emp == pytest.approx(tw1_quantile(0.95), abs=0.15)


# ---------------------------------------------------------------------------
# supercritical power

def test_tw_rejects_supercritical_spike():
    model = SpikedModel(p=400, n=400, h=2.0, seed=66)
    reps = 200
    lam_rej = 0
    mu_rej = 0
    for i in range(reps):
        e = sample_eigs(model, i)
        lam_rej += tracy_widom_test(e).reject
        mu_rej += tracy_widom_test(e, kind="mu").reject
    assert lam_rej / reps > 0.99
    assert mu_rej / reps > 0.99


def test_tw_mu_statistic_free_of_scale():
    a = sample_eigs(SpikedModel(p=60, n=60, seed=12), 7)
    b = sample_eigs(SpikedModel(p=60, n=60, sigma2=5.0, seed=12), 7)
    assert tw_statistic(a, "mu") == tw_statistic(b, "mu")
