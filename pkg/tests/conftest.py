"""Session-scope Monte Carlo batches shared across test modules.

Every statistical claim in the suite reads from one of these frozen arrays,
so each heavyweight simulation is paid for exactly once per run. All batches
draw from fixed-seed Philox streams; reruns are bit-identical.
"""
import numpy as np
import pytest

from spikelr.asymptotics import h_of_theta, log_lr_asym, lr_decay_probe
from spikelr.classical import (clr_statistic, clr_test, john_test, john_u,
                               ledoit_wolf_test, tracy_widom_test)
from spikelr.contour import log_lr_exact
from spikelr.mp_law import saddle_point
from spikelr.sampler import SpikedModel, delta_p, sample_eigs


@pytest.fixture(scope="session")
def asym_lr_null_batch():
    """Asymptotic log-LR at h = 0.4 under the null, c = 0.5, p = 500,
    2000 replications; columns are the lambda and mu kinds."""
    model = SpikedModel(p=500, n=1000, seed=2718)
    rows = np.empty((2000, 2))
    for i in range(rows.shape[0]):
        e = sample_eigs(model, i)
        rows[i] = (log_lr_asym(e, 0.4, "lambda"), log_lr_asym(e, 0.4, "mu"))
    return rows


@pytest.fixture(scope="session")
def classical_null_batch():
    """Null classical statistics at c = 0.5, p = 200, n = 400, 5000 reps."""
    model = SpikedModel(p=200, n=400, seed=1123)
    reps = 5000
    out = {key: np.empty(reps) for key in
           ("john", "ledoit_wolf", "clr", "clr_raw", "nu_minus_p")}
    for i in range(reps):
        e = sample_eigs(model, i)
        out["john"][i] = john_test(e).statistic
        out["ledoit_wolf"][i] = ledoit_wolf_test(e).statistic
        out["clr"][i] = clr_test(e).statistic
        out["clr_raw"][i] = clr_statistic(e)
        out["nu_minus_p"][i] = e.n * john_u(e) - e.p
    return out


@pytest.fixture(scope="session")
def classical_alt_batches():
    """Rejection indicators at alpha = 0.05 under contiguous alternatives
    theta1 in {1.5, 2.0} at c = 0.5, p = 200, n = 400, 3000 reps each."""
    reps = 3000
    result = {}
    for theta1, seed in ((1.5, 7151), (2.0, 7202)):
        h = h_of_theta(theta1, 0.5)
        model = SpikedModel(p=200, n=400, h=h, seed=seed)
        flags = {key: np.empty(reps, dtype=bool) for key in
                 ("john", "ledoit_wolf", "clr", "tw_lambda", "tw_mu")}
        for i in range(reps):
            e = sample_eigs(model, i)
            flags["john"][i] = john_test(e).reject
            flags["ledoit_wolf"][i] = ledoit_wolf_test(e).reject
            flags["clr"][i] = clr_test(e).reject
            flags["tw_lambda"][i] = tracy_widom_test(e, kind="lambda").reject
            flags["tw_mu"][i] = tracy_widom_test(e, kind="mu").reject
        result[theta1] = flags
    return result


@pytest.fixture(scope="session")
def tw_null_batch():
    """Tracy-Widom statistics under the null at c = 1, p = n = 400,
    2000 replications (lambda kind)."""
    model = SpikedModel(p=400, n=400, seed=4242)
    stats = np.empty(2000)
    for i in range(stats.shape[0]):
        stats[i] = tracy_widom_test(sample_eigs(model, i)).statistic
    return stats


@pytest.fixture(scope="session")
def trace_potential_null_batch():
    """Null joint draws of (S - p, lam_1, delta_p at z0(0.2), delta_p at
    z0(0.5)) at p = 400, c = 0.5, 5000 replications.

    At h = 0.5 the saddle z0 = 3.0 sits close enough to the bulk edge that
    a few replications put lam_1 beyond it; those entries carry NaN and are
    counted by the consuming tests rather than hidden here.
    """
    model = SpikedModel(p=400, n=800, seed=4001)
    z_lo = saddle_point(0.2, 0.5).z0
    z_hi = saddle_point(0.5, 0.5).z0
    out = np.empty((5000, 4))
    for i in range(out.shape[0]):
        e = sample_eigs(model, i)
        lam1 = float(e.lam[0])
        out[i] = (e.S - e.p, lam1,
                  delta_p(e, z_lo) if z_lo > lam1 else np.nan,
                  delta_p(e, z_hi) if z_hi > lam1 else np.nan)
    return out


@pytest.fixture(scope="session")
def equivalence_medians():
    """Median |exact - asymptotic| log-LR per kind over 50 seeds for
    n in (100, 200, 400) at c = 0.5, h = 0.3."""
    n_values = (100, 200, 400)
    gaps = {"lambda": [], "mu": []}
    for n in n_values:
        model = SpikedModel(p=n // 2, n=n, seed=9000 + n)
        rows = {"lambda": [], "mu": []}
        for i in range(50):
            e = sample_eigs(model, i)
            for kind in ("lambda", "mu"):
                exact = log_lr_exact(e, 0.3, kind).value
                asym = log_lr_asym(e, 0.3, kind)
                rows[kind].append(abs(exact - asym))
        for kind in ("lambda", "mu"):
            gaps[kind].append(float(np.median(rows[kind])))
    return {"n": n_values, **gaps}


@pytest.fixture(scope="session")
def decay_probe_result():
    """Supercritical decay probe at c = 1, h = 2, n in (50, 100, 200)."""
    return lr_decay_probe(c=1.0, h=2.0, n_list=(50, 100, 200), reps=50,
                          seed=606)
