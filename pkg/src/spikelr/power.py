"""Power envelopes, classical power curves, and sup-LR simulation.

Three layers of power analysis live here. Closed forms: the Neyman-Pearson
envelopes of the two likelihood-ratio families and the limiting local power
of each classical test, all plain normal-CDF expressions in theta. Process
simulation: the limiting Gaussian process of the log-LR on a theta grid,
sampled by Cholesky factorization, from which sup-LR and weighted-average
critical values and power curves come out as quantile/exceedance counts.
Finite-sample: pivotal Monte Carlo critical values for the exact tests and
empirical power of any named test at a contiguous alternative.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Literal

import numpy as np
from scipy.special import logsumexp
from scipy.stats import norm

from .asymptotics import gp_law, h_of_theta, lecam_shift
from .classical import (clr_test, john_test, ledoit_wolf_test,
                        tracy_widom_test)
from .contour import log_lr_exact
from .errors import (ContourGeometryError, DomainError, FactorizationError,
                     QuadratureError)
from .mp_law import GUARD_EPS, guard_theta_cap
from .sampler import SpikedModel, sample_eigs
from .util import deterministic_map, rng_stream

Kind = Literal["lambda", "mu"]

# draws per Philox stream in the path simulators; fixed so results do not
# depend on memory limits or worker count
_BLOCK = 8192

_JITTERS = (0.0, 1e-10, 1e-9, 1e-8, 1e-7, 1e-6)


# ---------------------------------------------------------------------------
# result containers

@dataclass(frozen=True)
class PowerCurve:
    """Power as a function of the alternative theta1, at a fixed size."""

    theta_grid: np.ndarray
    values: np.ndarray
    label: str
    alpha: float
    c: float | None = None

    def __post_init__(self) -> None:
        grid = np.asarray(self.theta_grid, dtype=float)
        vals = np.asarray(self.values, dtype=float)
        if grid.ndim != 1 or grid.shape != vals.shape:
            raise DomainError("theta_grid and values must be equal-length vectors")
        if np.any(np.diff(grid) <= 0.0):
            raise DomainError("theta_grid must be strictly ascending")
        if np.any(vals < -1e-12) or np.any(vals > 1.0 + 1e-12):
            raise DomainError("power values must lie in [0, 1]")
        if not 0.0 < self.alpha < 1.0:
            raise DomainError("alpha must lie in (0, 1)")
        object.__setattr__(self, "theta_grid", grid)
        object.__setattr__(self, "values", vals)

    def to_json(self) -> dict:
        return {"label": self.label, "alpha": self.alpha, "c": self.c,
                "theta": self.theta_grid.tolist(),
                "value": self.values.tolist()}


@dataclass(frozen=True)
class SupDistribution:
    """Simulated distribution of twice the running maximum of the limit
    process over a theta grid."""

    samples: np.ndarray
    grid_spec: tuple[float, int]
    draws: int
    kind: Kind
    seed: int
    shift_theta1: float | None = None

    def __post_init__(self) -> None:
        samples = np.asarray(self.samples, dtype=float)
        if samples.ndim != 1 or len(samples) != self.draws:
            raise DomainError("samples must be a vector of length draws")
        if np.any(np.diff(samples) < 0.0):
            raise DomainError("samples must be sorted ascending")
        object.__setattr__(self, "samples", samples)

    def quantile(self, level: float) -> float:
        return _upper_quantile(self.samples, level)

    def to_json(self) -> dict:
        return {"kind": self.kind, "draws": self.draws, "seed": self.seed,
                "grid": {"M": self.grid_spec[0], "points": self.grid_spec[1]},
                "shift_theta1": self.shift_theta1,
                "samples": self.samples.tolist()}


@dataclass(frozen=True)
class McExactCritical:
    """Monte Carlo critical value for an exact sup-LR test, with the
    bookkeeping the result is meaningless without. samples holds the sorted
    per-replication sup statistics that survived quadrature."""

    value: float
    kind: Kind
    p: int
    n: int
    M: float
    alpha: float
    reps: int
    seed: int
    failures: int
    theta_grid: np.ndarray
    samples: np.ndarray

    def __float__(self) -> float:
        return self.value


# ---------------------------------------------------------------------------
# closed forms

def envelope(theta1: float, alpha: float, kind: Kind = "lambda") -> float:
    """Best attainable asymptotic power against the alternative theta1.

    Known-scale kind: 1 - Phi(z_a - theta1/sqrt(2)). Unknown-scale kind
    replaces theta1/sqrt(2) by sqrt((theta1^2 - 1 + e^{-theta1^2})/2), which
    is smaller: not knowing sigma^2 costs power at every theta1 > 0.
    """
    _check_alpha(alpha)
    if theta1 < 0.0 or not math.isfinite(theta1):
        raise DomainError("theta1 must be finite and nonnegative")
    if kind == "lambda":
        drift = theta1 / math.sqrt(2.0)
    elif kind == "mu":
        drift = math.sqrt(0.5 * (theta1 ** 2 - 1.0 + math.exp(-theta1 ** 2)))
    else:
        raise DomainError(f"kind must be 'lambda' or 'mu', got {kind!r}")
    if drift == 0.0:
        return alpha
    return 1.0 - norm.cdf(norm.ppf(1.0 - alpha) - drift)


_TEST_ALIASES = {
    "john": "john",
    "lw": "ledoit_wolf",
    "ledoit_wolf": "ledoit_wolf",
    "clr": "clr",
    "tw": "tw",
    "tracy_widom": "tw",
    "tracy_widom_lambda": "tw",
    "tracy_widom_mu": "tw",
}


def classical_power(theta1: float, alpha: float, test: str,
                    c: float | None = None) -> float:
    """Limiting power of a classical test along the contiguous family.

    The largest-eigenvalue test has trivial power alpha everywhere inside
    the transition. John and Ledoit-Wolf share one curve through
    psi = 1 - e^{-theta1^2}; the corrected LR test interpolates between that
    curve (c -> 0) and triviality (c -> 1).
    """
    _check_alpha(alpha)
    if theta1 < 0.0 or not math.isfinite(theta1):
        raise DomainError("theta1 must be finite and nonnegative")
    name = _TEST_ALIASES.get(test)
    if name is None:
        raise DomainError(f"unknown test {test!r}")
    if name == "tw":
        return alpha
    psi = -math.expm1(-theta1 ** 2)
    if name in ("john", "ledoit_wolf"):
        drift = 0.5 * psi
    else:
        if c is None:
            raise DomainError("the clr power curve needs the ratio c")
        if not 0.0 < c < 1.0:
            raise DomainError(
                "clr power is defined for c in (0, 1); its null variance "
                f"-2 ln(1-c) - 2c diverges at c = 1 (got c={c:g})")
        r = math.sqrt(c * psi)
        drift = (r - math.log1p(r)) / math.sqrt(-2.0 * math.log1p(-c) - 2.0 * c)
    if drift == 0.0:
        return alpha
    return 1.0 - norm.cdf(norm.ppf(1.0 - alpha) - drift)


# ---------------------------------------------------------------------------
# Gaussian-process simulation

def _check_alpha(alpha: float) -> None:
    if not 0.0 < alpha < 1.0:
        raise DomainError("alpha must lie in (0, 1)")


def _upper_quantile(sorted_samples: np.ndarray, level: float) -> float:
    """Order statistic at ceil(level * N): the conservative (upper) empirical
    quantile."""
    if not 0.0 < level < 1.0:
        raise DomainError("quantile level must lie in (0, 1)")
    count = len(sorted_samples)
    if count == 0:
        raise DomainError("no samples to take a quantile of")
    k = min(max(math.ceil(level * count), 1), count)
    return float(sorted_samples[k - 1])


def _validate_grid_spec(grid_spec: tuple[float, int]) -> tuple[float, int]:
    M, points = float(grid_spec[0]), int(grid_spec[1])
    if not (M >= 0.0 and math.isfinite(M)):
        raise DomainError("grid M must be finite and nonnegative")
    if M > 20.0:
        raise DomainError("grid M beyond 20 serves no purpose: the process "
                          "variance grows like theta^2/2 and overflows the kernels")
    if points < 1:
        raise DomainError("grid needs at least one point")
    if points == 1 and M != 0.0:
        raise DomainError("a single-point grid must sit at theta = 0")
    return M, points


def _cholesky_with_jitter(cov: np.ndarray) -> tuple[np.ndarray, float]:
    """Lower factor of cov + jitter * I, escalating the jitter through
    _JITTERS; near-singularity is expected for fine grids because nearby
    theta values are almost perfectly correlated."""
    for jitter in _JITTERS:
        shifted = cov if jitter == 0.0 else cov + jitter * np.eye(len(cov))
        try:
            return np.linalg.cholesky(shifted), jitter
        except np.linalg.LinAlgError:
            continue
    raise FactorizationError(
        "covariance factorization failed at every jitter level",
        {"dim": len(cov), "max_jitter": _JITTERS[-1],
         "min_diag": float(np.diag(cov).min())})


class _PathSimulator:
    """Shared engine: joint draws of the limit process on a fixed grid,
    evaluated under any number of mean shifts on common random numbers.

    Grid points with zero variance (theta = 0) are carried outside the
    factorization; their paths equal the mean exactly, which keeps the
    covariance of the remaining block well conditioned and makes the
    degenerate one-point grid exact rather than jitter-noisy.
    """

    def __init__(self, kind: Kind, grid: np.ndarray,
                 jitter: float | None = None):
        self.grid = np.asarray(grid, dtype=float)
        self.law = gp_law(kind, 1.0, self.grid)
        self.kind = kind
        live = np.diag(self.law.cov) > 0.0
        self.live = live
        if jitter is None:
            self.L, self.jitter = _cholesky_with_jitter(
                self.law.cov[np.ix_(live, live)]) if live.any() else (None, 0.0)
        else:
            base = self.law.cov[np.ix_(live, live)]
            self.L = (np.linalg.cholesky(base + jitter * np.eye(len(base)))
                      if live.any() else None)
            self.jitter = jitter

    def mean_for(self, shift_theta1: float | None) -> np.ndarray:
        if shift_theta1 is None:
            return self.law.mean
        return lecam_shift(self.law, shift_theta1).mean

    def run(self, draws: int, seed: int, means: list[np.ndarray],
            mode: Literal["sup", "wap"]) -> list[np.ndarray]:
        """One array of per-draw statistics for each mean vector, all
        evaluated on the same underlying normal draws (block b always reads
        Philox stream (seed, b), so results are reproducible and
        common-random-number coupled across shifts and draw counts)."""
        if draws < 1:
            raise DomainError("draws must be positive")
        live = self.live
        n_live = int(live.sum())
        n_flat = len(self.grid) - n_live
        log_points = math.log(len(self.grid))
        out = [np.empty(draws) for _ in means]
        done = 0
        block = 0
        while done < draws:
            count = min(_BLOCK, draws - done)
            if n_live:
                Z = rng_stream(seed, block).standard_normal((n_live, count))
                noise = self.L @ Z
            for j, mean in enumerate(means):
                if mode == "sup":
                    if n_live:
                        stat = (noise + mean[live, None]).max(axis=0)
                        if n_flat:
                            np.maximum(stat, mean[~live].max(), out=stat)
                    else:
                        stat = np.full(count, mean.max())
                    out[j][done:done + count] = 2.0 * stat
                else:
                    if n_live:
                        lse = logsumexp(noise + mean[live, None], axis=0)
                        if n_flat:
                            lse = np.logaddexp(lse, logsumexp(mean[~live]))
                    else:
                        lse = np.full(count, logsumexp(mean))
                    out[j][done:done + count] = lse - log_points
            done += count
            block += 1
        return out


def simulate_sup(kind: Kind, grid_spec: tuple[float, int], draws: int,
                 seed: int, shift_theta1: float | None = None,
                 jitter: float | None = None) -> SupDistribution:
    """Distribution of 2 sup X_theta over the grid, null or shifted.

    jitter pins the diagonal regularization for diagnostics; leave it None
    for the escalating ladder.
    """
    if draws < 10_000:
        raise DomainError("sup simulation below 10^4 draws is too noisy "
                          "to quantile")
    if shift_theta1 is not None and (
            shift_theta1 < 0.0 or not math.isfinite(shift_theta1)):
        raise DomainError("shift_theta1 must be finite and nonnegative")
    M, points = _validate_grid_spec(grid_spec)
    sim = _PathSimulator(kind, np.linspace(0.0, M, points), jitter=jitter)
    stats = sim.run(draws, seed, [sim.mean_for(shift_theta1)], "sup")[0]
    stats.sort()
    return SupDistribution(samples=stats, grid_spec=(M, points),
                           draws=draws, kind=kind, seed=seed,
                           shift_theta1=shift_theta1)


def _mc_power_curve(kind: Kind, theta1_grid, alpha: float,
                    grid_spec: tuple[float, int], draws: int, seed: int,
                    mode: Literal["sup", "wap"], label: str) -> PowerCurve:
    _check_alpha(alpha)
    if draws < 10_000:
        raise DomainError("power curves below 10^4 draws are too noisy")
    theta1_grid = np.asarray(theta1_grid, dtype=float)
    if theta1_grid.ndim != 1 or len(theta1_grid) == 0:
        raise DomainError("theta1_grid must be a nonempty vector")
    if np.any(~np.isfinite(theta1_grid)) or np.any(theta1_grid < 0.0):
        raise DomainError("theta1 values must be finite and nonnegative")
    if np.any(np.diff(theta1_grid) <= 0.0):
        raise DomainError("theta1_grid must be strictly ascending")
    M, points = _validate_grid_spec(grid_spec)
    sim = _PathSimulator(kind, np.linspace(0.0, M, points))
    means = [sim.mean_for(None)]
    means += [sim.mean_for(float(t)) for t in theta1_grid]
    stats = sim.run(draws, seed, means, mode)
    null = np.sort(stats[0])
    crit = _upper_quantile(null, 1.0 - alpha)
    values = np.array([np.mean(s > crit) for s in stats[1:]])
    return PowerCurve(theta_grid=theta1_grid, values=values, label=label,
                      alpha=alpha, c=None)


def lr_power_curve(kind: Kind, theta1_grid, alpha: float,
                   grid_spec: tuple[float, int], draws: int,
                   seed: int) -> PowerCurve:
    """Asymptotic power of the sup-LR test: the shifted-law exceedance rate
    of the null 1-alpha quantile, both sides on common random numbers."""
    return _mc_power_curve(kind, theta1_grid, alpha, grid_spec, draws, seed,
                           "sup", f"lr_sup_{kind}")


def wap_power_curve(kind: Kind, theta1_grid, alpha: float,
                    grid_spec: tuple[float, int], draws: int, seed: int,
                    weight: str = "uniform") -> PowerCurve:
    """Asymptotic power of the weighted-average-power test with uniform
    weight on the grid: per draw, ln of the grid average of e^{X_theta}."""
    if weight != "uniform":
        raise DomainError(f"only the uniform weight is implemented, got "
                          f"{weight!r}")
    return _mc_power_curve(kind, theta1_grid, alpha, grid_spec, draws, seed,
                           "wap", f"wap_{kind}")


def asymptotic_critical(kind: Kind, grid: np.ndarray, draws: int, seed: int,
                        alpha: float,
                        mode: Literal["sup", "wap"] = "sup") -> float:
    """Null (1-alpha) quantile of the sup or WAP statistic of the limit
    process on an explicit theta grid.

    Exists for testing observed spectra against asymptotic critical values
    on the same (possibly guard-capped) grid the data statistic uses.
    """
    _check_alpha(alpha)
    if draws < 10_000:
        raise DomainError("critical-value simulation below 10^4 draws is "
                          "too noisy to quantile")
    if mode not in ("sup", "wap"):
        raise DomainError(f"mode must be 'sup' or 'wap', got {mode!r}")
    sim = _PathSimulator(kind, grid)
    stats = sim.run(draws, seed, [sim.mean_for(None)], mode)[0]
    stats.sort()
    return _upper_quantile(stats, 1.0 - alpha)


# ---------------------------------------------------------------------------
# finite-sample Monte Carlo

def capped_theta_grid(M: float, points: int, c_p: float,
                      guard_eps: float = GUARD_EPS) -> np.ndarray:
    """Uniform theta grid on [0, M] with every point mapping inside the
    guard band h < (1-eps) sqrt(c_p); the cap is c-free in theta."""
    M, points = _validate_grid_spec((M, points))
    cap = guard_theta_cap(c_p, guard_eps)
    grid = np.linspace(0.0, M, points)
    grid = grid[grid < cap]
    if len(grid) < 2:
        raise DomainError(
            f"theta grid collapsed under the guard cap {cap:g}; "
            "request a finer grid")
    return grid


def mc_exact_critical(kind: Kind, p: int, n: int, theta_grid_M: float,
                      reps: int, alpha: float, seed: int,
                      points: int = 61, threads: int | None = 1,
                      sigma2: float = 1.0,
                      guard_eps: float = GUARD_EPS) -> McExactCritical:
    """Null critical value of the finite-sample sup-LR statistic by direct
    simulation.

    Per replication: twice the max over the capped theta grid of the exact
    log-LR (the theta = 0 point contributes exactly zero and is skipped).
    The log-LRs depend on the data only through the spectrum (mu for the
    unknown-scale kind), so the quantile is pivotal and one table serves
    any sigma^2. Replications whose contour quadrature fails are dropped
    and counted; more than 1% of them invalidates the run.
    """
    _check_alpha(alpha)
    if kind not in ("lambda", "mu"):
        raise DomainError(f"kind must be 'lambda' or 'mu', got {kind!r}")
    if reps < 100:
        raise DomainError("need at least 100 replications for a quantile")
    grid = capped_theta_grid(theta_grid_M, points, p / n, guard_eps)
    h_values = [h_of_theta(float(t), p / n) for t in grid if t > 0.0]
    # sigma2 exercises pivotality: the mu-kind quantile must not move
    model = SpikedModel(p=p, n=n, sigma2=sigma2, seed=seed)

    def one(i: int) -> float:
        eigs = sample_eigs(model, i)
        best = 0.0
        for h in h_values:
            try:
                best = max(best, log_lr_exact(eigs, h, kind).value)
            except (QuadratureError, ContourGeometryError):
                return math.nan
        return 2.0 * best

    sups = np.asarray(deterministic_map(one, reps, threads))
    failed = int(np.isnan(sups).sum())
    if failed > 0.01 * reps:
        raise QuadratureError(
            f"{failed} of {reps} replications lost to contour failures",
            {"kind": kind, "p": p, "n": n, "failures": failed})
    good = np.sort(sups[~np.isnan(sups)])
    value = _upper_quantile(good, 1.0 - alpha)
    return McExactCritical(value=value, kind=kind, p=p, n=n,
                           M=float(theta_grid_M), alpha=alpha, reps=reps,
                           seed=seed, failures=failed, theta_grid=grid,
                           samples=good)


_TEST_RUNNERS = {
    "john": lambda e, a: john_test(e, a),
    "ledoit_wolf": lambda e, a: ledoit_wolf_test(e, a),
    "clr": lambda e, a: clr_test(e, a),
    "tracy_widom_lambda": lambda e, a: tracy_widom_test(e, a, kind="lambda"),
    "tracy_widom_mu": lambda e, a: tracy_widom_test(e, a, kind="mu"),
}

_RUNNER_ALIASES = {"lw": "ledoit_wolf", "tw": "tracy_widom_lambda",
                   "tw_lambda": "tracy_widom_lambda",
                   "tw_mu": "tracy_widom_mu"}


def empirical_power(test_name: str, theta1: float, p: int, n: int,
                    reps: int, alpha: float, seed: int,
                    threads: int | None = 1) -> float:
    """Finite-sample rejection rate of a named classical test at the
    contiguous alternative theta1 (theta1 = 0 is the null)."""
    _check_alpha(alpha)
    name = _RUNNER_ALIASES.get(test_name, test_name)
    runner = _TEST_RUNNERS.get(name)
    if runner is None:
        raise DomainError(f"unknown test {test_name!r}")
    if reps < 1:
        raise DomainError("reps must be positive")
    if theta1 < 0.0 or not math.isfinite(theta1):
        raise DomainError("theta1 must be finite and nonnegative")
    h = h_of_theta(theta1, p / n) if theta1 > 0.0 else 0.0
    model = SpikedModel(p=p, n=n, h=h, seed=seed)

    def one(i: int) -> bool:
        return runner(sample_eigs(model, i), alpha).reject

    flags = deterministic_map(one, reps, threads)
    return float(np.mean(flags))
