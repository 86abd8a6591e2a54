"""Large-dimension behavior of the log likelihood ratios.

Inside the contiguity region h < sqrt(c) the exact contour integrals admit a
Laplace approximation whose data dependence collapses onto two linear
spectral statistics: delta_p evaluated at the phase saddle z0(h), and (for
the unknown-scale kind) the trace. This module implements those limit
formulas, the Gaussian process the log-LR converges to on a grid of spike
strengths, the theta reparametrization that makes that process's drift
kind-free, the mean shift under contiguous alternatives, and an exponential
decay probe for the supercritical side of the transition.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Literal

import numpy as np

from .contour import log_lr_exact
from .errors import DomainError, RegimeError, SaddleCollisionError
from .mp_law import GUARD_EPS, require_in_regime, saddle_point
from .sampler import EigenSample, SpikedModel, delta_p, sample_eigs
from .util import deterministic_map

Kind = Literal["lambda", "mu"]


# ---------------------------------------------------------------------------
# the theta reparametrization: theta^2 = -ln(1 - h^2/c)

def theta_of_h(h: float, c: float) -> float:
    if c <= 0.0:
        raise DomainError("c must be positive")
    if h < 0.0:
        raise DomainError("h must be nonnegative")
    if h >= math.sqrt(c):
        raise RegimeError(
            f"h={h:g} is at or beyond the contiguity edge sqrt(c)={math.sqrt(c):g}")
    return math.sqrt(-math.log1p(-h * h / c))


def h_of_theta(theta: float, c: float) -> float:
    if c <= 0.0:
        raise DomainError("c must be positive")
    if theta < 0.0 or not math.isfinite(theta):
        raise DomainError("theta must be finite and nonnegative")
    return math.sqrt(-c * math.expm1(-theta * theta))


# ---------------------------------------------------------------------------
# asymptotic log likelihood ratios

def log_lr_asym(eigs: EigenSample, h: float, kind: Kind = "lambda",
                guard_eps: float = GUARD_EPS) -> float:
    """Limit formula for ln L(h; lambda) or ln L(h; mu).

    Valid only in-regime (0 < h <= (1 - eps) sqrt(c_p)); raises
    SaddleCollisionError when the largest eigenvalue reaches the saddle
    z0(h), which makes ln(z0 - lam_1) meaningless. That event has vanishing
    probability under the null but signals a sample/regime mismatch.
    """
    if kind not in ("lambda", "mu"):
        raise DomainError(f"kind must be 'lambda' or 'mu', got {kind!r}")
    c_p = eigs.c_p
    require_in_regime(h, c_p, guard_eps)
    z0 = saddle_point(h, c_p, guard_eps).z0
    lam1 = float(eigs.lam[0])
    if z0 <= lam1:
        raise SaddleCollisionError(
            f"largest eigenvalue {lam1:g} reaches the saddle z0={z0:g} "
            f"at h={h:g}")
    gap = delta_p(eigs, z0)
    core = gap - math.log1p(-h * h / c_p)
    if kind == "lambda":
        return -0.5 * core
    return -0.5 * (core - h * h / (2.0 * c_p)
                   + (h / c_p) * (eigs.S - eigs.p))


# ---------------------------------------------------------------------------
# the limiting Gaussian process on a theta grid

@dataclass(frozen=True)
class GaussianProcessLaw:
    """Finite-dimensional law of the limiting log-LR process X_theta."""

    kind: Kind
    c: float
    grid: np.ndarray
    mean: np.ndarray
    cov: np.ndarray

    def shifted(self, mean: np.ndarray) -> "GaussianProcessLaw":
        return GaussianProcessLaw(kind=self.kind, c=self.c, grid=self.grid,
                                  mean=mean, cov=self.cov)


def _log_psi(theta: np.ndarray) -> np.ndarray:
    # ln(1 - e^{-theta^2}), stable over the whole grid; -inf at theta = 0
    with np.errstate(divide="ignore"):
        return np.log1p(-np.exp(-theta * theta))


def _cross_terms(log_psi_i: np.ndarray,
                 log_psi_j: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """For u = (ln psi_i + ln psi_j)/2: returns (-ln(1 - e^u), e^u), the two
    ingredients of the covariance kernels. e^u equals h_i h_j / c."""
    u = 0.5 * (log_psi_i[:, None] + log_psi_j[None, :])
    with np.errstate(divide="ignore", invalid="ignore"):
        neg_log = -np.log(-np.expm1(u))
    # theta = 0 rows: u = -inf, expm1 -> -1, log -> 0; nothing to fix
    return neg_log, np.exp(u)


def gp_law(kind: Kind, c: float, grid: np.ndarray) -> GaussianProcessLaw:
    """Mean and covariance of the limit process on the given theta grid.

    The kernels blow up only at the excluded contiguity edge; near theta = 6
    the naive 1 - h_i h_j / c cancels catastrophically, so everything runs
    through ln psi = ln(1 - e^{-theta^2}).
    """
    if kind not in ("lambda", "mu"):
        raise DomainError(f"kind must be 'lambda' or 'mu', got {kind!r}")
    if c <= 0.0:
        raise DomainError("c must be positive")
    grid = np.asarray(grid, dtype=float)
    if grid.ndim != 1 or len(grid) == 0:
        raise DomainError("grid must be a nonempty vector")
    if np.any(~np.isfinite(grid)) or np.any(grid < 0.0):
        raise DomainError("grid values must be finite and nonnegative")
    lp = _log_psi(grid)
    neg_log, ratio = _cross_terms(lp, lp)
    if kind == "lambda":
        cov = 0.5 * neg_log
    else:
        cov = 0.5 * neg_log - 0.5 * ratio
    cov = 0.5 * (cov + cov.T)
    # the valid-likelihood-ratio identity E X = -Var X / 2 holds exactly
    mean = -0.5 * np.diag(cov).copy()
    return GaussianProcessLaw(kind=kind, c=c, grid=grid, mean=mean, cov=cov)


def lecam_shift(law: GaussianProcessLaw, theta1: float) -> GaussianProcessLaw:
    """Law of the same process under the contiguous alternative at theta1.

    Only the mean moves: by Cov(X_theta, X_theta1), computed in closed form
    so theta1 need not sit on the grid.
    """
    theta1 = float(theta1)
    if theta1 < 0.0 or not math.isfinite(theta1):
        raise DomainError("theta1 must be finite and nonnegative")
    lp1 = _log_psi(np.array([theta1]))
    neg_log, ratio = _cross_terms(_log_psi(law.grid), lp1)
    if law.kind == "lambda":
        shift = 0.5 * neg_log[:, 0]
    else:
        shift = 0.5 * neg_log[:, 0] - 0.5 * ratio[:, 0]
    return law.shifted(law.mean + shift)


# ---------------------------------------------------------------------------
# supercritical decay probe

@dataclass(frozen=True)
class DecayProbe:
    """Median unknown-scale log-LR at a fixed supercritical h, per n."""

    h: float
    c: float
    n_values: np.ndarray
    medians: np.ndarray
    slope: float


def lr_decay_probe(c: float, h: float, n_list, reps: int, seed: int,
                   threads: int | None = 1,
                   guard_eps: float = GUARD_EPS) -> DecayProbe:
    """Medians of ln L(h; mu) on null data along a ladder of sample sizes.

    Beyond the transition the likelihood ratio collapses exponentially fast,
    so the medians should fall linearly in n; slope is their least-squares
    rate. h must clear the transition by the guard factor, mirroring the
    subcritical guard band.
    """
    if c <= 0.0:
        raise DomainError("c must be positive")
    if not h > (1.0 + guard_eps) * math.sqrt(c):
        raise DomainError(
            f"decay probe needs h > (1+{guard_eps:g}) sqrt(c) = "
            f"{(1.0 + guard_eps) * math.sqrt(c):g}")
    n_values = np.asarray(list(n_list), dtype=int)
    if len(n_values) < 2:
        raise DomainError("need at least two sample sizes to fit a slope")
    if reps < 1:
        raise DomainError("reps must be positive")
    medians = []
    for block, n in enumerate(n_values):
        p = max(1, round(c * n))
        model = SpikedModel(p=p, n=int(n), seed=seed)

        def one(i: int, model=model, base=block * reps) -> float:
            eigs = sample_eigs(model, rep=base + i)
            return log_lr_exact(eigs, h, "mu").value

        vals = deterministic_map(one, reps, threads)
        medians.append(float(np.median(vals)))
    medians = np.asarray(medians)
    slope = float(np.polyfit(n_values.astype(float), medians, 1)[0])
    return DecayProbe(h=h, c=c, n_values=n_values, medians=medians,
                      slope=slope)
