"""Benchmark tests of sphericity from the sample covariance spectrum.

Four classical procedures: the locally most powerful invariant test (John),
its unknown-trace correction aimed at Sigma = I (Ledoit-Wolf), the corrected
Gaussian likelihood ratio test (CLR), and the largest-eigenvalue test against
the Tracy-Widom null law. Each returns a TestReport with the statistic on its
conventional scale and the critical value it was compared against.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Literal

import numpy as np
from scipy.stats import norm

from .errors import DomainError, InapplicableTestError
from .sampler import EigenSample
from .tw1 import tw1_quantile

TwKind = Literal["lambda", "mu"]


@dataclass(frozen=True)
class TestReport:
    """Outcome of one test on one spectrum; serializes to flat JSON."""

    test_name: str
    statistic: float
    critical_value: float
    alpha: float
    reject: bool
    meta: dict = field(default_factory=dict)

    def to_json(self) -> dict:
        return {
            "test": self.test_name,
            "stat": self.statistic,
            "crit": self.critical_value,
            "alpha": self.alpha,
            "reject": self.reject,
            "p": self.meta.get("p"),
            "n": self.meta.get("n"),
            "seed": self.meta.get("seed"),
        }


def _report(name: str, statistic: float, critical: float, alpha: float,
            eigs: EigenSample, **extra) -> TestReport:
    if not 0.0 < alpha < 1.0:
        raise DomainError("alpha must lie in (0, 1)")
    meta = {"p": eigs.p, "n": eigs.n, **extra}
    return TestReport(test_name=name, statistic=float(statistic),
                      critical_value=float(critical), alpha=alpha,
                      reject=bool(statistic > critical), meta=meta)


def john_u(eigs: EigenSample) -> float:
    """U = (1/p) sum (lam_j / mean(lam) - 1)^2 over all p eigenvalues."""
    if not eigs.S > 0.0:
        raise DomainError("spectrum with zero trace")
    mean = eigs.S / eigs.p
    dev = eigs.lam / mean - 1.0
    total = float(dev @ dev) + (eigs.p - eigs.m) * 1.0  # zeros give (0-1)^2
    return total / eigs.p


def john_test(eigs: EigenSample, alpha: float = 0.05) -> TestReport:
    """Locally most powerful invariant test; depends on the data only
    through mu, so it needs no knowledge of the scale."""
    u = john_u(eigs)
    stat = 0.5 * (eigs.n * u - eigs.p - 1.0)
    return _report("john", stat, norm.ppf(1.0 - alpha), alpha, eigs)


def ledoit_wolf_w(eigs: EigenSample) -> float:
    """W = (1/p) sum (lam_j - 1)^2 - c_p mean(lam)^2 + c_p, all p terms."""
    dev = eigs.lam - 1.0
    total = float(dev @ dev) + (eigs.p - eigs.m) * 1.0
    mean = eigs.S / eigs.p
    return total / eigs.p - eigs.c_p * mean * mean + eigs.c_p


def ledoit_wolf_test(eigs: EigenSample, alpha: float = 0.05) -> TestReport:
    """Scale-sensitive variant aimed at Sigma = I rather than Sigma
    proportional to I; same null standardization as the John test."""
    w = ledoit_wolf_w(eigs)
    stat = 0.5 * (eigs.n * w - eigs.p - 1.0)
    return _report("ledoit_wolf", stat, norm.ppf(1.0 - alpha), alpha, eigs)


def clr_statistic(eigs: EigenSample) -> float:
    """Corrected log likelihood ratio S - sum ln lam - p - p correction."""
    if eigs.p >= eigs.n:
        raise InapplicableTestError(
            "the likelihood ratio statistic needs n > p for a full-rank "
            "sample covariance")
    if np.any(eigs.lam <= 0.0):
        raise DomainError("log determinant undefined: zero eigenvalue")
    p, n = eigs.p, eigs.n
    ratio = p / n
    correction = p * (1.0 - (1.0 - n / p) * math.log1p(-ratio))
    return float(eigs.S - np.log(eigs.lam).sum() - p - correction)


def clr_test(eigs: EigenSample, alpha: float = 0.05) -> TestReport:
    """Gaussian likelihood ratio test with its high-dimensional centering
    -1/2 ln(1-c) and variance -2 ln(1-c) - 2c."""
    raw = clr_statistic(eigs)
    c_p = eigs.c_p
    sd = math.sqrt(-2.0 * math.log1p(-c_p) - 2.0 * c_p)
    stat = (raw + 0.5 * math.log1p(-c_p)) / sd
    return _report("clr", stat, norm.ppf(1.0 - alpha), alpha, eigs)


def tw_statistic(eigs: EigenSample, kind: TwKind = "lambda") -> float:
    """Centered and scaled largest eigenvalue (or largest normalized
    eigenvalue p mu_1 for the scale-free kind)."""
    if kind not in ("lambda", "mu"):
        raise DomainError(f"kind must be 'lambda' or 'mu', got {kind!r}")
    if kind == "lambda":
        top = float(eigs.lam[0])
    else:
        top = eigs.p * (float(eigs.mu[0]) if eigs.m > 1 else 1.0)
    c_p = eigs.c_p
    root = math.sqrt(c_p)
    edge = (1.0 + root) ** 2
    scale = eigs.n ** (2.0 / 3.0) * c_p ** (1.0 / 6.0) * (1.0 + root) ** (-4.0 / 3.0)
    return scale * (top - edge)


def tracy_widom_test(eigs: EigenSample, alpha: float = 0.05,
                     kind: TwKind = "lambda") -> TestReport:
    """Largest-eigenvalue test; under the null the statistic follows the
    Tracy-Widom law of the first kind."""
    stat = tw_statistic(eigs, kind)
    return _report(f"tracy_widom_{kind}", stat, tw1_quantile(1.0 - alpha),
                   alpha, eigs)
