"""Sampling from the rank-one spiked covariance model.

The data law is n i.i.d. real Gaussian columns with covariance
sigma2 * (I_p + h v v^T). Everything downstream consumes only the spectrum
of the sample covariance (1/n) X X^T, so this module stops at eigenvalues
and the two linear spectral statistics built from them: the trace S and the
centered log-determinant delta_p.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .errors import DomainError, EigensolverError
from .mp_law import mp_log_potential
from .util import rng_stream


@dataclass(frozen=True)
class SpikedModel:
    """Population covariance sigma2 * (I_p + h v v^T), Gaussian columns.

    v = None means the first coordinate axis. The eigenvalue law is invariant
    to the spike direction, and e1 keeps sampling O(p n) with no p x p
    transform.
    """

    p: int
    n: int
    h: float = 0.0
    sigma2: float = 1.0
    v: np.ndarray | None = None
    seed: int = 0

    def __post_init__(self) -> None:
        if self.p < 1 or self.n < 1:
            raise DomainError("p and n must be positive integers")
        if not self.h >= 0.0:
            raise DomainError("spike strength h must be nonnegative")
        if not self.sigma2 > 0.0:
            raise DomainError("sigma2 must be positive")
        if self.v is not None:
            v = np.asarray(self.v, dtype=float)
            if v.shape != (self.p,):
                raise DomainError("spike direction v must have length p")
            if abs(np.linalg.norm(v) - 1.0) > 1e-12:
                raise DomainError("spike direction v must be a unit vector")
            object.__setattr__(self, "v", v)

    @property
    def c_p(self) -> float:
        return self.p / self.n


@dataclass(frozen=True)
class EigenSample:
    """Spectrum of a sample covariance matrix.

    lam holds the m = min(n, p) possibly-nonzero eigenvalues, descending.
    When p > n the remaining p - m eigenvalues are exactly zero and kept
    implicit; S and delta_p account for them. mu stores the first m - 1
    normalized eigenvalues lam_j / S (the remaining entries are determined
    by the unit sum).
    """

    lam: np.ndarray
    S: float
    mu: np.ndarray
    c_p: float
    p: int
    n: int

    @property
    def m(self) -> int:
        return len(self.lam)


def _package(lam: np.ndarray, p: int, n: int) -> EigenSample:
    S = float(lam.sum())
    if not S > 0.0:
        raise DomainError("degenerate spectrum: trace is not positive")
    return EigenSample(lam=lam, S=S, mu=lam[:-1] / S, c_p=p / n, p=p, n=n)


def sample_eigs(model: SpikedModel, rep: int = 0) -> EigenSample:
    """Draw one replication and return its sample covariance spectrum.

    Pure in (model, rep): replication rep reads Philox stream
    (model.seed, rep) only, so batches are reproducible under any worker
    count. The spike enters as z + (sqrt(1+h) - 1) (v'z) v applied to
    standard normal columns.
    """
    rng = rng_stream(model.seed, rep)
    p, n = model.p, model.n
    X = rng.standard_normal((p, n))
    if model.h > 0.0:
        root = math.sqrt(1.0 + model.h)
        if model.v is None:
            X[0, :] *= root
        else:
            X += (root - 1.0) * np.outer(model.v, model.v @ X)
    # Eigenvalues come from the smaller of the two Gram factors; the nonzero
    # spectra of X X'/n and X'X/n coincide.
    if p <= n:
        G = (X @ X.T) / n
    else:
        G = (X.T @ X) / n
    try:
        lam = np.linalg.eigvalsh(G)[::-1].copy()
    except np.linalg.LinAlgError as exc:
        raise EigensolverError(
            "eigensolver failed on sample covariance",
            {"p": p, "n": n, "frobenius": float(np.linalg.norm(G)),
             "max_abs": float(np.abs(G).max())},
        ) from exc
    np.maximum(lam, 0.0, out=lam)
    # sigma2 rescales the spectrum exactly, so mu and S are derived at unit
    # scale first; this keeps mu bitwise independent of the scale.
    S = float(lam.sum())
    if not S > 0.0:
        raise DomainError("degenerate spectrum: trace is not positive")
    mu = lam[:-1] / S
    if model.sigma2 != 1.0:
        lam = lam * model.sigma2
        S = S * model.sigma2
    return EigenSample(lam=lam, S=S, mu=mu, c_p=p / n, p=p, n=n)


def eigen_sample_from_values(values: np.ndarray, n: int) -> EigenSample:
    """Package an externally supplied eigenvalue vector of full length p.

    For p > n the vector must end in p - n (numerical) zeros, which are
    dropped and tracked implicitly.
    """
    lam = np.sort(np.asarray(values, dtype=float))[::-1].copy()
    p = len(lam)
    if p < 1 or n < 1:
        raise DomainError("need at least one eigenvalue and n >= 1")
    if lam[-1] < 0 and lam[-1] > -1e-12 * max(lam[0], 1.0):
        np.maximum(lam, 0.0, out=lam)
    if np.any(lam < 0):
        raise DomainError("negative eigenvalue in input spectrum")
    m = min(p, n)
    if p > n:
        tail = lam[m:]
        if np.any(tail > 1e-10 * max(lam[0], 1.0)):
            raise DomainError(
                "spectrum of a p x p sample covariance with p > n must end "
                "in p - n zero eigenvalues")
        lam = lam[:m].copy()
    return _package(lam, p, n)


@lru_cache(maxsize=4096)
def _mp_potential(z: float, c_p: float) -> float:
    # delta_p gets called at the same z across thousands of replications.
    return mp_log_potential(z, c_p)


def delta_p(eigs: EigenSample, z: float) -> float:
    """Centered log determinant sum(ln(z - lam_j)) - p * integral.

    The sum runs over all p eigenvalues, zeros included, and the integral is
    the Marchenko-Pastur log potential at ratio c_p, whose atom at zero
    matches the implicit zeros. Requires real z to the right of the spectrum.
    """
    z = float(z)
    lam1 = float(eigs.lam[0]) if eigs.m else 0.0
    if not z > lam1:
        raise DomainError("delta_p needs z > largest eigenvalue")
    total = float(np.log(z - eigs.lam).sum())
    total += (eigs.p - eigs.m) * math.log(z)
    return total - eigs.p * _mp_potential(z, eigs.c_p)
