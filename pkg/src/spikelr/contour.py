"""Exact finite-sample log likelihood ratios by contour quadrature.

The likelihood ratio between a rank-one spike of strength h and sphericity,
as a function of the sample covariance eigenvalues lambda (known scale) or
of mu = lambda / trace (unknown scale), reduces to a single contour integral

    const(h, p, n) * (1 / 2 pi i) * integral of  e^{phase(z)} dz

around the spectrum, where the phase carries exp-linear (lambda kind) or
power (mu kind) growth against the square-root factors prod (z-lam_j)^{-1/2}.
This module evaluates those integrals on an open staple contour: a vertical
crossing right of the spectrum plus two horizontal tails that run left until
the integrand has decayed to nothing. Both regimes of h are handled, since
only enclosure of the eigenvalues matters for exactness.

Everything is done on the log scale with one max subtraction per contour,
so dimensions in the hundreds neither overflow nor lose the value.

The companion small-instance oracles (Monte Carlo average over the sphere
and the confluent Lauricella series) are here too; they exist to validate
the quadrature on tiny spectra where all three representations converge.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable, Literal

import numpy as np
from scipy.special import gammaln

from .errors import ContourGeometryError, DomainError, QuadratureError
from .mp_law import GUARD_EPS, _gl_nodes, saddle_point
from .sampler import EigenSample
from .util import rng_stream

Kind = Literal["lambda", "mu"]

# crossing and tail panels shrink geometrically toward the real axis and the
# crossing respectively, where the integrand concentrates
_PANEL_FRACTIONS = np.array([1.0 / 64.0, 1.0 / 16.0, 1.0 / 4.0, 1.0])
_DECAY_LOG10 = 16.0
_MAX_DOUBLINGS = 6
_IMAG_RESIDUE_TOL = 1e-8


@dataclass(frozen=True)
class ContourSpec:
    """Geometry of one staple contour.

    z0 is the real-axis crossing and must clear the largest eigenvalue.
    left_truncation = None lets the evaluator find the cut point where the
    integrand has decayed by _DECAY_LOG10 orders of magnitude.
    """

    z0: float
    height: float
    left_truncation: float | None = None
    nodes_per_segment: int = 24
    refinement_tol: float = 1e-10

    def __post_init__(self) -> None:
        if not self.height > 0.0:
            raise ContourGeometryError("contour height must be positive")
        if self.left_truncation is not None and self.left_truncation >= 0.0:
            raise ContourGeometryError(
                "left truncation must sit left of the origin so the contour "
                "encloses the whole spectrum, zeros included")
        if self.nodes_per_segment < 2:
            raise ContourGeometryError("need at least 2 nodes per segment")
        if not self.refinement_tol > 0.0:
            raise ContourGeometryError("refinement tolerance must be positive")


@dataclass(frozen=True)
class LogLrExact:
    """ln L(h; lambda) or ln L(h; mu) with its quadrature diagnostics."""

    value: float
    h: float
    kind: Kind
    quadrature_error_estimate: float


def _check_kind(kind: str) -> Kind:
    if kind not in ("lambda", "mu"):
        raise DomainError(f"kind must be 'lambda' or 'mu', got {kind!r}")
    return kind  # type: ignore[return-value]


def _panel(a: float, b: float, n: int) -> tuple[np.ndarray, np.ndarray]:
    x, w = _gl_nodes(n)
    mid, half = 0.5 * (a + b), 0.5 * (b - a)
    return mid + half * x, half * w


def _staple_nodes(x0: float, height: float, x_left: float,
                  n: int) -> tuple[np.ndarray, np.ndarray]:
    """Complex nodes and dz-folded weights for the open staple.

    Orientation: in along the bottom edge, up the crossing, out along the
    top edge. Conjugate node pairs carry weights that cancel the real part
    of the integral identically, which is the built-in sanity diagnostic.
    """
    zs, ws = [], []
    breaks = np.concatenate([-height * _PANEL_FRACTIONS[::-1], [0.0],
                             height * _PANEL_FRACTIONS])
    for a, b in zip(breaks[:-1], breaks[1:]):
        t, w = _panel(a, b, n)
        zs.append(x0 + 1j * t)
        ws.append(1j * w)
    length = x0 - x_left
    tail_breaks = x0 - length * np.concatenate([[0.0], _PANEL_FRACTIONS])
    for a, b in zip(tail_breaks[:-1], tail_breaks[1:]):
        x, w = _panel(a, b, n)  # a > b, so w is negative: x0 -> x_left
        zs.append(x + 1j * height)
        ws.append(w)
        zs.append(x - 1j * height)
        ws.append(-w)
    return np.concatenate(zs), np.concatenate(ws)


def _find_truncation(logf: Callable[[np.ndarray], np.ndarray], x0: float,
                     height: float) -> float:
    """Leftmost Re z worth integrating: where the top edge magnitude has
    fallen _DECAY_LOG10 orders below the crossing peak."""
    peak = float(logf(np.array([x0 + 0j]))[0].real)
    thresh = peak - _DECAY_LOG10 * math.log(10.0) - 5.0

    def top(x: float) -> float:
        return float(logf(np.array([x + 1j * height]))[0].real)

    span = max(1.0, abs(x0))
    while top(x0 - span) > thresh:
        span *= 2.0
        if span > 1e12:
            raise QuadratureError(
                "contour integrand does not decay along the tails",
                {"x0": x0, "height": height, "threshold": thresh})
    lo, hi = x0 - span, x0
    for _ in range(80):
        mid = 0.5 * (lo + hi)
        if top(mid) > thresh:
            hi = mid
        else:
            lo = mid
    return min(lo, -0.1 * max(x0, 1.0))


def _log_contour_integral(logf: Callable[[np.ndarray], np.ndarray],
                          spec: ContourSpec) -> tuple[float, float]:
    """ln of (1 / 2 pi i) * integral of e^{logf(z)} dz over the staple.

    The integral must come out real positive. Returns (value, error
    estimate), the latter being the change under the final node doubling.
    """
    x_left = spec.left_truncation
    if x_left is None:
        x_left = _find_truncation(logf, spec.z0, spec.height)
    last = None
    change = math.inf
    n = spec.nodes_per_segment
    for _ in range(_MAX_DOUBLINGS + 1):
        z, w = _staple_nodes(spec.z0, spec.height, x_left, n)
        q = logf(z)
        m = float(np.max(q.real))
        acc = np.sum(w * np.exp(q - m))
        if acc.imag <= 0.0:
            raise QuadratureError(
                "contour integral is not positive, geometry is suspect",
                {"imag_sum": float(acc.imag), "nodes_per_segment": n})
        value = m + math.log(acc.imag / (2.0 * math.pi))
        if last is not None:
            change = abs(value - last)
            if change < spec.refinement_tol * max(1.0, abs(value)):
                residue = abs(acc.real) / abs(acc)
                if residue > _IMAG_RESIDUE_TOL:
                    raise QuadratureError(
                        "contour integral has a non-cancelling real part",
                        {"residue": residue, "nodes_per_segment": n})
                return value, change
        last = value
        n *= 2
    raise QuadratureError(
        "contour quadrature did not stabilize under node doubling",
        {"last_value": last, "last_change": change,
         "nodes_per_segment": n // 2})


# ---------------------------------------------------------------------------
# small-instance spherical integrals (validation oracles)

def spherical_integral_contour(d: np.ndarray, nodes_per_segment: int = 24,
                               tol: float = 1e-12) -> float:
    """Average of exp(x' D x) over the unit sphere, D = diag(d), by contour.

    Evaluates Gamma(r/2) / (2 pi i) times the loop integral of
    e^s prod(s - d_j)^{-1/2} around {0, d_1, ..., d_r}.
    """
    d = np.atleast_1d(np.asarray(d, dtype=float))
    r = len(d)
    if r < 1:
        raise DomainError("need at least one diagonal entry")
    x0 = float(max(1.0, 1.5 * d.max() + 0.5))
    height = 3.0 * x0

    def logf(z: np.ndarray) -> np.ndarray:
        return z - 0.5 * np.sum(np.log(z[:, None] - d[None, :]), axis=1)

    spec = ContourSpec(z0=x0, height=height,
                       nodes_per_segment=nodes_per_segment,
                       refinement_tol=tol)
    value, _ = _log_contour_integral(logf, spec)
    return math.exp(gammaln(r / 2.0) + value)


def spherical_integral_mc(d: np.ndarray, draws: int,
                          seed: int = 0) -> tuple[float, float]:
    """Monte Carlo mean of exp(sum u_j d_j), u a squared-normal Dirichlet
    weight vector (the sphere average in disguise). Returns (estimate, se)."""
    d = np.atleast_1d(np.asarray(d, dtype=float))
    if draws < 1000:
        raise DomainError("draws must be at least 1000")
    rng = rng_stream(seed)
    total = 0.0
    total_sq = 0.0
    done = 0
    while done < draws:
        block = min(1_000_000, draws - done)
        z = rng.standard_normal((block, len(d)))
        g = z * z
        u = g / g.sum(axis=1, keepdims=True)
        vals = np.exp(u @ d)
        total += float(vals.sum())
        total_sq += float((vals * vals).sum())
        done += block
    mean = total / done
    var = max(total_sq / done - mean * mean, 0.0)
    return mean, math.sqrt(var / done)


def lauricella_series(d: np.ndarray, max_order: int = 40) -> float:
    """Truncated confluent Lauricella sum for the sphere average.

    Sum over multi-indices m of prod (1/2)_{m_j} d_j^{m_j} / m_j! divided
    by (r/2)_{|m|}, truncated at total degree max_order. Grouping by total
    degree turns the multi-index sum into one convolution per coordinate.
    """
    d = np.atleast_1d(np.asarray(d, dtype=float))
    r = len(d)
    if r < 1:
        raise DomainError("need at least one coordinate")
    if np.max(np.abs(d)) > 1.0:
        raise DomainError("series oracle is only trusted for |d_j| <= 1")
    if max_order < 0 or max_order > 60:
        raise DomainError("max_order must lie in [0, 60] for stable floats")

    def coord_terms(x: float) -> np.ndarray:
        # t_k = (1/2)_k x^k / k!
        t = np.empty(max_order + 1)
        t[0] = 1.0
        for k in range(1, max_order + 1):
            t[k] = t[k - 1] * (0.5 + (k - 1)) * x / k
        return t

    by_degree = coord_terms(d[0])
    for x in d[1:]:
        by_degree = np.convolve(by_degree, coord_terms(x))[:max_order + 1]
    # divide degree K by (r/2)_K
    poch = 1.0
    total = by_degree[0]
    for k in range(1, max_order + 1):
        poch *= (r / 2.0 + (k - 1))
        total += by_degree[k] / poch
    return float(total)


# ---------------------------------------------------------------------------
# the exact likelihood ratios

def _normalized_spectrum(eigs: EigenSample) -> np.ndarray:
    """Spectrum rescaled to trace p, rebuilt from mu alone.

    mu is computed before any scale touches the eigenvalues, so everything
    the mu-kind ratio sees is bitwise identical across input scales.
    """
    remainder = max(1.0 - float(eigs.mu.sum()), 0.0)
    return eigs.p * np.concatenate([eigs.mu, [remainder]])


def default_contour(eigs: EigenSample, h: float, kind: Kind) -> ContourSpec:
    """Crossing at the phase saddle when that is admissible, else just right
    of the spectrum; the mu kind additionally stays left of its singularity.

    Geometry lives on the same scale the integrand does: for the mu kind
    that is the spectrum normalized to trace p.
    """
    kind = _check_kind(kind)
    lam1 = float(eigs.lam[0])
    if kind == "mu":
        lam1 = float(_normalized_spectrum(eigs)[0])
    c_p = eigs.c_p
    x0 = 1.1 * lam1
    if 0.0 < h < (1.0 - GUARD_EPS) * math.sqrt(c_p):
        x0 = max(x0, saddle_point(h, c_p).z0)
    if kind == "mu":
        # singularity of (1 - a z / p)^{-Q} sits at p (1+h) / h > p > lam1
        bound = float(eigs.p) * (1.0 + h) / h
        if x0 >= bound:
            x0 = 0.5 * (lam1 + bound)
    return ContourSpec(z0=x0, height=3.0 * x0)


def log_lr_exact(eigs: EigenSample, h: float, kind: Kind = "lambda",
                 contour: ContourSpec | None = None) -> LogLrExact:
    """Exact finite-sample ln L(h; lambda) or ln L(h; mu).

    The mu kind depends on the data only through mu, so the spectrum is
    normalized to trace p before integrating; this also makes the result
    exactly invariant to the scale of the input eigenvalues.
    """
    kind = _check_kind(kind)
    if not h > 0.0:
        raise DomainError("exact likelihood ratio needs h > 0")
    p, n, m = eigs.p, eigs.n, eigs.m
    zeros = p - m
    a = h / (1.0 + h)

    if kind == "lambda":
        lam = eigs.lam
        log_const = (gammaln(p / 2.0) - (p - 2) / 2.0 * math.log(h)
                     + (p - n - 2) / 2.0 * math.log1p(h)
                     + (p - 2) / 2.0 * math.log(2.0 / n))

        def logf(z: np.ndarray) -> np.ndarray:
            out = (n / 2.0) * a * z
            out -= 0.5 * np.sum(np.log(z[:, None] - lam[None, :]), axis=1)
            if zeros:
                out -= 0.5 * zeros * np.log(z)
            return out
    else:
        trace = float(p)  # normalized scale
        lam = _normalized_spectrum(eigs)
        exponent = (n * p - p + 2) / 2.0
        log_const = (gammaln(p / 2.0) - (p - 2) / 2.0 * math.log(h)
                     + (p - n - 2) / 2.0 * math.log1p(h)
                     + gammaln(exponent) - gammaln(n * p / 2.0)
                     + (p - 2) / 2.0 * math.log(trace))

        def logf(z: np.ndarray) -> np.ndarray:
            out = -exponent * np.log(1.0 - a * z / trace)
            out -= 0.5 * np.sum(np.log(z[:, None] - lam[None, :]), axis=1)
            if zeros:
                out -= 0.5 * zeros * np.log(z)
            return out

    spec = contour if contour is not None else default_contour(eigs, h, kind)
    lam1 = float(lam[0])
    if spec.z0 <= lam1:
        raise ContourGeometryError(
            f"contour crossing {spec.z0} does not clear the largest "
            f"eigenvalue {lam1}")
    if kind == "mu":
        # the crossing is the rightmost point of the staple
        bound = float(p) * (1.0 + h) / h
        if spec.z0 >= bound:
            raise ContourGeometryError(
                f"mu-kind contour must satisfy Re z < {bound}, "
                f"crossing is {spec.z0}")
    value, err = _log_contour_integral(logf, spec)
    return LogLrExact(value=log_const + value, h=h, kind=kind,
                      quadrature_error_estimate=err)
