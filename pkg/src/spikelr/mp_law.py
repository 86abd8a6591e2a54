"""Marchenko-Pastur law and the saddle-point geometry built on top of it.

Everything in this module is deterministic closed-form math for the limiting
spectral distribution F_c of sample covariance eigenvalues when p/n -> c:
density and point mass, Stieltjes transform with derivatives, the log
potential integral(ln(z - lambda) dF_c), and the saddle point z0(h) of the
Laplace phase

    f(z) = -(1/2) * ((h/(1+h)) z - c * integral(ln(z - lambda) dF_c))

used by the likelihood-ratio asymptotics. The spike strength h is only
"in regime" for 0 < h < sqrt(c); a configurable guard band keeps callers
away from the sqrt(c) boundary where the saddle collides with the bulk edge.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .errors import DomainError, QuadratureError, RegimeError

GUARD_EPS = 0.05

_POTENTIAL_TOL = 1e-10
_POTENTIAL_NODES = 200
_POTENTIAL_MAX_NODES = 12800


def mp_support(c_p: float) -> tuple[float, float]:
    """Endpoints (1 -+ sqrt(c))^2 of the continuous bulk."""
    _check_c(c_p)
    sc = math.sqrt(c_p)
    return (1.0 - sc) ** 2, (1.0 + sc) ** 2


def mp_mass_at_zero(c_p: float) -> float:
    """Point mass max(0, 1 - 1/c) that appears once p exceeds n."""
    _check_c(c_p)
    return max(0.0, 1.0 - 1.0 / c_p)


def mp_density(x, c_p: float):
    """Bulk density sqrt((b-x)(x-a)) / (2 pi c x) on (a, b), zero outside.

    Accepts scalars or arrays. The total continuous mass is min(1, 1/c);
    the remainder sits in the atom at zero reported by mp_mass_at_zero.
    """
    _check_c(c_p)
    x = np.asarray(x, dtype=float)
    if not np.all(np.isfinite(x)):
        raise DomainError("density argument must be finite")
    a, b = mp_support(c_p)
    inside = (x > a) & (x < b)
    out = np.zeros_like(x)
    xi = x[inside]
    out[inside] = np.sqrt((b - xi) * (xi - a)) / (2.0 * np.pi * c_p * xi)
    if a == 0.0:
        # c = 1: the density integrably diverges at the origin
        out[x == 0.0] = np.inf
    return out if out.ndim else float(out)


def mp_cdf(x: float, c_p: float) -> float:
    """Distribution function of F_c at a real point, atom included."""
    _check_c(c_p)
    a, b = mp_support(c_p)
    atom = mp_mass_at_zero(c_p)
    if x < 0.0:
        return 0.0
    if x <= a:
        return atom
    if x >= b:
        return 1.0
    u_hi = math.asin(math.sqrt(min(1.0, max(0.0, (x - a) / (b - a)))))
    nodes = _POTENTIAL_NODES
    prev = None
    while nodes <= _POTENTIAL_MAX_NODES:
        _, dw = _density_quad_rule(c_p, nodes, u_hi)
        val = atom + float(np.sum(dw))
        if prev is not None and abs(val - prev) < _POTENTIAL_TOL:
            return val
        prev = val
        nodes *= 2
    return prev


def mp_stieltjes(z: complex, c_p: float) -> complex:
    """Stieltjes transform m(z) = integral dF_c(lambda) / (lambda - z).

    Closed form (-z - c + 1 + sqrt((z-c-1)^2 - 4c)) / (2cz) with the branch
    of the square root matching the signs of z - c - 1, which selects the
    solution of the quadratic c z m^2 + (z + c - 1) m + 1 = 0 that decays
    like -1/z at infinity. Defined off the support and away from zero.
    """
    _check_c(c_p)
    z = complex(z)
    _check_off_support(z, c_p)
    w = _branch_sqrt(z, c_p)
    return (-z - c_p + 1.0 + w) / (2.0 * c_p * z)


def mp_stieltjes_derivatives(z: complex, c_p: float) -> tuple[complex, complex, complex, complex]:
    """(m, m', m'', m''') at z, by analytic differentiation of the closed form."""
    _check_c(c_p)
    z = complex(z)
    _check_off_support(z, c_p)
    c = c_p
    u = z - c - 1.0
    w = _branch_sqrt(z, c_p)
    # w^2 = u^2 - 4c, so w' = u/w, w'' = -4c/w^3, w''' = 12 c u / w^5
    wp = u / w
    wpp = -4.0 * c / w ** 3
    wppp = 12.0 * c * u / w ** 5
    N = w - u - 2.0 * c
    Np, Npp, Nppp = wp - 1.0, wpp, wppp
    m = N / (2.0 * c * z)
    m1 = (Np * z - N) / (2.0 * c * z ** 2)
    A2 = Npp * z ** 2 - 2.0 * Np * z + 2.0 * N
    m2 = A2 / (2.0 * c * z ** 3)
    m3 = (Nppp * z ** 3 - 3.0 * A2) / (2.0 * c * z ** 4)
    return m, m1, m2, m3


def mp_log_potential(z, c_p: float, tol: float = _POTENTIAL_TOL):
    """integral(ln(z - lambda) dF_c(lambda)), principal logs, atom included.

    Gauss-Legendre after lambda = (a+b)/2 + (b-a)/2 sin(t), which absorbs the
    square-root edge vanishing of the density and leaves a smooth integrand.
    Nodes double from 200 until the result moves by less than tol.
    Accepts scalar or array z lying off [a, b] (complex allowed).
    """
    _check_c(c_p)
    z = np.asarray(z, dtype=complex)
    a, b = mp_support(c_p)
    atom = mp_mass_at_zero(c_p)
    nodes = _POTENTIAL_NODES
    prev = None
    while nodes <= _POTENTIAL_MAX_NODES:
        lam, dw = _density_quad_rule(c_p, nodes)
        val = np.log(z[..., None] - lam) @ dw
        if atom > 0.0:
            val = val + atom * np.log(z)
        if prev is not None:
            err = np.max(np.abs(val - prev)) / max(1.0, float(np.max(np.abs(val))))
            if err < tol:
                break
        prev = val
        nodes *= 2
    else:
        raise QuadratureError("log potential did not converge",
                              {"nodes": nodes, "last_change": err})
    out = val if val.ndim else complex(val)
    if np.asarray(z).ndim == 0 and abs(complex(np.asarray(z)).imag) == 0.0:
        real_z = complex(np.asarray(z)).real
        if real_z > b:
            return float(np.real(out))
    return out


@dataclass(frozen=True)
class SaddleData:
    """Saddle point of the Laplace phase f for an in-regime spike strength.

    a0_magnitude is the leading steepest-descent coefficient divided by
    g(z0) and by the unit descent direction: |a0 / g0| = (1+h) sqrt(c-h^2) / h.
    """
    z0: float
    f0: float
    f2: float
    a0_magnitude: float


def saddle_point(h: float, c_p: float, guard_eps: float = GUARD_EPS) -> SaddleData:
    """Solve h/(1+h) + c * m(z0) = 0: z0 = (1+h)(c+h)/h, with closed-form
    phase value f0 and curvature f2 = -h^2 / (4 (1+h)^2 (c - h^2)).

    Raises RegimeError unless 0 < h <= (1 - guard_eps) * sqrt(c).
    """
    _check_c(c_p)
    require_in_regime(h, c_p, guard_eps)
    c = c_p
    z0 = (1.0 + h) * (c + h) / h
    f0 = -0.5 * (c + (1.0 - c) * math.log1p(h) - c * math.log(c / h))
    f2 = -h ** 2 / (4.0 * (1.0 + h) ** 2 * (c - h ** 2))
    a0 = (1.0 + h) * math.sqrt(c - h ** 2) / h
    return SaddleData(z0=z0, f0=f0, f2=f2, a0_magnitude=a0)


def f_value(z, h: float, c_p: float, tol: float = _POTENTIAL_TOL):
    """The Laplace phase f(z) itself, via the quadrature log potential."""
    if h <= 0.0:
        raise DomainError("h must be positive")
    pot = mp_log_potential(z, c_p, tol=tol)
    out = -0.5 * ((h / (1.0 + h)) * np.asarray(z) - c_p * np.asarray(pot))
    if out.ndim:
        return out
    val = complex(out[()])
    return val.real if val.imag == 0.0 else val


def f0_supercritical(h: float, c_p: float) -> float:
    """Value of f at its constrained minimizer when h > sqrt(c), where the
    saddle leaves the admissible region: the phase sticks to the edge and

        f0 = -(1/2) (h + c + (1-c) ln(c+h) - c/h - ln h).

    Continuous with the subcritical f0 at h = sqrt(c)."""
    _check_c(c_p)
    if h <= 0.0:
        raise DomainError("h must be positive")
    c = c_p
    return -0.5 * (h + c + (1.0 - c) * math.log(c + h) - c / h - math.log(h))


def laplace_a2(h: float, c_p: float, g0: float, g1: float, g2: float,
               guard_eps: float = GUARD_EPS) -> float:
    """Second steepest-descent coefficient for integrand g against phase f.

    With f_s = f^(s)(z0)/s! computed from the Stieltjes derivatives,

        a2 = (4 g2 - 6 f3 g1 / f2 + (15 f3^2 / (2 f2^2) - 6 f4 / f2) g0)
             / (8 |f2|^(3/2)).

    Reported, like SaddleData.a0_magnitude, as a real coefficient relative to
    the descent direction at the saddle; in the real-valued expansion of the
    likelihood ratio the n^(-3/2) term carries the opposite sign to the
    leading n^(-1/2) term (the direction factor cubes to -1 times itself).
    """
    sd = saddle_point(h, c_p, guard_eps)
    _, m1, m2, m3 = mp_stieltjes_derivatives(sd.z0, c_p)
    # f'(z) = -(1/2)(h/(1+h) + c m(z)), so f^(s) = -(c/2) m^(s-1) for s >= 2
    f2 = -c_p * m1.real / 4.0
    f3 = -c_p * m2.real / 12.0
    f4 = -c_p * m3.real / 48.0
    brace = 4.0 * g2 - 6.0 * f3 * g1 / f2 + (15.0 * f3 ** 2 / (2.0 * f2 ** 2)
                                             - 6.0 * f4 / f2) * g0
    return brace / (8.0 * abs(f2) ** 1.5)


def require_in_regime(h: float, c_p: float, guard_eps: float = GUARD_EPS) -> None:
    if not (0.0 <= guard_eps < 1.0):
        raise DomainError("guard_eps must lie in [0, 1)")
    if h <= 0.0 or not math.isfinite(h):
        raise RegimeError(f"spike strength h={h} must be positive")
    cap = (1.0 - guard_eps) * math.sqrt(c_p)
    if h > cap:
        raise RegimeError(
            f"h={h:g} exceeds the in-regime cap (1-{guard_eps:g})*sqrt(c)={cap:g}")


def guard_theta_cap(c_p: float, guard_eps: float = GUARD_EPS) -> float:
    """Largest theta whose h stays inside the guard band.

    h = sqrt(c (1 - e^{-theta^2})) <= (1-eps) sqrt(c) iff
    theta^2 <= -ln(2 eps - eps^2)."""
    _check_c(c_p)
    if not (0.0 < guard_eps < 1.0):
        raise DomainError("guard_eps must lie in (0, 1)")
    return math.sqrt(-math.log(2.0 * guard_eps - guard_eps ** 2))


# ---------------------------------------------------------------------------

def _check_c(c_p: float) -> None:
    if not (isinstance(c_p, (int, float)) and math.isfinite(c_p)) or c_p <= 0.0:
        raise DomainError(f"aspect ratio c={c_p!r} must be a positive finite number")


def _check_off_support(z: complex, c_p: float) -> None:
    if z == 0.0:
        raise DomainError("z = 0 is a pole of the Stieltjes transform")
    if z.imag == 0.0:
        a, b = mp_support(c_p)
        if a <= z.real <= b:
            raise DomainError(f"z={z.real:g} lies on the support [{a:g}, {b:g}]")


def _branch_sqrt(z: complex, c_p: float) -> complex:
    """sqrt((z-c-1)^2 - 4c) with real and imaginary parts matching z-c-1."""
    u = z - c_p - 1.0
    w = np.sqrt(complex(u * u - 4.0 * c_p))
    if u.real != 0.0:
        if w.real * u.real < 0.0:
            w = -w
    elif w.imag * u.imag < 0.0:
        w = -w
    return w


@lru_cache(maxsize=16)
def _gl_nodes(n: int) -> tuple[np.ndarray, np.ndarray]:
    # scipy's Newton-based rule generator; numpy's dense eigensolve is far too
    # slow once node counts reach the thousands
    from scipy.special import roots_legendre
    return roots_legendre(n)


@lru_cache(maxsize=64)
def _density_quad_rule(c_p: float, nodes: int, u_hi: float = math.pi / 2.0
                       ) -> tuple[np.ndarray, np.ndarray]:
    """Eigenvalue nodes and density-weighted quadrature weights on the bulk.

    Substituting lambda = a + (b-a) sin^2(u) on u in [0, pi/2] absorbs the
    square-root edge factors; the half-angle form stays numerically stable at
    both edges (the naive midpoint+sin form cancels catastrophically at the
    lower edge when c = 1). Truncating at u_hi < pi/2 integrates the density
    only up to lambda = a + (b-a) sin^2(u_hi).
    """
    a, b = mp_support(c_p)
    t, w = _gl_nodes(nodes)
    u = (t + 1.0) * (u_hi / 2.0)
    s2 = np.sin(u) ** 2
    c2 = np.cos(u) ** 2
    lam = a + (b - a) * s2
    # psi(lam) dlam = (b-a)^2 sin^2 u cos^2 u / (2 pi c lam) * 2 du
    dens = (b - a) ** 2 * s2 * c2 / (np.pi * c_p * lam)
    return lam, dens * w * (u_hi / 2.0)
