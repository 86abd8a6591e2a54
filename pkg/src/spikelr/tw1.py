"""Tracy-Widom distribution of the first kind (beta = 1).

CDF and quantile function by monotone cubic interpolation of an embedded
513-node table; scripts/gen_tw1_table.py documents how the table was built
and regenerates it. Outside the tabulated range the mass is below 1e-8, so
the CDF clamps to {0, 1} and the quantile clamps to the table edges.
"""
from __future__ import annotations

import numpy as np
from scipy.interpolate import PchipInterpolator

from ._tw1_table import CDF_VALUES, POINTS, S_LEFT, S_RIGHT
from .errors import DomainError

_S = np.linspace(S_LEFT, S_RIGHT, POINTS)
_F = np.asarray(CDF_VALUES)
_cdf = PchipInterpolator(_S, _F, extrapolate=False)
_quantile = PchipInterpolator(_F, _S, extrapolate=False)


def tw1_cdf(x):
    """P(TW1 <= x), vectorized."""
    x = np.asarray(x, dtype=float)
    out = _cdf(np.clip(x, S_LEFT, S_RIGHT))
    out = np.where(x < S_LEFT, 0.0, out)
    out = np.where(x > S_RIGHT, 1.0, out)
    return float(out) if out.ndim == 0 else out


def tw1_quantile(q: float) -> float:
    """Inverse CDF at q in (0, 1)."""
    q = float(q)
    if not 0.0 < q < 1.0:
        raise DomainError("quantile level must lie strictly in (0, 1)")
    if q <= _F[0]:
        return float(S_LEFT)
    if q >= _F[-1]:
        return float(S_RIGHT)
    return float(_quantile(q))
