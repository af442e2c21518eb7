"""Quadrature and root-bracketing helpers shared across modules.

Adaptive integration is delegated to QUADPACK through scipy.integrate.quad
(absolute tolerance 1e-11, relative 1e-9 by default); infinite ranges are
passed straight through so the transformed Gauss-Kronrod rule plus epsilon
extrapolation handles heavy polynomial tails, which a fixed quantile clip
cannot.
"""

from __future__ import annotations

from collections.abc import Callable, Sequence

import numpy as np
from scipy.integrate import quad

from .errors import DivergentTail

EPSABS = 1e-11
EPSREL = 1e-9


def integrate(
    fn: Callable[[float], float],
    lo: float,
    hi: float,
    points: Sequence[float] | None = None,
) -> tuple[float, float]:
    """Integrate fn over [lo, hi] adaptively; returns (value, error estimate).

    `points` marks known interior breakpoints (kinks); they are ignored when
    either limit is infinite, where QUADPACK does not accept them.
    """
    finite = np.isfinite(lo) and np.isfinite(hi)
    pts = None
    if points is not None and finite:
        pts = [p for p in points if lo < p < hi]
        pts = pts or None
    with np.errstate(all="ignore"):
        val, err, *rest = quad(
            fn, lo, hi, epsabs=EPSABS, epsrel=EPSREL, limit=400,
            points=pts, full_output=1,
        )
    if not np.isfinite(val):
        raise DivergentTail(f"integral over [{lo}, {hi}] did not converge")
    return float(val), float(err)


def bisect_increasing(
    fn: Callable[[np.ndarray], np.ndarray],
    targets: np.ndarray,
    lo: float,
    hi: float,
    iters: int = 72,
) -> np.ndarray:
    """Vectorized bisection: solve fn(x) = t for each t in `targets`.

    fn must be nondecreasing. lo/hi may be +-inf; finite brackets are then
    grown geometrically until they cover all targets. 72 halvings shrink the
    bracket below 1e-21 of its initial width, far past the 1e-12
    in-probability tolerance used for inverse-CDF sampling.
    """
    targets = np.asarray(targets, dtype=float)
    tmin = float(np.min(targets))
    tmax = float(np.max(targets))
    a = lo if np.isfinite(lo) else -1.0
    b = hi if np.isfinite(hi) else 1.0
    if not np.isfinite(lo):
        for _ in range(2100):
            if fn(np.array([a]))[0] <= tmin:
                break
            a = a * 2.0 - 1.0
        else:  # pragma: no cover
            raise DivergentTail("could not bracket quantile from below")
    if not np.isfinite(hi):
        for _ in range(2100):
            if fn(np.array([b]))[0] >= tmax:
                break
            b = b * 2.0 + 1.0
        else:  # pragma: no cover
            raise DivergentTail("could not bracket quantile from above")
    los = np.full_like(targets, a)
    his = np.full_like(targets, b)
    for _ in range(iters):
        mid = 0.5 * (los + his)
        below = fn(mid) < targets
        los = np.where(below, mid, los)
        his = np.where(below, his, mid)
    return 0.5 * (los + his)

