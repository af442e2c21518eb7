"""Distribution abstraction: a capability bundle for one continuous or
integer-lattice law.

A Distribution carries vectorized density/pmf, CDF and survival callables
plus support metadata and whatever closed-form moments are known. The
survival convention is P(X > x) in both kinds, so cdf + sf = 1 pointwise.
Instances are immutable after construction and safe to evaluate from
concurrent workers; the only mutable state is an internal lattice table
cache built lazily on first use.
"""

from __future__ import annotations

import math
from collections.abc import Callable
from dataclasses import dataclass, field

import numpy as np

from .errors import SupportTooLarge, UnsupportedKind
from .numerics import bisect_increasing

CONTINUOUS = "continuous-interval"
LATTICE = "integer-lattice"


@dataclass(frozen=True)
class Support:
    """Support interval; lattice supports live on the integers with unit step."""

    lower: float
    upper: float
    kind: str  # CONTINUOUS or LATTICE

    def __post_init__(self):
        if not self.lower < self.upper:
            raise ValueError(f"support lower {self.lower} must be < upper {self.upper}")
        if self.kind not in (CONTINUOUS, LATTICE):
            raise ValueError(f"unknown support kind {self.kind!r}")
        if self.kind == LATTICE:
            for v in (self.lower, self.upper):
                if np.isfinite(v) and v != int(v):
                    raise ValueError(f"lattice endpoint {v} is not an integer")

    @property
    def is_lattice(self) -> bool:
        return self.kind == LATTICE

    def contains(self, x: float) -> bool:
        if not self.lower <= x <= self.upper:
            return False
        if self.is_lattice and np.isfinite(x):
            return x == round(x)
        return True


@dataclass(frozen=True)
class ClosedForms:
    """Closed-form moments, populated only where a source formula exists."""

    mean: float | None = None
    sd: float | None = None
    gmd: float | None = None


@dataclass(eq=False)
class Distribution:
    """One law, bundled as callables.

    pdf is a density for continuous supports and a pmf (evaluated at
    integers, zero elsewhere) for lattice supports. cdf(x) = P(X <= x) and
    sf(x) = P(X > x). All three accept and return numpy arrays or floats.
    """

    support: Support
    pdf: Callable[[np.ndarray], np.ndarray]
    cdf: Callable[[np.ndarray], np.ndarray]
    sf: Callable[[np.ndarray], np.ndarray]
    label: str
    logpdf: Callable[[np.ndarray], np.ndarray] | None = None
    ppf: Callable[[np.ndarray], np.ndarray] | None = None
    closed: ClosedForms = field(default_factory=ClosedForms)
    meta: dict = field(default_factory=dict)
    # lattice laws with polynomial tails supply analytic corrections for
    # sums truncated at M: (sum_{x>M} x f, sum_{x>M} x^2 f, sum_{x>M} F S)
    tail_sums: Callable[[int], tuple[float, float, float]] | None = None
    _cache: dict = field(default_factory=dict, repr=False)

    @property
    def is_lattice(self) -> bool:
        return self.support.is_lattice

    def log_pdf(self, x):
        """log density/pmf; falls back to log(pdf) with an underflow floor."""
        if self.logpdf is not None:
            return self.logpdf(x)
        with np.errstate(divide="ignore"):
            return np.log(np.maximum(self.pdf(x), 1e-320))

    def quantile(self, p):
        """Smallest x with cdf(x) >= p; closed form when known, bisection else.

        Bisection stops below 1e-12 in probability for the continuous laws
        in the registry. Lattice quantiles come from the enumerated CDF
        table and are exact.
        """
        p = np.asarray(p, dtype=float)
        scalar = p.ndim == 0
        p1 = np.atleast_1d(p)
        if self.ppf is not None:
            out = np.asarray(self.ppf(p1), dtype=float)
        elif self.is_lattice:
            pts, _, cum = self._lattice_table()
            idx = np.searchsorted(cum, p1 * (1 - 1e-15), side="left")
            idx = np.minimum(idx, len(pts) - 1)
            out = pts[idx].astype(float)
        else:
            out = bisect_increasing(self.cdf, p1, self.support.lower, self.support.upper)
        return float(out[0]) if scalar else out

    # -- lattice enumeration ------------------------------------------------

    def lattice_points(self, mass_cut: float = 1e-12, limit: int = 10**6) -> np.ndarray:
        """Integer support points, truncated once the omitted tail mass < mass_cut.

        Enumerates upward from a finite lower endpoint or downward from a
        finite upper endpoint; doubly infinite lattice supports are not used
        by any registry family.
        """
        if not self.is_lattice:
            raise UnsupportedKind("lattice_points requires an integer-lattice law")
        lo, hi = self.support.lower, self.support.upper
        if np.isfinite(lo) and np.isfinite(hi):
            pts = np.arange(int(lo), int(hi) + 1)
            if len(pts) > limit:
                raise SupportTooLarge(f"{len(pts)} lattice points exceeds limit {limit}")
            return pts
        if np.isfinite(lo):
            last = self._grow_tail(int(lo), +1, mass_cut, limit)
            return np.arange(int(lo), last + 1)
        if np.isfinite(hi):
            first = self._grow_tail(int(hi), -1, mass_cut, limit)
            return np.arange(first, int(hi) + 1)
        raise UnsupportedKind("doubly infinite lattice support is not enumerable")

    def _grow_tail(self, start: int, direction: int, mass_cut: float, limit: int) -> int:
        # find the nearest point beyond which the omitted mass is < mass_cut
        def omitted(k: int) -> float:
            if direction > 0:
                return float(self.sf(k))
            return float(self.cdf(k - 1))

        step = 1
        k = start
        while omitted(k) >= mass_cut:
            step = min(step * 2, limit)
            k += direction * step
            if abs(k - start) > limit:
                raise SupportTooLarge(
                    f"lattice support exceeds {limit} points at mass cut {mass_cut}"
                )
        # binary search back to the smallest such k
        lo, hi = (start, k) if direction > 0 else (k, start)
        while lo < hi:
            mid = (lo + hi) // 2 if direction > 0 else (lo + hi + 1) // 2
            if direction > 0:
                if omitted(mid) < mass_cut:
                    hi = mid
                else:
                    lo = mid + 1
            else:
                if omitted(mid) < mass_cut:
                    lo = mid
                else:
                    hi = mid - 1
        return lo

    def _lattice_table(self, mass_cut: float = 1e-14):
        """(points, pmf, cdf-values) cached for sampling and quantiles."""
        key = ("table", mass_cut)
        if key not in self._cache:
            pts = self.lattice_points(mass_cut)
            f = np.asarray(self.pdf(pts), dtype=float)
            cum = np.asarray(self.cdf(pts), dtype=float)
            self._cache[key] = (pts, f, cum)
        return self._cache[key]

    # -- probe grids ---------------------------------------------------------

    def probe_grid(self, n: int, clip: float = 1e-6) -> np.ndarray:
        """Quantile-spaced grid of n points over [q(clip), q(1-clip)].

        For lattice laws this instead returns every support point carrying
        mass >= 1e-12.
        """
        if self.is_lattice:
            pts = self.lattice_points(mass_cut=1e-12)
            mass = np.asarray(self.pdf(pts), dtype=float)
            pts = pts[mass >= 1e-12]
            if len(pts) == 0:
                raise UnsupportedKind("no lattice point carries mass >= 1e-12")
            return pts.astype(float)
        ps = np.linspace(clip, 1.0 - clip, n)
        xs = np.asarray(self.quantile(ps), dtype=float)
        return np.maximum.accumulate(xs)

    def iqr(self) -> float:
        q1, q3 = self.quantile(np.array([0.25, 0.75]))
        return float(q3 - q1)

    def mass_above(self, u: float) -> float:
        return float(self.sf(u))

    def mass_below_eq(self, u: float) -> float:
        if self.is_lattice:
            return float(self.cdf(math.floor(u)))
        return float(self.cdf(u))
