"""Uniform periodic-grid quadrature over the Brillouin zone.

All integrals are BZ averages, (1/2pi)^n int_[0,2pi)^n f. On a periodic
domain the uniform n-point rule is exact for trigonometric polynomials of
degree < n and spectrally accurate for analytic integrands, which is what
makes the even-order "exact zero" results exact rather than approximate.

Refinement doubles the grid until successive averages agree to tolerance;
the inter-refinement difference is the reported error estimate. Grid sums
are accumulated in a fixed deterministic order: chunk subtotals use numpy's
pairwise reduction and the subtotals are combined with math.fsum, so results
are bit-stable run to run regardless of internal evaluation batching.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable, Sequence

import numpy as np

__all__ = [
    "QuadratureConfig",
    "QuadResult",
    "MultiQuadResult",
    "integrate_bz",
    "integrate_bz_multi",
    "integrate_kz",
    "richardson_extrapolate",
]

_TWO_PI = 2.0 * math.pi
_CHUNK = 1 << 18  # grid points evaluated per batch


@dataclass(frozen=True)
class QuadratureConfig:
    base_points: int = 64
    max_refinements: int = 6
    rel_tol: float = 1e-10
    abs_tol: float = 1e-12

    def __post_init__(self) -> None:
        if not isinstance(self.base_points, int) or self.base_points < 4:
            raise ValueError(f"base_points must be an integer >= 4, got {self.base_points!r}")
        if not isinstance(self.max_refinements, int) or self.max_refinements < 0:
            raise ValueError(f"max_refinements must be a nonnegative integer, got {self.max_refinements!r}")
        if not self.rel_tol > 0:
            raise ValueError(f"rel_tol must be positive, got {self.rel_tol!r}")
        if not self.abs_tol > 0:
            raise ValueError(f"abs_tol must be positive, got {self.abs_tol!r}")


@dataclass(frozen=True)
class QuadResult:
    """Best value with its inter-refinement error estimate.

    converged=False means the tolerance was not met within max_refinements;
    the value and estimate are still the best available and the caller
    decides what to do with them.
    """

    value: float
    error: float
    converged: bool
    points_per_axis: int


@dataclass(frozen=True)
class MultiQuadResult:
    """Vector-valued variant: all components share one grid and one verdict."""

    values: np.ndarray
    errors: np.ndarray
    converged: bool
    points_per_axis: int


def _grid_average(f: Callable[[np.ndarray], np.ndarray], ndim: int, n: int) -> np.ndarray:
    """Mean of f over the uniform tensor grid, one value per component of f."""
    if ndim == 0:
        vals = np.atleast_2d(np.asarray(f(np.zeros((1, 0))), dtype=float))
        return vals.reshape(1, -1)[0].copy()
    axis = np.arange(n, dtype=float) * (_TWO_PI / n)
    total = n**ndim
    chunk = min(total, _CHUNK)
    partials: list[np.ndarray] = []
    for start in range(0, total, chunk):
        idx = np.arange(start, min(start + chunk, total))
        pts = np.empty((idx.size, ndim))
        rem = idx
        for ax in range(ndim - 1, -1, -1):
            pts[:, ax] = axis[rem % n]
            rem = rem // n
        vals = np.asarray(f(pts), dtype=float)
        if vals.ndim == 1:
            vals = vals[:, None]
        if vals.shape[0] != idx.size:
            raise ValueError("integrand must return one value (or one row) per point")
        # extended-precision subtotal keeps power-of-two grid means of exactly
        # representable sums (constants in particular) bit-exact
        partials.append(vals.sum(axis=0, dtype=np.longdouble))
    ncomp = partials[0].size
    sums = [math.fsum(float(p[c]) for p in partials) for c in range(ncomp)]
    return np.array(sums) / total


def _refine(f: Callable[[np.ndarray], np.ndarray], ndim: int, cfg: QuadratureConfig) -> MultiQuadResult:
    n = cfg.base_points
    prev = _grid_average(f, ndim, n)
    if ndim == 0:
        return MultiQuadResult(prev, np.zeros_like(prev), True, 1)
    if cfg.max_refinements == 0:
        return MultiQuadResult(prev, np.full_like(prev, math.inf), False, n)
    for _ in range(cfg.max_refinements):
        n *= 2
        cur = _grid_average(f, ndim, n)
        delta = np.abs(cur - prev)
        tol = np.maximum(cfg.abs_tol, cfg.rel_tol * np.abs(cur))
        if np.all(delta <= tol):
            return MultiQuadResult(cur, delta, True, n)
        prev = cur
    return MultiQuadResult(cur, delta, False, n)


def integrate_bz_multi(
    f: Callable[[np.ndarray], np.ndarray], d: int, cfg: QuadratureConfig
) -> MultiQuadResult:
    """BZ average over the d-1 transverse axes of a vector-valued integrand.

    f receives an (npoints, d-1) array of momenta and returns (npoints,)
    or (npoints, ncomp). Convergence requires every component to meet the
    tolerance on the same grid.
    """
    if d not in (1, 2, 3):
        raise ValueError(f"spatial dimension d must be 1, 2, or 3, got {d!r}")
    return _refine(f, d - 1, cfg)


def integrate_bz(
    f: Callable[[np.ndarray], np.ndarray], d: int, cfg: QuadratureConfig
) -> QuadResult:
    """BZ average of a scalar integrand over the transverse zone.

    For d=1 there are no transverse axes and the result is f evaluated at the
    empty momentum vector.
    """
    r = integrate_bz_multi(f, d, cfg)
    if r.values.size != 1:
        raise ValueError("integrate_bz expects a scalar integrand; use integrate_bz_multi")
    return QuadResult(float(r.values[0]), float(r.errors[0]), r.converged, r.points_per_axis)


def integrate_kz(f: Callable[[np.ndarray], np.ndarray], cfg: QuadratureConfig) -> QuadResult:
    """Average (1/2pi) int_0^2pi f(x) dx of a 2pi-periodic integrand."""
    r = _refine(lambda pts: np.asarray(f(pts[:, 0]), dtype=float), 1, cfg)
    if r.values.size != 1:
        raise ValueError("integrate_kz expects a scalar integrand")
    return QuadResult(float(r.values[0]), float(r.errors[0]), r.converged, r.points_per_axis)


def richardson_extrapolate(values: Sequence[float], ratio: float = 2.0) -> tuple[float, float]:
    """Extrapolate a geometrically refined sequence to its limit.

    values[k] is taken at step h/ratio**k (coarsest first). The convergence
    order is estimated from the last three entries. Returns (limit, order);
    when the differences do not shrink geometrically the last value is
    returned with order nan.
    """
    v = [float(x) for x in values]
    if len(v) < 3:
        raise ValueError("need at least three values to extrapolate")
    if ratio <= 1.0:
        raise ValueError("ratio must exceed 1")
    d1 = v[-2] - v[-3]
    d2 = v[-1] - v[-2]
    if d2 == 0.0:
        return v[-1], math.inf
    q = d1 / d2
    if q <= 1.0:
        return v[-1], math.nan
    order = math.log(q) / math.log(ratio)
    return v[-1] + d2 / (q - 1.0), order
