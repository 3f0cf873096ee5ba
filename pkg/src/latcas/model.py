"""Domain types for dispersions, slab geometry, and results.

All quantities are dimensionless lattice units: energies are a*E, momenta
a*k, masses a*m. The lattice constant never appears as a runtime parameter.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

__all__ = [
    "DispersionSpec",
    "Geometry",
    "CasimirResult",
    "eval_lattice_dispersion",
    "eval_from_kernel_sum",
]


@dataclass(frozen=True)
class DispersionSpec:
    """Power-law dispersion w(k) = |k~|^s built on the nearest-neighbor kernel.

    s:  dispersion order (0 = flat band, 1 = linear, 2 = quadratic, ...)
    am: mass in lattice units; a massive branch is only defined for s=1,
        where w = sqrt(k~^2 + am^2)
    g:  branch degeneracy, a pure multiplier on all zero-point energies
    """

    s: int
    am: float = 0.0
    g: int = 1

    def __post_init__(self) -> None:
        if not isinstance(self.s, int) or self.s < 0:
            raise ValueError(f"dispersion order s must be a nonnegative integer, got {self.s!r}")
        if self.am < 0:
            raise ValueError(f"lattice mass am must be nonnegative, got {self.am!r}")
        if self.am > 0 and self.s != 1:
            raise ValueError("a nonzero mass is only supported for the linear branch (s=1)")
        if not isinstance(self.g, int) or self.g < 1:
            raise ValueError(f"degeneracy g must be a positive integer, got {self.g!r}")


@dataclass(frozen=True)
class Geometry:
    """Slab geometry: d spatial dimensions, nz lattice sites along the compact axis."""

    d: int
    nz: int

    def __post_init__(self) -> None:
        if self.d not in (1, 2, 3):
            raise ValueError(f"spatial dimension d must be 1, 2, or 3, got {self.d!r}")
        if not isinstance(self.nz, int) or self.nz < 1:
            raise ValueError(f"nz must be a positive integer, got {self.nz!r}")


@dataclass(frozen=True)
class CasimirResult:
    """Zero-point energies per transverse site and their difference.

    e0_sum is derived as e0_int + e_cas from one shared quadrature pass, so
    e_cas = e0_sum - e0_int holds at the rounding level by construction.
    coeff = nz**alpha * e_cas with alpha = (d-1) + s.
    """

    e0_sum: float
    e0_int: float
    e_cas: float
    coeff: float
    quad_error: float
    converged: bool = True


def _kernel(ak: np.ndarray) -> np.ndarray:
    return 2.0 - 2.0 * np.cos(ak)


def eval_from_kernel_sum(spec: DispersionSpec, t: np.ndarray | float) -> np.ndarray | float:
    """Dispersion value from the summed kernel t = sum_i (2 - 2 cos ak_i).

    Integer powers are computed as exact polynomial powers so that even-order
    dispersions stay trigonometric polynomials of the momenta.
    """
    t = np.asarray(t, dtype=float)
    v = t + spec.am * spec.am if spec.am else t
    if spec.s == 0:
        out = np.ones_like(v)
    elif spec.s == 1:
        out = np.sqrt(v)
    elif spec.s % 2 == 0:
        out = v ** (spec.s // 2)
    else:
        out = v ** (spec.s // 2) * np.sqrt(v)
    return out if out.ndim else float(out)


def eval_lattice_dispersion(spec: DispersionSpec, ak) -> np.ndarray | float:
    """Evaluate a*w at lattice momentum ak (the last axis holds the d components).

    Returns [sum_i (2 - 2 cos ak_i) + (am)^2]^(s/2); a flat band (s=0) is 1.
    """
    ak = np.asarray(ak, dtype=float)
    if not np.all(np.isfinite(ak)):
        raise ValueError("momentum components must be finite")
    t = _kernel(ak).sum(axis=-1)
    return eval_from_kernel_sum(spec, t)
