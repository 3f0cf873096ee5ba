"""Classification of Casimir behavior over a thickness sweep.

Four regular outcomes: NoEffect (zero everywhere), Remnant (nonzero head,
exactly-zero tail), Damping (coefficient collapses toward zero), Lasting
(coefficient stabilizes at a nonzero value). A tail that neither collapses
nor stabilizes is reported as Unclassified with the sweep attached.

Remnant demands a sharp cliff: every head energy clearly nonzero, every
tail energy at rounding level, nothing in between. A smoothly decaying
energy (massive branch) crosses any single threshold gradually and would
otherwise be mistaken for a remnant once it dips below eps_zero.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum

from .model import DispersionSpec
from .modes import BoundaryCondition
from .quadrature import QuadratureConfig
from .report import SweepRow, sweep

__all__ = ["BehaviorKind", "ClassifyThresholds", "Classification", "classify_rows", "classify_behavior"]


class BehaviorKind(Enum):
    NO_EFFECT = "NoEffect"
    LASTING = "Lasting"
    DAMPING = "Damping"
    REMNANT = "Remnant"
    UNCLASSIFIED = "Unclassified"


@dataclass(frozen=True)
class ClassifyThresholds:
    """eps_zero: |e_cas| below this counts as exactly zero (absorbs rounding).
    eps_nonzero: |e_cas| at or above this counts as clearly nonzero.
    delta_tail: relative stability/collapse margin for the coefficient tail.
    """

    eps_zero: float = 1e-9
    eps_nonzero: float = 1e-3
    delta_tail: float = 1e-2

    def __post_init__(self) -> None:
        if not 0 < self.eps_zero < self.eps_nonzero:
            raise ValueError("thresholds must satisfy 0 < eps_zero < eps_nonzero")
        if not self.delta_tail > 0:
            raise ValueError("delta_tail must be positive")


@dataclass(frozen=True)
class Classification:
    kind: BehaviorKind
    n_max: int | None = None
    coeff_limit: float | None = None
    rows: tuple[SweepRow, ...] = field(default=(), repr=False)

    def __post_init__(self) -> None:
        if (self.kind is BehaviorKind.REMNANT) != (self.n_max is not None):
            raise ValueError("n_max is present exactly for Remnant outcomes")
        has_limit = self.coeff_limit is not None and self.coeff_limit != 0.0
        if (self.kind is BehaviorKind.LASTING) != has_limit:
            raise ValueError("a nonzero coeff_limit is present exactly for Lasting outcomes")


def classify_rows(rows: list[SweepRow], thresholds: ClassifyThresholds = ClassifyThresholds()) -> Classification:
    """Classify precomputed sweep rows (ascending nz)."""
    if len(rows) < 2:
        raise ValueError("need at least two sweep rows to classify")
    frozen = tuple(rows)
    abs_e = [abs(r.e_cas) for r in rows]
    is_zero = [a < thresholds.eps_zero for a in abs_e]
    is_strong = [a >= thresholds.eps_nonzero for a in abs_e]

    if all(is_zero):
        return Classification(BehaviorKind.NO_EFFECT, rows=frozen)

    last_nonzero = max(i for i, z in enumerate(is_zero) if not z)
    if (
        last_nonzero < len(rows) - 1
        and all(is_strong[: last_nonzero + 1])
        and all(is_zero[last_nonzero + 1 :])
    ):
        return Classification(BehaviorKind.REMNANT, n_max=rows[last_nonzero].nz, rows=frozen)

    coeffs = [r.coeff for r in rows]
    peak = max(abs(c) for c in coeffs)
    tail = coeffs[-max(2, len(rows) // 4) :]
    c_end = tail[-1]
    if abs(c_end) <= thresholds.delta_tail * peak:
        return Classification(BehaviorKind.DAMPING, rows=frozen)
    if max(abs(c - c_end) for c in tail) <= thresholds.delta_tail * abs(c_end):
        return Classification(BehaviorKind.LASTING, coeff_limit=c_end, rows=frozen)
    return Classification(BehaviorKind.UNCLASSIFIED, rows=frozen)


def classify_behavior(
    spec: DispersionSpec,
    d: int,
    bc: BoundaryCondition,
    nz_max: int,
    cfg: QuadratureConfig = QuadratureConfig(),
    thresholds: ClassifyThresholds = ClassifyThresholds(),
) -> Classification:
    """Sweep nz = 1..nz_max and classify the behavior."""
    if nz_max < 8:
        raise ValueError(f"nz_max must be at least 8 for a meaningful tail, got {nz_max!r}")
    rows = sweep(spec, d, bc, range(1, nz_max + 1), cfg)
    return classify_rows(rows, thresholds)
