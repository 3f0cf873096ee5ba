"""Thickness sweeps, mode-rectangle decompositions, and CSV/JSON emission."""
from __future__ import annotations

import json
import math
import sys
from dataclasses import dataclass
from pathlib import Path
from typing import Iterable, Sequence

import numpy as np

from .casimir import casimir_energy
from .model import DispersionSpec, Geometry, eval_from_kernel_sum
from .modes import BoundaryCondition, generate_modes
from .quadrature import QuadratureConfig, integrate_kz

__all__ = [
    "SweepRow",
    "RectangleDecomposition",
    "sweep",
    "rectangle_decomposition",
    "emit",
    "CSV_COLUMNS",
]

_TWO_PI = 2.0 * math.pi

# emitted columns, in order; fixed so files are directly comparable
CSV_COLUMNS = ("Nz", "e0_sum", "e0_int", "e_cas", "coeff", "quad_error")


@dataclass(frozen=True)
class SweepRow:
    """One flattened result per thickness; `converged` is not emitted."""

    nz: int
    e0_sum: float
    e0_int: float
    e_cas: float
    coeff: float
    quad_error: float
    converged: bool = True


@dataclass(frozen=True)
class RectangleDecomposition:
    """Mode rectangles against the continuous dispersion curve at fixed k_perp.

    Rectangle l is centered on mode akz_l with width weight_l * 2pi/nz and
    height omega(k_perp, akz_l), so sum_area/(2pi) is exactly the weighted
    mode average entering the zero-point sum. int_area is the area under the
    sampled curve over one zone.
    """

    rects: tuple[tuple[float, float, float], ...]  # (left, width, height)
    curve: tuple[tuple[float, float], ...]  # (akz, aomega)
    sum_area: float
    int_area: float


def sweep(
    spec: DispersionSpec,
    d: int,
    bc: BoundaryCondition,
    nz_range: Iterable[int],
    cfg: QuadratureConfig = QuadratureConfig(),
) -> list[SweepRow]:
    """One Casimir evaluation per thickness; rows keep ascending unique nz.

    A non-converged row is recorded like any other (its quad_error and
    converged flag tell the story) and the sweep continues.
    """
    nzs = [int(nz) for nz in nz_range]
    if not nzs:
        raise ValueError("nz_range must be nonempty")
    if sorted(set(nzs)) != nzs:
        raise ValueError("nz_range must be strictly ascending")
    rows = []
    for nz in nzs:
        r = casimir_energy(spec, Geometry(d, nz), bc, cfg)
        rows.append(SweepRow(nz, r.e0_sum, r.e0_int, r.e_cas, r.coeff, r.quad_error, r.converged))
    return rows


def rectangle_decomposition(
    spec: DispersionSpec,
    nz: int,
    bc: BoundaryCondition,
    k_perp: Sequence[float] = (),
    samples: int = 512,
) -> RectangleDecomposition:
    """Rectangles and curve for the 1D view at fixed transverse momentum.

    The default k_perp = () is the 1D illustration (no transverse kernel).
    """
    if samples < 64:
        raise ValueError(f"samples must be at least 64, got {samples!r}")
    t_perp = float(np.sum(2.0 - 2.0 * np.cos(np.asarray(k_perp, dtype=float)))) if len(k_perp) else 0.0
    modes = generate_modes(bc, nz)
    rects = []
    for akz, w in modes.modes:
        width = w * _TWO_PI / nz
        height = float(eval_from_kernel_sum(spec, t_perp + 2.0 - 2.0 * math.cos(akz)))
        rects.append((akz - 0.5 * width, width, height))
    sum_area = math.fsum(w * h for _, w, h in rects)

    xs = np.arange(samples, dtype=float) * (_TWO_PI / samples)
    ys = np.asarray(eval_from_kernel_sum(spec, t_perp + 2.0 - 2.0 * np.cos(xs)))
    curve = tuple((float(x), float(y)) for x, y in zip(xs, ys))

    quad = integrate_kz(
        lambda x: np.asarray(eval_from_kernel_sum(spec, t_perp + 2.0 - 2.0 * np.cos(x))),
        QuadratureConfig(),
    )
    return RectangleDecomposition(tuple(rects), curve, sum_area, _TWO_PI * quad.value)


def _g17(x: float) -> str:
    return format(float(x), ".17g")


def _rows_csv(rows: Sequence[SweepRow]) -> str:
    lines = [",".join(CSV_COLUMNS)]
    for r in rows:
        lines.append(
            ",".join(
                [str(r.nz)]
                + [_g17(v) for v in (r.e0_sum, r.e0_int, r.e_cas, r.coeff, r.quad_error)]
            )
        )
    return "\n".join(lines) + "\n"


def _rows_json(rows: Sequence[SweepRow]) -> str:
    payload = [
        {
            "Nz": r.nz,
            "e0_sum": r.e0_sum,
            "e0_int": r.e0_int,
            "e_cas": r.e_cas,
            "coeff": r.coeff,
            "quad_error": r.quad_error,
        }
        for r in rows
    ]
    return json.dumps(payload, indent=2) + "\n"


def _decomp_csv(dec: RectangleDecomposition) -> str:
    lines = ["left,width,height"]
    lines += [",".join(_g17(v) for v in rect) for rect in dec.rects]
    lines += ["", "curve", "akz,aomega"]
    lines += [",".join(_g17(v) for v in pt) for pt in dec.curve]
    lines += ["", "sum_area,int_area", f"{_g17(dec.sum_area)},{_g17(dec.int_area)}"]
    return "\n".join(lines) + "\n"


def _decomp_json(dec: RectangleDecomposition) -> str:
    payload = {
        "rects": [{"left": l, "width": w, "height": h} for l, w, h in dec.rects],
        "curve": [{"akz": x, "aomega": y} for x, y in dec.curve],
        "sum_area": dec.sum_area,
        "int_area": dec.int_area,
    }
    return json.dumps(payload, indent=2) + "\n"


def emit(data, fmt: str = "csv", destination: str | Path = "-") -> None:
    """Write sweep rows or a decomposition as CSV or JSON.

    destination "-" writes to stdout. Floats carry 17 significant digits so a
    parse reproduces every value bit-exactly.
    """
    if fmt not in ("csv", "json"):
        raise ValueError(f"format must be 'csv' or 'json', got {fmt!r}")
    if isinstance(data, RectangleDecomposition):
        text = _decomp_csv(data) if fmt == "csv" else _decomp_json(data)
    else:
        rows = list(data)
        if not all(isinstance(r, SweepRow) for r in rows):
            raise TypeError("emit expects SweepRow iterables or a RectangleDecomposition")
        text = _rows_csv(rows) if fmt == "csv" else _rows_json(rows)
    if destination == "-":
        sys.stdout.write(text)
        return
    try:
        Path(destination).write_text(text)
    except OSError as exc:
        raise OSError(f"cannot write output to {destination}: {exc}") from exc
