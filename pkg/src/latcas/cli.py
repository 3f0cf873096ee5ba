"""Command-line interface.

Every subcommand is a thin adapter over the library; identical parameters
give identical results. There is no randomness anywhere, so repeated
invocations are byte-identical.

Exit codes: 0 success, 1 invalid arguments, 2 quadrature non-convergence.

Quadrature defaults can be overridden by environment variables
(LATCAS_BASE_POINTS, LATCAS_MAX_REFINEMENTS, LATCAS_REL_TOL, LATCAS_ABS_TOL);
explicit flags win over the environment.
"""
from __future__ import annotations

import argparse
import os
import sys
from typing import Sequence

from .casimir import casimir_energy, casimir_energy_massive
from .classify import ClassifyThresholds, classify_behavior
from .continuum import ContinuumParams, continuum_casimir
from .massexp import convergence_check, remnant_partial_sums
from .model import CasimirResult, DispersionSpec, Geometry
from .modes import BoundaryCondition, BoundaryKind, PhenOffset
from .quadrature import QuadratureConfig
from .report import SweepRow, emit, rectangle_decomposition, sweep

__all__ = ["run", "main"]

_BC_CHOICES = {
    "periodic": BoundaryKind.PERIODIC,
    "antiperiodic": BoundaryKind.ANTIPERIODIC,
    "phenomenological": BoundaryKind.PHENOMENOLOGICAL,
}
_OFFSET_CHOICES = {
    "one-to-2nz": PhenOffset.ONE_TO_2NZ,
    "zero-to-2nz-minus-1": PhenOffset.ZERO_TO_2NZ_MINUS_1,
}


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message: str) -> None:  # argparse would exit(2); we map usage errors to 1
        raise _UsageError(message)


def _env_default(name: str, cast, fallback):
    raw = os.environ.get(name)
    if raw is None:
        return fallback
    try:
        return cast(raw)
    except ValueError as exc:
        raise _UsageError(f"environment variable {name}: {exc}") from exc


def _add_quadrature_flags(p: argparse.ArgumentParser) -> None:
    p.add_argument("--base-points", type=int,
                   default=_env_default("LATCAS_BASE_POINTS", int, 64),
                   help="grid points per axis at the first level (default 64)")
    p.add_argument("--max-refinements", type=int,
                   default=_env_default("LATCAS_MAX_REFINEMENTS", int, 6),
                   help="number of grid doublings allowed (default 6)")
    p.add_argument("--rel-tol", type=float,
                   default=_env_default("LATCAS_REL_TOL", float, 1e-10),
                   help="relative tolerance on the integral (default 1e-10)")
    p.add_argument("--abs-tol", type=float,
                   default=_env_default("LATCAS_ABS_TOL", float, 1e-12),
                   help="absolute tolerance floor (default 1e-12)")


def _add_output_flags(p: argparse.ArgumentParser) -> None:
    p.add_argument("--format", choices=("table", "csv", "json"), default="table")
    p.add_argument("--out", default="-", help="output path, or - for stdout")


def _quad_config(args: argparse.Namespace) -> QuadratureConfig:
    return QuadratureConfig(args.base_points, args.max_refinements, args.rel_tol, args.abs_tol)


def _bc(args: argparse.Namespace) -> BoundaryCondition:
    kind = _BC_CHOICES[args.bc]
    offset = _OFFSET_CHOICES[getattr(args, "phen_offset", "one-to-2nz")]
    return BoundaryCondition(kind, offset)


def _spec(args: argparse.Namespace) -> DispersionSpec:
    return DispersionSpec(s=args.s, am=args.am, g=args.g)


def _print_result(r: CasimirResult, d: int, s: int) -> None:
    alpha = (d - 1) + s
    print(f"e0_sum     = {r.e0_sum:.12g}")
    print(f"e0_int     = {r.e0_int:.12g}")
    print(f"e_cas      = {r.e_cas:.12g}")
    print(f"coeff      = {r.coeff:.12g}  (alpha = {alpha})")
    print(f"quad_error = {r.quad_error:.6g}")
    print(f"converged  = {'yes' if r.converged else 'no'}")


def _rows_table(rows: Sequence[SweepRow]) -> str:
    header = f"{'Nz':>4} {'e0_sum':>22} {'e0_int':>22} {'e_cas':>22} {'coeff':>22} {'quad_error':>12}"
    lines = [header]
    for r in rows:
        lines.append(
            f"{r.nz:>4} {r.e0_sum:>22.15g} {r.e0_int:>22.15g} {r.e_cas:>22.15g} "
            f"{r.coeff:>22.15g} {r.quad_error:>12.3g}"
        )
    return "\n".join(lines)


def _cmd_compute(args: argparse.Namespace) -> int:
    spec = _spec(args)
    r = casimir_energy(spec, Geometry(args.d, args.nz), _bc(args), _quad_config(args))
    if args.format == "table":
        _print_result(r, args.d, spec.s)
    else:
        row = SweepRow(args.nz, r.e0_sum, r.e0_int, r.e_cas, r.coeff, r.quad_error, r.converged)
        emit([row], args.format, args.out)
    return 0 if r.converged else 2


def _cmd_sweep(args: argparse.Namespace) -> int:
    rows = sweep(_spec(args), args.d, _bc(args), range(args.nz_min, args.nz_max + 1), _quad_config(args))
    if args.format == "table":
        print(_rows_table(rows))
    else:
        emit(rows, args.format, args.out)
    return 0 if all(r.converged for r in rows) else 2


def _cmd_classify(args: argparse.Namespace) -> int:
    thresholds = ClassifyThresholds(args.eps_zero, args.eps_nonzero, args.delta_tail)
    c = classify_behavior(_spec(args), args.d, _bc(args), args.nz_max, _quad_config(args), thresholds)
    if c.n_max is not None:
        print(f"{c.kind.value} n_max={c.n_max}")
    elif c.coeff_limit is not None:
        print(f"{c.kind.value} coeff_limit={c.coeff_limit:.12g}")
    else:
        print(c.kind.value)
    print(_rows_table(list(c.rows)))
    return 0 if all(r.converged for r in c.rows) else 2


def _cmd_mass_expansion(args: argparse.Namespace) -> int:
    geom = Geometry(args.d, args.nz)
    bc = _bc(args)
    cfg = _quad_config(args)
    massive = casimir_energy_massive(args.am, geom, bc, cfg, g=args.g)
    partials = remnant_partial_sums(args.am, geom, bc, args.orders, cfg)
    report = convergence_check(args.am, args.d)
    print(f"massive e_cas = {massive.e_cas:.15g}")
    print(f"expansion domain: {'convergent' if report.converges else 'divergent'} "
          f"(margin {report.margin:.4g})")
    print(f"{'K':>3} {'partial_sum':>22} {'difference':>22}")
    for k, p in enumerate(partials, start=1):
        print(f"{k:>3} {p:>22.15g} {p - massive.e_cas:>22.3e}")
    return 0 if massive.converged else 2


def _cmd_rectangles(args: argparse.Namespace) -> int:
    dec = rectangle_decomposition(
        _spec(args), args.nz, _bc(args), tuple(args.k_perp), args.samples
    )
    if args.format == "table":
        print(f"{'left':>22} {'width':>22} {'height':>22}")
        for left, width, height in dec.rects:
            print(f"{left:>22.15g} {width:>22.15g} {height:>22.15g}")
        print(f"sum_area = {dec.sum_area:.15g}")
        print(f"int_area = {dec.int_area:.15g}")
    else:
        emit(dec, args.format, args.out)
    return 0


def _cmd_reference(args: argparse.Namespace) -> int:
    value = continuum_casimir(ContinuumParams(s=args.s, d=args.d, L=args.L, g=args.g))
    print(format(value, ".17g"))
    return 0


def build_parser() -> _Parser:
    parser = _Parser(prog="latcas", description="Lattice Casimir energies for power-law dispersions")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, nz_flag=True):
        p.add_argument("--s", type=int, default=1, help="dispersion order (0 = flat band)")
        p.add_argument("--am", type=float, default=0.0, help="mass in lattice units (s=1 only)")
        p.add_argument("--g", type=int, default=1, help="branch degeneracy multiplier")
        p.add_argument("--d", type=int, default=3, help="spatial dimension (1-3)")
        p.add_argument("--bc", choices=sorted(_BC_CHOICES), default="periodic")
        p.add_argument("--phen-offset", choices=sorted(_OFFSET_CHOICES), default="one-to-2nz",
                       help="index range of the phenomenological modes")

    p = sub.add_parser("compute", help="one Casimir energy")
    common(p)
    p.add_argument("--nz", type=int, required=True, help="lattice sites along the compact axis")
    _add_quadrature_flags(p)
    _add_output_flags(p)
    p.set_defaults(handler=_cmd_compute)

    p = sub.add_parser("sweep", help="Casimir energy over a thickness range")
    common(p)
    p.add_argument("--nz-min", type=int, default=1)
    p.add_argument("--nz-max", type=int, default=30)
    _add_quadrature_flags(p)
    _add_output_flags(p)
    p.set_defaults(handler=_cmd_sweep)

    p = sub.add_parser("classify", help="behavior class over a sweep")
    common(p)
    p.add_argument("--nz-max", type=int, default=30)
    p.add_argument("--eps-zero", type=float, default=1e-9)
    p.add_argument("--eps-nonzero", type=float, default=1e-3)
    p.add_argument("--delta-tail", type=float, default=1e-2)
    _add_quadrature_flags(p)
    p.set_defaults(handler=_cmd_classify)

    p = sub.add_parser("mass-expansion", help="massive energy vs even-order reconstruction")
    p.add_argument("--am", type=float, required=True)
    p.add_argument("--g", type=int, default=1)
    p.add_argument("--d", type=int, default=3)
    p.add_argument("--bc", choices=sorted(_BC_CHOICES), default="periodic")
    p.add_argument("--phen-offset", choices=sorted(_OFFSET_CHOICES), default="one-to-2nz")
    p.add_argument("--nz", type=int, required=True)
    p.add_argument("--orders", type=int, default=6, help="number of expansion terms")
    _add_quadrature_flags(p)
    p.set_defaults(handler=_cmd_mass_expansion)

    p = sub.add_parser("rectangles", help="mode rectangles vs dispersion curve")
    common(p)
    p.add_argument("--nz", type=int, required=True)
    p.add_argument("--k-perp", type=float, nargs="*", default=[],
                   help="fixed transverse momentum components (default: none)")
    p.add_argument("--samples", type=int, default=512)
    _add_output_flags(p)
    p.set_defaults(handler=_cmd_rectangles)

    p = sub.add_parser("reference", help="continuum closed-form value")
    p.add_argument("--s", type=int, required=True)
    p.add_argument("--d", type=int, default=3)
    p.add_argument("--L", type=float, default=1.0)
    p.add_argument("--g", type=int, default=1)
    p.set_defaults(handler=_cmd_reference)

    return parser


def run(argv: Sequence[str] | None = None) -> int:
    try:
        parser = build_parser()
        args = parser.parse_args(argv)
    except _UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except SystemExit as exc:  # --help and friends
        return int(exc.code or 0)
    try:
        return args.handler(args)
    except (ValueError, TypeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
