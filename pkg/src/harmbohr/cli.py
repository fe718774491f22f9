"""Command-line front end.

Subcommands: ``radius`` solves one family at one parameter point, ``scan``
sweeps a parameter grid, ``verify`` runs the named cross-check suite, and
``table`` emits two-column plot data.  Data goes to stdout, diagnostics to
stderr.  Exit codes: 0 success, 1 failed verification checks, 2 invalid
class or parameters, 3 non-convergence.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from dataclasses import dataclass

from .classes import CANONICAL_PARAM, Family, distance_bound, make_spec
from .errors import (
    ConvergenceError,
    DomainError,
    InternalConsistencyError,
    ValidationError,
)
from .solver import SolverConfig, jacobian_functional, jacobian_radius, solve_radius

JACOBIAN_TAG = "tb-m-jacobian"
CLASS_TAGS = tuple(f.value for f in Family) + (JACOBIAN_TAG,)

DEFAULT_TOL = 1e-12

# Parameters each tag requires on the command line.
_EXPECTED_PARAMS: dict[str, tuple[str, ...]] = {
    Family.PH_ALPHA.value: ("alpha",),
    Family.GT_BETA.value: ("beta",),
    Family.WH_ALPHA.value: ("alpha",),
    Family.GH_K_ALPHA.value: ("k", "alpha"),
    Family.TB_M.value: ("m",),
    Family.PH_M.value: ("m",),
    JACOBIAN_TAG: ("m",),
}

_CANONICAL_BY_TAG: dict[str, str] = {
    **{fam.value: CANONICAL_PARAM[fam] for fam in Family},
    JACOBIAN_TAG: "m",
}

CSV_HEADER = "class,param_name,param_value,radius,residual,method"


@dataclass(frozen=True)
class OutputRecord:
    """One solved radius, ready for JSON or CSV emission."""

    class_tag: str
    params: dict
    radius: float
    residual: float
    method: str
    d_star: float
    tol: float

    def to_dict(self) -> dict:
        return {
            "class": self.class_tag,
            "params": dict(self.params),
            "radius": self.radius,
            "residual": self.residual,
            "method": self.method,
            "d_star": self.d_star,
            "tol": self.tol,
        }

    def to_json(self) -> str:
        # json round-trips Python floats through repr: bit-identical reals.
        return json.dumps(self.to_dict())

    @classmethod
    def from_json(cls, text: str) -> "OutputRecord":
        raw = json.loads(text)
        return cls(
            class_tag=raw["class"],
            params=raw["params"],
            radius=raw["radius"],
            residual=raw["residual"],
            method=raw["method"],
            d_star=raw["d_star"],
            tol=raw["tol"],
        )

    def to_csv_row(self) -> str:
        name = _CANONICAL_BY_TAG[self.class_tag]
        value = self.params[name]
        return (
            f"{self.class_tag},{name},{value:.12g},{self.radius:.12g},"
            f"{self.residual:.11e},{self.method}"
        )


def parse_grid(text: str) -> list[float]:
    """Parse ``lo:hi:step`` into values, inclusive of lo, exclusive of hi + step/2."""
    parts = text.split(":")
    if len(parts) != 3:
        raise DomainError(f"grid must have the form lo:hi:step, got {text!r}")
    try:
        lo, hi, step = (float(p) for p in parts)
    except ValueError:
        raise DomainError(f"grid bounds must be numbers, got {text!r}") from None
    if step <= 0.0:
        raise DomainError(f"grid step must be > 0, got {step}")
    if hi < lo:
        raise DomainError(f"grid must have hi >= lo, got {text!r}")
    values = []
    i = 0
    while True:
        v = lo + i * step
        if v >= hi + step / 2.0:
            break
        values.append(v)
        i += 1
    return values


def _parse_scalar(name: str, text: str) -> float:
    if ":" in text:
        raise DomainError(f"--{name} must be a single value here, got grid {text!r}")
    try:
        return float(text)
    except ValueError:
        raise DomainError(f"--{name} must be a number, got {text!r}") from None


def resolve_tol(args) -> float:
    if getattr(args, "tol", None) is not None:
        return args.tol
    env = os.environ.get("BOHR_TOL")
    if env:
        try:
            return float(env)
        except ValueError:
            raise DomainError(f"BOHR_TOL must be a number, got {env!r}") from None
    return DEFAULT_TOL


def _make_config(args) -> SolverConfig:
    tol = resolve_tol(args)
    return SolverConfig(
        tol=tol,
        series_tol=min(1e-13, 0.1 * tol),
        max_iter=getattr(args, "max_iter", 200),
    )


def _gather_params(args, tag: str, require_all: bool = True) -> dict[str, str]:
    expected = _EXPECTED_PARAMS[tag]
    given = {
        name: getattr(args, name)
        for name in ("alpha", "beta", "m", "k")
        if getattr(args, name, None) is not None
    }
    for name in given:
        if name not in expected:
            raise ValidationError(f"--{name} is not a parameter of class {tag}")
    if require_all:
        for name in expected:
            if name not in given:
                raise ValidationError(f"class {tag} requires --{name}")
    return given


def compute_record(tag: str, params: dict, cfg: SolverConfig, tol: float) -> OutputRecord:
    """Solve one parameter point for any class tag, including the Jacobian variant."""
    if tag == JACOBIAN_TAG:
        m = float(params["m"])
        radius = jacobian_radius(m)
        target = 1.0 - 0.5 * m
        residual = abs(jacobian_functional(m, radius) - target)
        return OutputRecord(tag, {"m": m}, radius, residual, "CLOSED_FORM", target, tol)
    spec = make_spec(Family(tag), **params)
    result = solve_radius(spec, cfg)
    d = distance_bound(spec, tol=cfg.series_tol)
    return OutputRecord(
        tag, spec.params(), result.radius, result.residual, result.method.value, d.value, tol
    )


def cmd_radius(args) -> int:
    tag = args.class_tag
    cfg = _make_config(args)
    raw = _gather_params(args, tag)
    params = {
        name: (value if name == "k" else _parse_scalar(name, value))
        for name, value in raw.items()
    }
    record = compute_record(tag, params, cfg, cfg.tol)
    if args.format == "csv":
        print(CSV_HEADER)
        print(record.to_csv_row())
    else:
        print(record.to_json())
    return 0


def _sweep_values(args, tag: str) -> tuple[dict, str, list[float]]:
    """Split the given parameters into fixed scalars and one swept grid."""
    canonical = _CANONICAL_BY_TAG[tag]
    range_text = getattr(args, "range", None)
    raw = _gather_params(args, tag, require_all=range_text is None)
    grids = {
        name: value
        for name, value in raw.items()
        if name != "k" and ":" in str(value)
    }
    if range_text is not None:
        if grids or canonical in raw:
            raise DomainError(f"give either --range or --{canonical}, not both")
        sweep_name, values = canonical, parse_grid(range_text)
        for name in _EXPECTED_PARAMS[tag]:
            if name != sweep_name and name not in raw:
                raise ValidationError(f"class {tag} requires --{name}")
    else:
        if len(grids) != 1:
            raise DomainError(
                "exactly one parameter must be a grid lo:hi:step (or use --range)"
            )
        ((sweep_name, grid_text),) = grids.items()
        values = parse_grid(grid_text)
    scalars = {
        name: (value if name == "k" else _parse_scalar(name, value))
        for name, value in raw.items()
        if name != sweep_name
    }
    return scalars, sweep_name, values


def cmd_scan(args) -> int:
    tag = args.class_tag
    cfg = _make_config(args)
    scalars, sweep_name, values = _sweep_values(args, tag)
    records = [
        compute_record(tag, {**scalars, sweep_name: v}, cfg, cfg.tol) for v in values
    ]
    if args.format == "csv":
        print(CSV_HEADER)
        for record in records:
            print(record.to_csv_row())
    else:
        for record in records:
            print(record.to_json())
    return 0


def cmd_table(args) -> int:
    tag = args.class_tag
    cfg = _make_config(args)
    scalars, sweep_name, values = _sweep_values(args, tag)
    print(f"{sweep_name},radius")
    for v in values:
        record = compute_record(tag, {**scalars, sweep_name: v}, cfg, cfg.tol)
        print(f"{v:.12g},{record.radius:.12g}")
    return 0


def cmd_verify(args) -> int:
    from . import verifier

    cfg = _make_config(args)
    family = None
    if args.class_tag is not None:
        tag = Family.TB_M.value if args.class_tag == JACOBIAN_TAG else args.class_tag
        family = Family(tag)
    report = verifier.run_suite(only=args.only, family=family, config=cfg)
    if not report.results:
        print("no checks matched the given filters", file=sys.stderr)
        return 2
    for result in report.results:
        status = "PASS" if result.passed else "FAIL"
        print(f"{status} {result.name}: {result.detail}")
    n_pass = sum(1 for r in report.results if r.passed)
    print(f"{n_pass}/{len(report.results)} checks passed")
    if not report.passed:
        names = ", ".join(r.name for r in report.failures)
        print(f"failing checks: {names}", file=sys.stderr)
        return 1
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="harmbohr",
        description="Sharp Bohr radii for six families of harmonic mappings.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(p, with_params: bool = True):
        if with_params:
            p.add_argument("--class", dest="class_tag", required=True, choices=CLASS_TAGS)
            p.add_argument("--alpha", help="family parameter (or lo:hi:step for sweeps)")
            p.add_argument("--beta", help="family parameter (or lo:hi:step for sweeps)")
            p.add_argument("--m", help="family parameter (or lo:hi:step for sweeps)")
            p.add_argument("--k", type=int, help="gap length (integer >= 1)")
        p.add_argument("--tol", type=float, default=None, help="solver tolerance (default 1e-12 or BOHR_TOL)")
        p.add_argument("--max-iter", dest="max_iter", type=int, default=200)

    p_radius = sub.add_parser("radius", help="compute one sharp radius")
    add_common(p_radius)
    p_radius.add_argument("--format", choices=("json", "csv"), default="json")
    p_radius.set_defaults(func=cmd_radius)

    p_scan = sub.add_parser("scan", help="sweep a parameter grid")
    add_common(p_scan)
    p_scan.add_argument("--range", help="lo:hi:step sweep of the class's canonical parameter")
    p_scan.add_argument("--format", choices=("json", "csv"), default="json")
    p_scan.set_defaults(func=cmd_scan)

    p_verify = sub.add_parser("verify", help="run the verification suite")
    p_verify.add_argument("--class", dest="class_tag", default=None, choices=CLASS_TAGS)
    p_verify.add_argument("--only", default=None, help="substring filter on check names")
    p_verify.add_argument("--tol", type=float, default=None)
    p_verify.add_argument("--max-iter", dest="max_iter", type=int, default=200)
    p_verify.set_defaults(func=cmd_verify)

    p_table = sub.add_parser("table", help="emit a (parameter, radius) curve as CSV")
    add_common(p_table)
    p_table.add_argument("--range", help="lo:hi:step sweep of the class's canonical parameter")
    p_table.set_defaults(func=cmd_table)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        code = exc.code
        return int(code) if code is not None else 0
    try:
        return args.func(args)
    except (ValidationError, DomainError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (ConvergenceError, InternalConsistencyError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3


def entrypoint() -> None:
    raise SystemExit(main(sys.argv[1:]))
