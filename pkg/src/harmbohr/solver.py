"""Construction and solution of the Bohr-radius equation.

For each family the radius is the unique root in (0, 1) of

    H(r) = B(r) - d*,

where B is the majorant sum and d* the distance constant from
:mod:`harmbohr.classes`.  H is strictly increasing (H' >= 1), H(0) = -d* < 0
for nondegenerate parameters, and B(r) >= r with d* < 1 forces a sign change
before r = 1, so a bracketed bisection always applies; a Newton polish then
drives the residual to series-noise level.  Two families admit closed-form
radii as roots of explicit quadratics, used both as fast paths and as
cross-checks.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from typing import Callable, Optional

from .classes import ClassSpec, Family, bohr_sum, distance_bound, tb_m, validate
from .errors import ConvergenceError, DomainError, InternalConsistencyError
from .series import CoefficientRule, SeriesValue, sum_power_series

# Roots are searched on [0, UPPER_BRACKET]; every valid family keeps its
# constant d* strictly below this, which certifies H > 0 at the right end.
UPPER_BRACKET = 1.0 - 1e-9


class Method(str, Enum):
    CLOSED_FORM = "CLOSED_FORM"
    BISECTION_NEWTON = "BISECTION_NEWTON"


@dataclass(frozen=True)
class SolverConfig:
    """Tolerances and budgets for the root search.

    ``tol`` bounds the final bracket width and the accepted residual;
    ``series_tol`` is passed through to every series evaluation; the
    iteration budget covers bisection and Newton steps together.
    """

    tol: float = 1e-12
    series_tol: float = 1e-13
    max_iter: int = 200
    prefer_closed_form: bool = True

    def __post_init__(self):
        if not self.tol > 0.0:
            raise DomainError(f"tol must be > 0, got {self.tol}")
        if not self.series_tol > 0.0:
            raise DomainError(f"series_tol must be > 0, got {self.series_tol}")
        if int(self.max_iter) != self.max_iter or self.max_iter < 1:
            raise DomainError(f"max_iter must be an integer >= 1, got {self.max_iter!r}")


@dataclass(frozen=True)
class BohrEquation:
    """H(r) = B(r) - d* with its derivative, ready for root finding."""

    spec: ClassSpec
    d_star: SeriesValue
    h: Callable[[float], SeriesValue]
    h_prime: Optional[Callable[[float], float]]


@dataclass(frozen=True)
class RadiusResult:
    """A solved radius with its certificate.

    ``residual`` is |H(radius)| plus the series error bound at that point;
    ``bracket_lo``/``bracket_hi`` enclose the root; ``iterations`` counts
    bisection and Newton steps together (0 for closed forms).
    """

    radius: float
    residual: float
    bracket_lo: float
    bracket_hi: float
    iterations: int
    method: Method


def _h_prime(spec: ClassSpec, series_tol: float) -> Callable[[float], float]:
    fam = spec.family
    if fam is Family.PH_ALPHA:
        a = spec.alpha
        return lambda r: 1.0 + 2.0 * (1.0 - a) * r / (1.0 - r)
    if fam is Family.GT_BETA:
        b = spec.beta
        return lambda r: 1.0 + 2.0 * (1.0 - b) * r * (2.0 - r) / (1.0 - r) ** 2
    if fam is Family.TB_M:
        m = spec.m
        return lambda r: 1.0 + m * r
    if fam is Family.PH_M:
        m = spec.m
        return lambda r: 1.0 - 2.0 * m * math.log1p(-r)
    tol = max(series_tol, 1e-11)
    if fam is Family.WH_ALPHA:
        a = spec.alpha
        rule = CoefficientRule(lambda n: 2.0 / (1.0 + a * n), 1, "wh-derivative")
        return lambda r: 1.0 + sum_power_series(rule, r, tol=tol).value
    # Lacunary family: differentiate term by term and split off the
    # geometric part, valid for every alpha > 0.
    a = spec.alpha
    k = int(spec.k)
    rule = CoefficientRule(lambda n: 1.0 / (1.0 + a * n), k, "gh-derivative")

    def h_prime(r: float) -> float:
        s = sum_power_series(rule, r, tol=tol).value
        return 1.0 + (2.0 / a) * (r**k / (1.0 - r) - (1.0 - a) * s)

    return h_prime


def build_equation(spec: ClassSpec, config: SolverConfig | None = None) -> BohrEquation:
    """Assemble H and H' for the family at the configured tolerances."""
    cfg = config or SolverConfig()
    validate(spec)
    d = distance_bound(spec, tol=cfg.series_tol)

    def h(r: float) -> SeriesValue:
        b = bohr_sum(spec, r, tol=cfg.series_tol)
        return SeriesValue(b.value - d.value, b.error_bound + d.error_bound)

    return BohrEquation(spec=spec, d_star=d, h=h, h_prime=_h_prime(spec, cfg.series_tol))


def closed_form_radius(spec: ClassSpec) -> float | None:
    """The radius as an explicit quadratic root, for families that have one.

    Returns None for families without a closed form.  The expressions are
    arranged to avoid cancellation for small parameters.
    """
    validate(spec)
    if spec.family is Family.GT_BETA:
        b = spec.beta
        disc = 1.0 + 6.0 * b - 7.0 * b * b
        return 2.0 * b / ((1.0 + b) + math.sqrt(disc))
    if spec.family is Family.TB_M:
        m = spec.m
        return (2.0 - m) / (1.0 + math.sqrt(1.0 + 2.0 * m - m * m))
    return None


def _bisect_newton(eq: BohrEquation, cfg: SolverConfig) -> RadiusResult:
    d = eq.d_star
    lo, hi = 0.0, UPPER_BRACKET
    # H(0) = -d* < 0 was checked by the caller.  At the right end
    # B(r) >= r gives H(hi) >= hi - d*, positive because d* < hi.
    if not d.value + d.error_bound < hi:
        raise InternalConsistencyError(
            f"distance constant {d.value} does not certify a sign change on [0, {hi}]"
        )
    iterations = 0
    while hi - lo > cfg.tol:
        if iterations >= cfg.max_iter:
            raise ConvergenceError(
                f"root not localised to tol={cfg.tol:g} within {cfg.max_iter} iterations",
                achieved=SeriesValue(0.5 * (lo + hi), hi - lo),
            )
        mid = 0.5 * (lo + hi)
        if mid <= lo or mid >= hi:
            break  # bracket already at floating-point resolution
        hv = eq.h(mid)
        iterations += 1
        if abs(hv.value) <= hv.error_bound:
            # Below series noise; H' >= 1 localises the root within the noise.
            lo = max(lo, mid - hv.error_bound)
            hi = min(hi, mid + hv.error_bound)
            break
        if hv.value < 0.0:
            lo = mid
        else:
            hi = mid

    root = 0.5 * (lo + hi)
    if eq.h_prime is not None:
        for _ in range(3):
            if iterations >= cfg.max_iter:
                break
            hv = eq.h(root)
            iterations += 1
            if abs(hv.value) <= hv.error_bound:
                break
            nxt = root - hv.value / eq.h_prime(root)
            nxt = min(max(nxt, lo), hi)
            if nxt == root:
                break
            root = nxt

    hv = eq.h(root)
    residual = abs(hv.value) + hv.error_bound
    return RadiusResult(
        radius=root,
        residual=residual,
        bracket_lo=lo,
        bracket_hi=hi,
        iterations=iterations,
        method=Method.BISECTION_NEWTON,
    )


def solve_radius(spec: ClassSpec, config: SolverConfig | None = None) -> RadiusResult:
    """Solve H(r) = 0 for the family's sharp radius.

    Degenerate parameters with d* = 0 return radius 0 directly; families
    with quadratic closed forms use them when ``prefer_closed_form`` is set;
    everything else runs bracketed bisection plus a Newton polish.
    """
    cfg = config or SolverConfig()
    eq = build_equation(spec, cfg)
    d = eq.d_star
    if d.value <= d.error_bound:
        # B(0) = 0 already attains the constant; no positive radius exists.
        return RadiusResult(0.0, abs(d.value), 0.0, 0.0, 0, Method.CLOSED_FORM)
    if cfg.prefer_closed_form:
        r_cf = closed_form_radius(eq.spec)
        if r_cf is not None:
            hv = eq.h(r_cf)
            return RadiusResult(
                radius=r_cf,
                residual=abs(hv.value) + hv.error_bound,
                bracket_lo=r_cf,
                bracket_hi=r_cf,
                iterations=0,
                method=Method.CLOSED_FORM,
            )
    return _bisect_newton(eq, cfg)


def jacobian_radius(m: float) -> float:
    """Root of the quadratic tying the map's Jacobian weight to its majorant.

    This is exactly half of ``closed_form_radius`` for the same m: the
    quadratic 4m r^2 + 4r + (m - 2) = 0 halves the root of
    m r^2 + 2r + (m - 2) = 0.
    """
    spec = tb_m(m)
    return (2.0 - spec.m) / (2.0 * (1.0 + math.sqrt(1.0 + 2.0 * spec.m - spec.m * spec.m)))


def jacobian_functional(m: float, r: float) -> float:
    """The weighted majorant 2m r^2 + 2r whose unit-deficit root is jacobian_radius."""
    spec = tb_m(m)
    if not 0.0 <= r < 1.0:
        raise DomainError(f"r must satisfy 0 <= r < 1, got {r}")
    return 2.0 * spec.m * r * r + 2.0 * r
