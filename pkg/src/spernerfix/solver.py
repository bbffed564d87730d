"""Certified fixed-point localization by Sperner-labeled bracketing.

The solver looks for a fixed point of f on [a, b] by labeling grid vertices
with the sign of the residual g(x) = f(x) - x and narrowing to a transition
edge. It returns either an exact vertex fixed point or a certified bracket:
an interval [lo, hi] together with the exactly computed residuals g(lo) > 0
and g(hi) < 0. The sign evidence is unconditional. The further claim that
the midpoint residual is at most (L+1)(hi-lo)/2 is conditional on f really
being L-Lipschitz on the interval, which the caller declares and the solver
cannot check; see the counterexample module for what goes wrong when no such
bound exists.

Two modes:

* ``refine`` (default): repeatedly split the current bracket into
  `branching` equal parts, label, and descend into a 0-to-1 edge. Stops when
  (L+1) * width / 2 <= epsilon (with a declared Lipschitz bound L), when
  width <= epsilon (without one), or at max_rounds, in which case the best
  bracket so far is returned marked unconverged.
* ``single_grid``: build one uniform grid fine enough that the spacing is
  below delta = min(epsilon/L, epsilon * (1 - 1/branching)) and return the
  first transition edge. Requires a declared Lipschitz bound.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Literal, Union

from .expr import Expr, as_function
from .sperner import (
    ExactVertex,
    Labeling,
    NonSelfMapError,
    find_transition_bisect,
    find_transition_scan,
    label_by_sign,
    make_uniform_grid,
)

Mode = Literal["refine", "single_grid"]

Function = Union[Expr, Callable[[Fraction], Fraction]]


@dataclass(frozen=True)
class SolverConfig:
    """Solver parameters.

    epsilon is the target residual bound. lipschitz, when given, declares
    |f(x) - f(x')| <= lipschitz * |x - x'| on the interval; the solver uses
    it to derive grid spacing and stopping criteria but cannot verify it.
    branching is the number of subintervals per refinement round.
    """

    epsilon: Fraction = Fraction(1, 10**6)
    lipschitz: Fraction | None = None
    branching: int = 2
    max_rounds: int = 64
    mode: Mode = "refine"

    def __post_init__(self):
        if self.epsilon <= 0:
            raise ValueError("epsilon must be positive")
        if self.lipschitz is not None and self.lipschitz <= 0:
            raise ValueError("lipschitz bound must be positive")
        if self.branching < 2:
            raise ValueError("branching must be at least 2")
        if self.max_rounds < 1:
            raise ValueError("max_rounds must be at least 1")
        if self.mode not in ("refine", "single_grid"):
            raise ValueError(f"unknown mode {self.mode!r}")


@dataclass(frozen=True)
class CertifiedBracket:
    """Interval with exact opposite-sign residual evidence at its endpoints.

    g_lo and g_hi are the exactly computed values of f(lo) - lo and
    f(hi) - hi. Exact vertex fixed points are reported as ExactVertex,
    never as brackets, so both inequalities are strict.
    """

    lo: Fraction
    hi: Fraction
    g_lo: Fraction
    g_hi: Fraction
    rounds_used: int
    converged: bool = True

    def __post_init__(self):
        if not self.lo < self.hi:
            raise ValueError("bracket requires lo < hi")
        if not self.g_lo > 0:
            raise ValueError("bracket requires g(lo) > 0")
        if not self.g_hi < 0:
            raise ValueError("bracket requires g(hi) < 0")

    @property
    def width(self) -> Fraction:
        return self.hi - self.lo

    @property
    def midpoint(self) -> Fraction:
        return (self.lo + self.hi) / 2


FixPointResult = Union[ExactVertex, CertifiedBracket]


def residual(f: Function, x: Fraction) -> Fraction:
    """Exact residual g(x) = f(x) - x; zero exactly at fixed points."""
    return as_function(f)(x) - x


def archimedean_n(delta: Fraction, a: Fraction, b: Fraction) -> int:
    """Smallest positive integer n with (b - a) < n * delta, exactly."""
    if delta <= 0:
        raise ValueError("delta must be positive")
    if not a < b:
        raise ValueError("requires a < b")
    return (b - a) // delta + 1


def residual_bound(bracket: CertifiedBracket, lipschitz: Fraction) -> Fraction:
    """Midpoint residual bound (L+1) * width / 2.

    g inherits Lipschitz constant L+1 from f, so |g(midpoint)| is at most
    this value provided f genuinely satisfies the declared bound over the
    real interval. A false declaration voids the claim (the sign evidence
    in the bracket itself remains exact either way).
    """
    if lipschitz <= 0:
        raise ValueError("lipschitz bound must be positive")
    return (lipschitz + 1) * bracket.width / 2


def solve(
    f: Function, a: Fraction, b: Fraction, config: SolverConfig = SolverConfig()
) -> FixPointResult:
    """Locate a fixed point of f on [a, b] with exact evidence.

    Returns ExactVertex when some examined grid vertex is exactly fixed,
    otherwise a CertifiedBracket. Raises NonSelfMapError when the endpoint
    residuals show f escaping the interval.
    """
    if not a < b:
        raise ValueError("requires a < b")
    fn = as_function(f)
    g_a = fn(a) - a
    g_b = fn(b) - b
    # Endpoints in scan order, matching label_by_sign on the same grid.
    if g_a == 0:
        return ExactVertex(a)
    if g_a < 0:
        raise NonSelfMapError(f"f({a}) < {a}: map does not self-map the interval")
    if g_b == 0:
        return ExactVertex(b)
    if g_b > 0:
        raise NonSelfMapError(f"f({b}) > {b}: map does not self-map the interval")
    if config.mode == "single_grid":
        return _solve_single_grid(fn, a, b, config)
    return _solve_refine(fn, a, b, g_a, g_b, config)


def _met(width: Fraction, config: SolverConfig) -> bool:
    if config.lipschitz is not None:
        return (config.lipschitz + 1) * width / 2 <= config.epsilon
    return width <= config.epsilon


def _solve_refine(
    fn: Callable[[Fraction], Fraction],
    a: Fraction,
    b: Fraction,
    g_a: Fraction,
    g_b: Fraction,
    config: SolverConfig,
) -> FixPointResult:
    lo, hi, g_lo, g_hi = a, b, g_a, g_b
    rounds = 0
    while not _met(hi - lo, config) and rounds < config.max_rounds:
        grid = make_uniform_grid(lo, hi, config.branching)
        labeled = label_by_sign(grid, fn)
        if isinstance(labeled, ExactVertex):
            return labeled
        i = find_transition_bisect(labeled)
        lo, hi = grid.vertices[i - 1], grid.vertices[i]
        g_lo, g_hi = fn(lo) - lo, fn(hi) - hi
        rounds += 1
    return CertifiedBracket(
        lo, hi, g_lo, g_hi, rounds_used=rounds, converged=_met(hi - lo, config)
    )


def _solve_single_grid(
    fn: Callable[[Fraction], Fraction],
    a: Fraction,
    b: Fraction,
    config: SolverConfig,
) -> FixPointResult:
    if config.lipschitz is None:
        raise ValueError("single_grid mode requires a declared Lipschitz bound")
    # Grid spacing below delta, with delta capped strictly below epsilon.
    cap = config.epsilon * (1 - Fraction(1, config.branching))
    delta = min(config.epsilon / config.lipschitz, cap)
    n = archimedean_n(delta, a, b)
    grid = make_uniform_grid(a, b, n)
    labeled = label_by_sign(grid, fn)
    if isinstance(labeled, ExactVertex):
        return labeled
    assert isinstance(labeled, Labeling)
    i = find_transition_scan(labeled)
    lo, hi = grid.vertices[i - 1], grid.vertices[i]
    return CertifiedBracket(
        lo, hi, fn(lo) - lo, fn(hi) - hi, rounds_used=1, converged=True
    )
