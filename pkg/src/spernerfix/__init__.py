"""Certified one-dimensional fixed-point search over exact rationals.

Sperner-labeled grid search, sign-change bracketing with exact residual
evidence, piecewise-linear extension of discrete vertex maps, and a running
demonstration that the labeling combinatorics survive over the rationals
while fixed-point existence does not.
"""

from .counterexample import (
    RESIDUAL_FLOOR,
    CounterexampleReport,
    assert_no_fixed_point,
    counterexample_expr,
    run_demo,
)
from .expr import (
    Add,
    Const,
    Div,
    Expr,
    IfNeg,
    Mul,
    Sub,
    Var,
    as_function,
    evaluate,
    parse,
    to_text,
)
from .plmap import (
    DiscreteMap,
    FixedPointWitness,
    PLMap,
    discrete_from_labeling,
    pl_evaluate,
    pl_fixed_points,
    pl_from_discrete,
    pl_from_labeling,
    pl_trace,
    theorem_roundtrip,
)
from .rationals import (
    EQ,
    GT,
    LT,
    ParseError,
    Rational,
    arith,
    cmp,
    decimal_string,
    is_below_sqrt2,
    normalize,
    parse_rational,
)
from .solver import (
    CertifiedBracket,
    FixPointResult,
    SolverConfig,
    archimedean_n,
    residual,
    residual_bound,
    solve,
)
from .sperner import (
    BoundaryConditionError,
    ExactVertex,
    Grid,
    Labeling,
    NonSelfMapError,
    find_transition_bisect,
    find_transition_bisect_counted,
    find_transition_scan,
    label_by_sign,
    labels_to_text,
    make_uniform_grid,
    parse_labels,
    parse_vertices,
    verify_sperner,
    vertices_to_text,
)

__version__ = "0.1.0"

__all__ = [
    "RESIDUAL_FLOOR",
    "CounterexampleReport",
    "assert_no_fixed_point",
    "counterexample_expr",
    "run_demo",
    "Add",
    "Const",
    "Div",
    "Expr",
    "IfNeg",
    "Mul",
    "Sub",
    "Var",
    "as_function",
    "evaluate",
    "parse",
    "to_text",
    "DiscreteMap",
    "FixedPointWitness",
    "PLMap",
    "discrete_from_labeling",
    "pl_evaluate",
    "pl_fixed_points",
    "pl_from_discrete",
    "pl_from_labeling",
    "pl_trace",
    "theorem_roundtrip",
    "EQ",
    "GT",
    "LT",
    "ParseError",
    "Rational",
    "arith",
    "cmp",
    "decimal_string",
    "is_below_sqrt2",
    "normalize",
    "parse_rational",
    "CertifiedBracket",
    "FixPointResult",
    "SolverConfig",
    "archimedean_n",
    "residual",
    "residual_bound",
    "solve",
    "BoundaryConditionError",
    "ExactVertex",
    "Grid",
    "Labeling",
    "NonSelfMapError",
    "find_transition_bisect",
    "find_transition_bisect_counted",
    "find_transition_scan",
    "label_by_sign",
    "labels_to_text",
    "make_uniform_grid",
    "parse_labels",
    "parse_vertices",
    "verify_sperner",
    "vertices_to_text",
]
