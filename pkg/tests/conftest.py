"""Shared test helpers: CLI runner, expression corpus, golden transcripts."""

from __future__ import annotations

import contextlib
import io
import random
import sys
from fractions import Fraction

from spernerfix.cli import main
from spernerfix.expr import Add, Const, Div, Expr, IfNeg, Mul, Sub, Var


def run_cli(argv: list[str], stdin_text: str | None = None) -> tuple[int, str, str]:
    """Invoke the CLI in-process; returns (exit code, stdout, stderr)."""
    out, err = io.StringIO(), io.StringIO()
    old_stdin = sys.stdin
    if stdin_text is not None:
        sys.stdin = io.StringIO(stdin_text)
    try:
        with contextlib.redirect_stdout(out), contextlib.redirect_stderr(err):
            code = main(argv)
    finally:
        sys.stdin = old_stdin
    return code, out.getvalue(), err.getvalue()


def gen_expr(rng: random.Random, depth: int) -> Expr:
    """Random expression of at most the given depth (seeded, reproducible)."""
    if depth <= 0 or rng.random() < 0.3:
        if rng.random() < 0.4:
            return Var()
        return Const(Fraction(rng.randint(-30, 30), rng.randint(1, 30)))
    kind = rng.randrange(5)
    if kind == 4:
        return IfNeg(
            gen_expr(rng, depth - 1), gen_expr(rng, depth - 1), gen_expr(rng, depth - 1)
        )
    node = (Add, Sub, Mul, Div)[kind]
    return node(gen_expr(rng, depth - 1), gen_expr(rng, depth - 1))


_SOLVE_QUADRATIC_HUMAN = (
    "mode: refine\n"
    "converged: yes\n"
    "rounds used: 20\n"
    "lo = 614241/1048576 (0.585785865783)\n"
    "hi = 307121/524288 (0.585786819458)\n"
    "g(lo) = 1778369/4398046511104 (0.000000404354)\n"
    "g(hi) = -296863/1099511627776 (-0.000000269995)\n"
    "width = 1/1048576 (0.000000953674)\n"
)

_COUNTEREXAMPLE_10_CSV = (
    "depth,width,abs_residual\n"
    "1,1/2,3/4\n"
    "2,1/4,5/8\n"
    "3,1/8,7/16\n"
    "4,1/16,19/32\n"
    "5,1/32,27/64\n"
    "6,1/64,75/128\n"
    "7,1/128,107/256\n"
    "8,1/256,213/512\n"
    "9,1/512,425/1024\n"
    "10,1/1024,849/2048\n"
)

# One entry per documented CLI example: (argv, expected exit code, expected
# stdout bytes). Error diagnostics go to stderr, so failing invocations
# expect empty stdout.
GOLDEN_TRANSCRIPTS: list[tuple[list[str], int, str]] = [
    (["sperner", "0,0,1,1"], 0, "scan edge: 2\nbisect edge: 2\n"),
    (["sperner", "1,0"], 2, ""),
    (["sperner", "0,1", "--format", "json"], 0, '{"scan":1,"bisect":1}\n'),
    (["solve", "1 - x", "0", "1"], 0, "exact fixed point: 1/2 (0.500000000000)\n"),
    (
        ["solve", "(x*x + 2)/4", "0", "1", "--epsilon", "1/1000000", "--lipschitz", "1/2"],
        0,
        _SOLVE_QUADRATIC_HUMAN,
    ),
    (["solve", "x + 1", "0", "1"], 2, ""),
    (
        ["plmap", "0,0,1", "--vertices", "0,1,2", "fixed-points"],
        0,
        "3/2 (1.500000000000)\n",
    ),
    (
        ["plmap", "0,1", "--vertices", "0,1", "eval", "1/4"],
        0,
        "value at 1/4: 3/4 (0.750000000000)\n",
    ),
    (
        ["plmap", "0,1,0,1", "--vertices", "0,1,2,3", "fixed-points"],
        0,
        "1/2 (0.500000000000)\n3/2 (1.500000000000)\n5/2 (2.500000000000)\n",
    ),
    (["counterexample", "--depth", "10", "--format", "csv"], 0, _COUNTEREXAMPLE_10_CSV),
    (
        ["counterexample", "--depth", "1"],
        0,
        "round 1: bracket [1, 3/2], width 1/2 (0.500000000000), "
        "|g(midpoint)| 3/4 (0.750000000000), straddles sqrt2: yes\n",
    ),
    (["counterexample", "--depth", "0"], 1, ""),
]
