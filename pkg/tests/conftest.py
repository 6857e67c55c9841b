"""Shared corpus, formula generators, and a CLI driver for the tests."""

from __future__ import annotations

import contextlib
import io
import sys

from trel import And, Implies, Not, Or, Var
from trel.cli import main as cli_main

# Named formulas used across the suite.
PEIRCE = "((A -> B) -> A) -> A"
HYP_SYLLOGISM = "(P -> Q) -> ((Q -> R) -> (P -> R))"
CONTRADICTION_IMPLIES = "(P & ~P) -> Q"
VACUOUS_DISJUNCT = "(P | ~P) | Q"
BARCELONA_MADRID = "(~B | M) | (~M | B)"
DOUBLE_EXCLUDED = "(P | ~P) | (Q | ~Q)"
WEAKENING = "P -> (Q -> P)"

TAUTOLOGIES = (
    PEIRCE,
    HYP_SYLLOGISM,
    CONTRADICTION_IMPLIES,
    VACUOUS_DISJUNCT,
    BARCELONA_MADRID,
    DOUBLE_EXCLUDED,
    WEAKENING,
)

NON_TAUTOLOGIES = ("P -> Q", "P & Q", "P | Q", "~P", "(P & ~P) & Q")


def random_formula(rng, max_depth, names=("P", "Q", "R", "S")):
    """Uniform-ish random tree of nesting depth at most ``max_depth``."""
    if max_depth == 0 or rng.random() < 0.2:
        return Var(rng.choice(names))
    kind = rng.randrange(4)
    if kind == 0:
        return Not(random_formula(rng, max_depth - 1, names))
    left = random_formula(rng, max_depth - 1, names)
    right = random_formula(rng, max_depth - 1, names)
    return (And, Or, Implies)[kind - 1](left, right)


_FORMULA_CACHE: dict = {}


def formulas_up_to(depth, names=("P", "Q")):
    """All distinct formulas of nesting depth at most ``depth``."""
    key = (depth, names)
    if key in _FORMULA_CACHE:
        return _FORMULA_CACHE[key]
    current = [Var(n) for n in names]
    for _ in range(depth):
        prev = list(current)
        nxt = list(prev)
        nxt.extend(Not(f) for f in prev)
        for a in prev:
            for b in prev:
                nxt.extend((And(a, b), Or(a, b), Implies(a, b)))
        current = list(dict.fromkeys(nxt))
    _FORMULA_CACHE[key] = current
    return current


def run_cli(argv, stdin_text=""):
    """Run the CLI in process; returns (exit code, stdout, stderr)."""
    out, err = io.StringIO(), io.StringIO()
    old_stdin = sys.stdin
    sys.stdin = io.StringIO(stdin_text)
    try:
        with contextlib.redirect_stdout(out), contextlib.redirect_stderr(err):
            code = cli_main(argv)
    finally:
        sys.stdin = old_stdin
    return code, out.getvalue(), err.getvalue()
