"""Three-valued evaluation with the strong tables, classical evaluation,
assignments, and truth-table generation.

The third value ``x`` stands for "unknown".  A definite operand can force a
definite result even when the other operand is unknown (``T | x = T``,
``F & x = F``, ``F -> x = T``); everything else propagates ``x``.  The
connectives are defined only by the four elementary tables below; no
simplification identities are applied anywhere, so ``P | ~P`` evaluates to
``x`` when ``P`` is unknown.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from enum import Enum
from typing import Iterable, Iterator, Mapping

from .errors import CapExceededError, MissingVariableError, ParseError
from .formula import (
    And,
    Formula,
    Implies,
    Not,
    Or,
    Var,
    is_valid_variable_name,
    pretty,
    variables,
)

__all__ = [
    "TruthValue",
    "Assignment",
    "CLASSICAL_VALUES",
    "ALL_VALUES",
    "NOT_TABLE",
    "AND_TABLE",
    "OR_TABLE",
    "IMPLIES_TABLE",
    "DEFAULT_MAX_VARS_CLASSICAL",
    "DEFAULT_MAX_VARS_THREE_VALUED",
    "ensure_within_cap",
    "eval3",
    "eval2",
    "is_tautology",
    "is_definite",
    "information_leq",
    "assignment_leq",
    "assignments",
    "parse_assignment",
    "format_assignment",
    "TableMode",
    "TruthTable",
    "truth_table",
]


class TruthValue(Enum):
    T = "T"
    F = "F"
    X = "x"

    def __str__(self) -> str:
        return self.value

    @classmethod
    def from_text(cls, text: str) -> "TruthValue":
        try:
            return _VALUE_TEXT[text]
        except KeyError:
            raise ParseError(
                f"invalid truth value {text!r} (expected T, F, or X)"
            ) from None


_VALUE_TEXT = {
    "T": TruthValue.T,
    "F": TruthValue.F,
    "X": TruthValue.X,
    "x": TruthValue.X,
}

_T, _F, _X = TruthValue.T, TruthValue.F, TruthValue.X

Assignment = Mapping[str, TruthValue]

#: Enumeration order for definite values; also the lexicographic row order.
CLASSICAL_VALUES = (_T, _F)
#: Enumeration order for all values: T before F before x.
ALL_VALUES = (_T, _F, _X)

NOT_TABLE = {_T: _F, _X: _X, _F: _T}

AND_TABLE = {
    (_T, _T): _T, (_T, _X): _X, (_T, _F): _F,
    (_X, _T): _X, (_X, _X): _X, (_X, _F): _F,
    (_F, _T): _F, (_F, _X): _F, (_F, _F): _F,
}

OR_TABLE = {
    (_T, _T): _T, (_T, _X): _T, (_T, _F): _T,
    (_X, _T): _T, (_X, _X): _X, (_X, _F): _X,
    (_F, _T): _T, (_F, _X): _X, (_F, _F): _F,
}

IMPLIES_TABLE = {
    (_T, _T): _T, (_T, _X): _X, (_T, _F): _F,
    (_X, _T): _T, (_X, _X): _X, (_X, _F): _X,
    (_F, _T): _T, (_F, _X): _T, (_F, _F): _T,
}

# Enumeration caps: 3**14 is ~4.8M rows, 2**20 ~1M rows.
DEFAULT_MAX_VARS_THREE_VALUED = 14
DEFAULT_MAX_VARS_CLASSICAL = 20


def ensure_within_cap(count: int, cap: int | None, default: int, what: str) -> None:
    limit = default if cap is None else cap
    if count > limit:
        raise CapExceededError(
            f"{what} over {count} variables exceeds the cap of {limit}"
        )


def eval3(f: Formula, assignment: Assignment) -> TruthValue:
    """Evaluate under the strong three-valued tables.

    Both operands of a connective are always evaluated; a definite result
    arises only from the tables themselves.
    """
    if isinstance(f, Var):
        try:
            return assignment[f.name]
        except KeyError:
            raise MissingVariableError(
                f"no value for variable {f.name!r}"
            ) from None
    if isinstance(f, Not):
        return NOT_TABLE[eval3(f.operand, assignment)]
    left = eval3(f.left, assignment)
    right = eval3(f.right, assignment)
    if isinstance(f, And):
        return AND_TABLE[left, right]
    if isinstance(f, Or):
        return OR_TABLE[left, right]
    return IMPLIES_TABLE[left, right]


def eval2(f: Formula, assignment: Assignment) -> TruthValue:
    """Classical two-valued evaluation; rejects assignments containing x."""
    return _T if _eval2(f, assignment) else _F


def _eval2(f: Formula, assignment: Assignment) -> bool:
    if isinstance(f, Var):
        try:
            value = assignment[f.name]
        except KeyError:
            raise MissingVariableError(
                f"no value for variable {f.name!r}"
            ) from None
        if value is _X:
            raise ValueError(
                f"classical evaluation needs a definite value for {f.name!r}"
            )
        return value is _T
    if isinstance(f, Not):
        return not _eval2(f.operand, assignment)
    left = _eval2(f.left, assignment)
    right = _eval2(f.right, assignment)
    if isinstance(f, And):
        return left and right
    if isinstance(f, Or):
        return left or right
    return (not left) or right


def is_definite(assignment: Assignment) -> bool:
    return all(value is not _X for value in assignment.values())


def information_leq(a: TruthValue, b: TruthValue) -> bool:
    """Information order: x is below T and F; every value is below itself."""
    return a is b or a is _X


def assignment_leq(a: Assignment, b: Assignment) -> bool:
    """Pointwise information order over the keys of ``a``."""
    return all(information_leq(a[name], b[name]) for name in a)


def assignments(
    names: Iterable[str],
    values: tuple[TruthValue, ...] = ALL_VALUES,
) -> Iterator[dict[str, TruthValue]]:
    """All total assignments over ``names``, in lexicographic order.

    Column order is the order of ``names``; each column runs through
    ``values`` in the given order.
    """
    names = tuple(names)
    for combo in itertools.product(values, repeat=len(names)):
        yield dict(zip(names, combo))


def is_tautology(f: Formula, max_vars: int | None = None) -> bool:
    """True iff the formula is classically true on every definite assignment."""
    names = variables(f)
    ensure_within_cap(
        len(names), max_vars, DEFAULT_MAX_VARS_CLASSICAL, "classical enumeration"
    )
    return all(
        eval2(f, a) is _T for a in assignments(names, CLASSICAL_VALUES)
    )


def parse_assignment(text: str) -> dict[str, TruthValue]:
    """Parse ``"P=T,Q=x"`` into an assignment dict.

    Accepts both ``X`` and ``x`` for the unknown value; whitespace around
    names and values is ignored.
    """
    out: dict[str, TruthValue] = {}
    if not text.strip():
        return out
    for part in text.split(","):
        name, sep, value = part.partition("=")
        name = name.strip()
        value = value.strip()
        if not sep or not name or not value:
            raise ParseError(
                f"malformed assignment entry {part.strip()!r} (expected name=value)"
            )
        if not is_valid_variable_name(name):
            raise ParseError(f"invalid variable name {name!r} in assignment")
        if name in out:
            raise ParseError(f"duplicate variable {name!r} in assignment")
        out[name] = TruthValue.from_text(value)
    return out


def format_assignment(
    assignment: Assignment, order: Iterable[str] | None = None
) -> str:
    names = tuple(order) if order is not None else tuple(assignment)
    return ",".join(f"{name}={assignment[name]}" for name in names)


class TableMode(Enum):
    CLASSICAL = "classical"
    THREE_VALUED = "three"
    PARTIAL = "partial"


@dataclass(frozen=True)
class TruthTable:
    """Rows of (total assignment, value) in lexicographic row order."""

    formula: Formula
    variables: tuple[str, ...]
    varied: tuple[str, ...]
    mode: TableMode
    rows: tuple[tuple[dict[str, TruthValue], TruthValue], ...]

    def render_text(self) -> str:
        lines = ["\t".join(self.variables + ("value",))]
        for assignment, value in self.rows:
            cells = [str(assignment[name]) for name in self.variables]
            cells.append(str(value))
            lines.append("\t".join(cells))
        return "\n".join(lines)

    def to_dict(self) -> dict:
        return {
            "formula": pretty(self.formula),
            "mode": self.mode.value,
            "variables": list(self.variables),
            "varied": list(self.varied),
            "rows": [
                {
                    "assignment": {n: str(a[n]) for n in self.variables},
                    "value": str(value),
                }
                for a, value in self.rows
            ],
        }


def truth_table(
    f: Formula,
    mode: TableMode = TableMode.CLASSICAL,
    varied: Iterable[str] | None = None,
    max_vars: int | None = None,
) -> TruthTable:
    """Tabulate the formula.

    CLASSICAL runs every variable over T and F; THREE_VALUED over T, F and
    x; PARTIAL runs the ``varied`` subset over T and F and pins the other
    variables to x.  Rows are lexicographic with T < F < x per column, in
    canonical column order.
    """
    names = variables(f)
    if mode is TableMode.PARTIAL:
        if varied is None:
            raise ValueError("partial mode requires the varied variable set")
        wanted = set(varied)
        strays = wanted - set(names)
        if strays:
            raise ValueError(
                "varied variables not in the formula: "
                + ", ".join(sorted(strays))
            )
        columns = tuple(n for n in names if n in wanted)
        domain = CLASSICAL_VALUES
        ensure_within_cap(
            len(columns), max_vars, DEFAULT_MAX_VARS_CLASSICAL, "partial table"
        )
    elif mode is TableMode.CLASSICAL:
        columns = names
        domain = CLASSICAL_VALUES
        ensure_within_cap(
            len(columns), max_vars, DEFAULT_MAX_VARS_CLASSICAL, "classical table"
        )
    else:
        columns = names
        domain = ALL_VALUES
        ensure_within_cap(
            len(columns), max_vars, DEFAULT_MAX_VARS_THREE_VALUED,
            "three-valued table",
        )
    column_set = set(columns)
    rows = []
    for combo in itertools.product(domain, repeat=len(columns)):
        varying = dict(zip(columns, combo))
        assignment = {
            n: varying[n] if n in column_set else _X for n in names
        }
        rows.append((assignment, eval3(f, assignment)))
    return TruthTable(f, names, columns, mode, tuple(rows))
