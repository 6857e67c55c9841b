"""Equivalence of a formula with an excluded-middle conjunction.

For a nonempty variable list R1 .. Rm the canonical conjunction
``(R1 | ~R1) & .. & (Rm | ~Rm)`` evaluates to T when every Ri is definite
and to x when any Ri is unknown; it is never F.  A formula that agrees
with it pointwise under the strong tables is therefore a tautology that is
determined exactly by those variables.  The checker decides agreement by
full three-valued enumeration and reports the first differing assignment.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from .errors import MissingVariableError
from .formula import And, Formula, Not, Or, Var, ordered_subset, pretty, variables
from .semantics import (
    ALL_VALUES,
    DEFAULT_MAX_VARS_THREE_VALUED,
    Assignment,
    TruthValue,
    assignments,
    ensure_within_cap,
    eval3,
    format_assignment,
)

__all__ = [
    "EquivalenceVerdict",
    "canonical_form",
    "canonical_value",
    "negated_form",
    "check_equivalence",
]


def _checked_names(names: Iterable[str]) -> tuple[str, ...]:
    names = tuple(names)
    if not names:
        raise ValueError("the variable list must not be empty")
    if len(set(names)) != len(names):
        raise ValueError("the variable list must not repeat a variable")
    return names


def canonical_form(names: Iterable[str]) -> Formula:
    """``(R1 | ~R1) & (.. & (Rm | ~Rm))``, nested to the right."""
    names = _checked_names(names)
    parts = [Or(Var(n), Not(Var(n))) for n in names]
    f = parts[-1]
    for part in reversed(parts[:-1]):
        f = And(part, f)
    return f


def negated_form(names: Iterable[str]) -> Formula:
    """``(R1 & ~R1) | (.. | (Rm & ~Rm))``, nested to the right.

    The negation-dual of the canonical conjunction: F when every variable
    is definite, x when any is unknown, never T.
    """
    names = _checked_names(names)
    parts = [And(Var(n), Not(Var(n))) for n in names]
    f = parts[-1]
    for part in reversed(parts[:-1]):
        f = Or(part, f)
    return f


def canonical_value(names: Iterable[str], assignment: Assignment) -> TruthValue:
    """Value of the canonical conjunction: T when every listed variable is
    definite, x otherwise.  Extra assignment entries are ignored."""
    names = _checked_names(names)
    result = TruthValue.T
    for name in names:
        try:
            value = assignment[name]
        except KeyError:
            raise MissingVariableError(
                f"no value for variable {name!r}"
            ) from None
        if value is TruthValue.X:
            result = TruthValue.X
    return result


@dataclass(frozen=True)
class EquivalenceVerdict:
    formula: Formula
    subset: tuple[str, ...]
    holds: bool
    witness: tuple[dict[str, TruthValue], TruthValue, TruthValue] | None

    def render_text(self) -> str:
        if self.holds:
            return "EQUIVALENT"
        assignment, lhs, rhs = self.witness
        shown = format_assignment(assignment, variables(self.formula))
        return f"NOT EQUIVALENT at {shown}: L={lhs}, canon={rhs}"

    def to_dict(self) -> dict:
        doc: dict = {
            "formula": pretty(self.formula),
            "subset": list(self.subset),
            "holds": self.holds,
            "witness": None,
        }
        if self.witness is not None:
            assignment, lhs, rhs = self.witness
            doc["witness"] = {
                "assignment": {
                    n: str(assignment[n]) for n in variables(self.formula)
                },
                "formula_value": str(lhs),
                "canonical_value": str(rhs),
            }
        return doc


def check_equivalence(
    f: Formula, subset: Iterable[str], max_vars: int | None = None
) -> EquivalenceVerdict:
    """Does the formula agree with the canonical conjunction over ``subset``?

    Enumerates every three-valued assignment over the formula's variables
    in lexicographic order (T < F < x per column, canonical column order);
    the witness, when the check fails, is the first difference found.
    """
    names = variables(f)
    sub = ordered_subset(names, subset)
    if not sub:
        raise ValueError("the variable list must not be empty")
    ensure_within_cap(
        len(names), max_vars, DEFAULT_MAX_VARS_THREE_VALUED, "equivalence check"
    )
    for assignment in assignments(names, ALL_VALUES):
        lhs = eval3(f, assignment)
        rhs = canonical_value(sub, assignment)
        if lhs is not rhs:
            return EquivalenceVerdict(f, sub, False, (assignment, lhs, rhs))
    return EquivalenceVerdict(f, sub, True, None)
