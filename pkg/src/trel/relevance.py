"""Truth-determining sets, redundant variables, and t-relevance reports.

A variable set S determines a formula when fixing S to any definite values
and leaving every other variable unknown still yields a definite value
under the strong tables.  Supersets of a determining set are determining,
because raising an unknown input to a definite one can only move the value
up the information order, and a definite value has nowhere further to go.

A variable is redundant when the remaining variables determine the formula
without it.  A tautology with no redundant variable is t-relevant: every
variable's value genuinely matters to knowing the formula is true.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from enum import Enum
from typing import Iterable

from .formula import Formula, format_var_set, ordered_subset, pretty, variables
from .semantics import (
    CLASSICAL_VALUES,
    DEFAULT_MAX_VARS_CLASSICAL,
    DEFAULT_MAX_VARS_THREE_VALUED,
    TruthValue,
    ensure_within_cap,
    eval3,
    is_tautology,
)

__all__ = [
    "Classification",
    "RelevanceReport",
    "is_determining",
    "is_redundant",
    "analyze",
]


class Classification(Enum):
    NOT_TAUTOLOGY = "NOT_TAUTOLOGY"
    TAUTOLOGY_NOT_T_RELEVANT = "TAUTOLOGY_NOT_T_RELEVANT"
    T_RELEVANT_TAUTOLOGY = "T_RELEVANT_TAUTOLOGY"


def is_determining(
    f: Formula, subset: Iterable[str], max_vars: int | None = None
) -> bool:
    """Does pinning everything outside ``subset`` to x keep the value definite?

    Checks every definite assignment to ``subset``; the empty set determines
    nothing, since a formula with all variables unknown evaluates to x.
    """
    names = variables(f)
    sub = ordered_subset(names, subset)
    ensure_within_cap(
        len(sub), max_vars, DEFAULT_MAX_VARS_CLASSICAL, "determining-set check"
    )
    pinned = {n: TruthValue.X for n in names if n not in set(sub)}
    for combo in itertools.product(CLASSICAL_VALUES, repeat=len(sub)):
        assignment = dict(pinned)
        assignment.update(zip(sub, combo))
        if eval3(f, assignment) is TruthValue.X:
            return False
    return True


def is_redundant(f: Formula, name: str, max_vars: int | None = None) -> bool:
    """A variable is redundant when the others determine the formula alone.

    This is the superset-monotone shortcut for "some determining set
    excludes the variable": the largest candidate excluding it suffices.
    """
    names = variables(f)
    if name not in names:
        raise ValueError(f"variable {name!r} does not occur in the formula")
    rest = tuple(n for n in names if n != name)
    return is_determining(f, rest, max_vars=max_vars)


@dataclass(frozen=True)
class RelevanceReport:
    formula: Formula
    minimal_determining_sets: tuple[tuple[str, ...], ...]
    redundant: tuple[str, ...]
    relevant: tuple[str, ...]
    is_t_relevant: bool
    classification: Classification

    def render_text(self) -> str:
        sets = ", ".join(
            format_var_set(s) for s in self.minimal_determining_sets
        )
        return "\n".join(
            [
                f"formula: {pretty(self.formula)}",
                f"classification: {self.classification.value}",
                f"t-relevant: {'yes' if self.is_t_relevant else 'no'}",
                f"minimal determining sets: {sets}",
                f"redundant: {format_var_set(self.redundant)}",
                f"relevant: {format_var_set(self.relevant)}",
            ]
        )

    def to_dict(self) -> dict:
        return {
            "formula": pretty(self.formula),
            "minimal_determining_sets": [
                list(s) for s in self.minimal_determining_sets
            ],
            "redundant": list(self.redundant),
            "relevant": list(self.relevant),
            "t_relevant": self.is_t_relevant,
            "classification": self.classification.value,
        }


def analyze(f: Formula, max_vars: int | None = None) -> RelevanceReport:
    """Full relevance report for a formula.

    Minimal determining sets are found by ascending-cardinality search with
    superset pruning, listed smallest first and lexicographically within a
    size (in canonical variable order).
    """
    names = variables(f)
    ensure_within_cap(
        len(names), max_vars, DEFAULT_MAX_VARS_THREE_VALUED, "relevance analysis"
    )
    minimal: list[tuple[str, ...]] = []
    for size in range(len(names) + 1):
        for idxs in itertools.combinations(range(len(names)), size):
            candidate = tuple(names[i] for i in idxs)
            if any(set(m) <= set(candidate) for m in minimal):
                continue
            if is_determining(f, candidate, max_vars=max_vars):
                minimal.append(candidate)
    redundant = tuple(
        n for n in names if is_redundant(f, n, max_vars=max_vars)
    )
    relevant = tuple(n for n in names if n not in set(redundant))
    t_relevant = not redundant
    if not is_tautology(f, max_vars=max_vars):
        classification = Classification.NOT_TAUTOLOGY
    elif t_relevant:
        classification = Classification.T_RELEVANT_TAUTOLOGY
    else:
        classification = Classification.TAUTOLOGY_NOT_T_RELEVANT
    return RelevanceReport(
        f, tuple(minimal), redundant, relevant, t_relevant, classification
    )
