"""Truth-relevant propositional logic toolkit.

Evaluation over three truth values (true, false, unknown) with the strong
tables; truth-determining variable sets, redundancy, and t-relevance;
refutation trees whose closing sets estimate the relevant variables; and
an exhaustive checker for equivalence with the excluded-middle
conjunction over a variable set.
"""

from .equivalence import (
    EquivalenceVerdict,
    canonical_form,
    canonical_value,
    check_equivalence,
    negated_form,
)
from .errors import (
    CapExceededError,
    MissingVariableError,
    NodeBudgetError,
    ParseError,
    TrelError,
)
from .formula import (
    And,
    Formula,
    Implies,
    Not,
    Or,
    SourceSpan,
    Var,
    format_var_set,
    ordered_subset,
    parse,
    pretty,
    subformulas,
    variables,
)
from .relevance import (
    Classification,
    RelevanceReport,
    analyze,
    is_determining,
    is_redundant,
)
from .semantics import (
    ALL_VALUES,
    CLASSICAL_VALUES,
    TableMode,
    TruthTable,
    TruthValue,
    assignment_leq,
    assignments,
    eval2,
    eval3,
    format_assignment,
    information_leq,
    is_definite,
    is_tautology,
    parse_assignment,
    truth_table,
)
from .tableau import (
    Branch,
    Outcome,
    Strategy,
    TableauNode,
    TableauResult,
    closing_sets_all,
    expand_rules,
    is_literal,
    literal_parts,
    refute,
)

__version__ = "0.1.0"

__all__ = [
    "__version__",
    # formula
    "Var", "Not", "And", "Or", "Implies", "Formula", "SourceSpan",
    "parse", "pretty", "variables", "subformulas", "ordered_subset",
    "format_var_set",
    # semantics
    "TruthValue", "CLASSICAL_VALUES", "ALL_VALUES", "eval3", "eval2",
    "is_tautology", "is_definite", "information_leq", "assignment_leq",
    "assignments", "parse_assignment", "format_assignment",
    "TableMode", "TruthTable", "truth_table",
    # relevance
    "Classification", "RelevanceReport", "analyze", "is_determining",
    "is_redundant",
    # tableau
    "Strategy", "Outcome", "TableauNode", "Branch", "TableauResult",
    "refute", "closing_sets_all", "expand_rules", "is_literal",
    "literal_parts",
    # equivalence
    "EquivalenceVerdict", "canonical_form", "canonical_value",
    "negated_form", "check_equivalence",
    # errors
    "TrelError", "ParseError", "MissingVariableError", "CapExceededError",
    "NodeBudgetError",
]
