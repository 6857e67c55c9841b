"""Refutation trees for tautology proving.

The tree starts at the negation of the goal.  Stacking (alpha) rules extend
a branch in place; branching (beta) rules fork it.  A branch closes when it
carries a complementary literal pair; the variables of the chosen pairs,
collected over all branches, form the closing set.  When the closing set
covers every variable of the goal the tree proves the goal true outright;
when it is a proper subset, the tree only proves the goal is never false,
and the leftover branch content is kept in the tree for inspection.

Strategies differ only in scheduling, never in the verdict:

* DEFAULT expands stacking rules first, oldest candidate first, and closes
  on the earliest-completed pair.
* REVERSED expands stacking rules first but newest candidate first, and
  prefers the latest-completed pair, so it reaches the other closing sets
  that a different expansion order can produce.
* EXHAUSTIVE expands every branch fully even past a contradiction and
  additionally enumerates all closing sets obtainable by choosing a
  closing pair per branch.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum

from .errors import NodeBudgetError
from .formula import (
    And,
    Formula,
    Implies,
    Not,
    Or,
    Var,
    format_var_set,
    pretty,
    variables,
)

__all__ = [
    "ALPHA",
    "BETA",
    "DEFAULT_MAX_NODES",
    "Strategy",
    "Outcome",
    "TableauNode",
    "Branch",
    "TableauResult",
    "is_literal",
    "literal_parts",
    "expand_rules",
    "refute",
    "closing_sets_all",
]

DEFAULT_MAX_NODES = 1_000_000

ALPHA = "alpha"
BETA = "beta"


class Strategy(Enum):
    DEFAULT = "default"
    REVERSED = "reversed"
    EXHAUSTIVE = "exhaustive"


class Outcome(Enum):
    PROVED_TRUE = "PROVED_TRUE"
    PROVED_NOT_FALSE = "PROVED_NOT_FALSE"
    OPEN = "OPEN"


def is_literal(f: Formula) -> bool:
    return isinstance(f, Var) or (
        isinstance(f, Not) and isinstance(f.operand, Var)
    )


def literal_parts(f: Formula) -> tuple[str, bool]:
    """Variable name and polarity (True for the bare variable)."""
    if isinstance(f, Var):
        return f.name, True
    return f.operand.name, False


def expand_rules(f: Formula) -> tuple[str, str, tuple[Formula, ...]]:
    """The rule application for a non-literal formula, as written.

    Returns (kind, rule name, replacement formulas).  Alpha rules stack all
    replacements onto the branch; beta rules fork one branch per
    replacement.
    """
    if isinstance(f, And):
        return ALPHA, "and", (f.left, f.right)
    if isinstance(f, Or):
        return BETA, "or", (f.left, f.right)
    if isinstance(f, Implies):
        return BETA, "implies", (Not(f.left), f.right)
    if isinstance(f, Not):
        g = f.operand
        if isinstance(g, Not):
            return ALPHA, "not-not", (g.operand,)
        if isinstance(g, And):
            return BETA, "not-and", (Not(g.left), Not(g.right))
        if isinstance(g, Or):
            return ALPHA, "not-or", (Not(g.left), Not(g.right))
        if isinstance(g, Implies):
            return ALPHA, "not-implies", (g.left, Not(g.right))
    raise ValueError(f"literal is never expanded: {pretty(f)}")


@dataclass
class TableauNode:
    id: int
    formula: Formula
    parent: int | None
    rule: str
    source: int | None
    children: list[int] = field(default_factory=list)


@dataclass(frozen=True)
class Branch:
    nodes: tuple[int, ...]
    closed: bool
    closing_variable: str | None = None
    closing_nodes: tuple[int, int] | None = None


@dataclass(frozen=True)
class TableauResult:
    formula: Formula
    nodes: tuple[TableauNode, ...]
    branches: tuple[Branch, ...]
    outcome: Outcome
    strategy: Strategy
    closing_set: tuple[str, ...] | None
    closing_sets: tuple[tuple[str, ...], ...] | None = None

    def render_text(self) -> str:
        lines: list[str] = []
        leaf_branch = {b.nodes[-1]: b for b in self.branches}

        def indent_of(node: TableauNode, parent_indent: int) -> int:
            if node.parent is None:
                return 0
            siblings = self.nodes[node.parent].children
            return parent_indent + 1 if len(siblings) > 1 else parent_indent

        def visit(nid: int, parent_indent: int) -> None:
            node = self.nodes[nid]
            indent = indent_of(node, parent_indent)
            pad = "  " * indent
            origin = "start" if node.source is None else f"{node.rule} from N{node.source}"
            lines.append(f"{pad}N{node.id} [{origin}] {pretty(node.formula)}")
            branch = leaf_branch.get(nid)
            if branch is not None and not node.children:
                if branch.closed:
                    i, j = branch.closing_nodes
                    lines.append(
                        f"{pad}× closed on {branch.closing_variable} (N{i}, N{j})"
                    )
                else:
                    lines.append(f"{pad}o open")
            for child in node.children:
                visit(child, indent)

        visit(0, 0)
        lines.append(f"outcome: {self.outcome.value}")
        if self.closing_set is not None:
            lines.append(f"closing set: {format_var_set(self.closing_set)}")
        if self.closing_sets is not None:
            sets = ", ".join(format_var_set(s) for s in self.closing_sets)
            lines.append(f"closing sets: {sets if sets else 'none'}")
        return "\n".join(lines)

    def render_dot(self) -> str:
        lines = ["digraph tableau {"]
        for node in self.nodes:
            lines.append(f'  n{node.id} [label="{pretty(node.formula)}"];')
        for node in self.nodes:
            for child in node.children:
                lines.append(f"  n{node.id} -> n{child};")
        for k, branch in enumerate(self.branches):
            leaf = branch.nodes[-1]
            if branch.closed:
                lines.append(
                    f'  c{k} [label="× {branch.closing_variable}", shape=box];'
                )
            else:
                lines.append(f'  c{k} [label="open", shape=plaintext];')
            lines.append(f"  n{leaf} -> c{k};")
        lines.append("}")
        return "\n".join(lines)

    def to_dict(self) -> dict:
        doc: dict = {
            "formula": pretty(self.formula),
            "strategy": self.strategy.value,
            "outcome": self.outcome.value,
        }
        if self.closing_set is not None:
            doc["closing_set"] = list(self.closing_set)
        if self.closing_sets is not None:
            doc["closing_sets"] = [list(s) for s in self.closing_sets]
        doc["nodes"] = [
            {
                "id": n.id,
                "formula": pretty(n.formula),
                "rule": n.rule,
                "source": n.source,
                "parent": n.parent,
                "children": list(n.children),
            }
            for n in self.nodes
        ]
        doc["branches"] = [
            {
                "nodes": list(b.nodes),
                "status": "CLOSED" if b.closed else "OPEN",
                **(
                    {
                        "closing_variable": b.closing_variable,
                        "closing_nodes": list(b.closing_nodes),
                    }
                    if b.closed
                    else {}
                ),
            }
            for b in self.branches
        ]
        return doc


class _TreeBuilder:
    """Depth-first construction; node ids follow creation order, so the
    whole tree, including numbering, is deterministic for a given strategy."""

    def __init__(self, goal: Formula, strategy: Strategy, max_nodes: int):
        self.goal = goal
        self.strategy = strategy
        self.max_nodes = max_nodes
        self.var_index = {n: i for i, n in enumerate(variables(goal))}
        self.nodes: list[TableauNode] = []
        self.branches: list[Branch] = []
        # Per recorded branch: variables with both polarities present.
        self.branch_pair_vars: list[frozenset[str]] = []

    def build(self) -> None:
        root = self._new_node(Not(self.goal), None, "start", None)
        lits: dict[tuple[str, bool], list[int]] = {}
        queue: list[tuple[int, str]] = []
        self._register(root, lits, queue)
        self._extend([root], lits, queue, None)

    def _new_node(
        self, f: Formula, parent: int | None, rule: str, source: int | None
    ) -> int:
        if len(self.nodes) >= self.max_nodes:
            raise NodeBudgetError(
                f"tableau exceeded the node budget of {self.max_nodes}"
            )
        nid = len(self.nodes)
        self.nodes.append(TableauNode(nid, f, parent, rule, source))
        if parent is not None:
            self.nodes[parent].children.append(nid)
        return nid

    def _register(
        self,
        nid: int,
        lits: dict[tuple[str, bool], list[int]],
        queue: list[tuple[int, str]],
    ) -> None:
        f = self.nodes[nid].formula
        if is_literal(f):
            lits.setdefault(literal_parts(f), []).append(nid)
        else:
            queue.append((nid, expand_rules(f)[0]))

    def _pick(self, queue: list[tuple[int, str]]) -> int | None:
        """Queue index of the next node to expand: alpha before beta, then
        oldest first (DEFAULT, EXHAUSTIVE) or newest first (REVERSED)."""
        for kind in (ALPHA, BETA):
            idxs = [i for i, (_, k) in enumerate(queue) if k == kind]
            if idxs:
                return idxs[-1] if self.strategy is Strategy.REVERSED else idxs[0]
        return None

    def _closure(
        self,
        lits: dict[tuple[str, bool], list[int]],
        added: list[int],
    ) -> tuple[str, tuple[int, int]] | None:
        """Complementary pair completed by the just-added nodes, if any.

        DEFAULT and EXHAUSTIVE close on the pair completed first (earliest
        second member, ties broken by canonical variable order then by the
        earlier first member); REVERSED prefers the pair completed last.
        """
        candidates = []
        for nid in added:
            f = self.nodes[nid].formula
            if not is_literal(f):
                continue
            name, polarity = literal_parts(f)
            for other in lits.get((name, not polarity), []):
                if other < nid:
                    candidates.append((nid, self.var_index[name], other, name))
        if not candidates:
            return None
        choose = max if self.strategy is Strategy.REVERSED else min
        second, _, first, name = choose(candidates)
        return name, (first, second)

    def _extend(
        self,
        path: list[int],
        lits: dict[tuple[str, bool], list[int]],
        queue: list[tuple[int, str]],
        closure: tuple[str, tuple[int, int]] | None,
    ) -> None:
        exhaustive = self.strategy is Strategy.EXHAUSTIVE
        if closure is not None and not exhaustive:
            self._record(path, lits, closure)
            return
        pick = self._pick(queue)
        if pick is None:
            self._record(path, lits, closure)
            return
        nid, _ = queue.pop(pick)
        kind, rule, outputs = expand_rules(self.nodes[nid].formula)
        if kind == ALPHA:
            added = []
            for g in outputs:
                child = self._new_node(g, path[-1], rule, nid)
                path.append(child)
                self._register(child, lits, queue)
                added.append(child)
            if closure is None:
                closure = self._closure(lits, added)
            self._extend(path, lits, queue, closure)
        else:
            left = self._new_node(outputs[0], path[-1], rule, nid)
            right = self._new_node(outputs[1], path[-1], rule, nid)
            for child in (left, right):
                child_lits = {k: v[:] for k, v in lits.items()}
                child_queue = queue[:]
                self._register(child, child_lits, child_queue)
                child_closure = closure
                if child_closure is None:
                    child_closure = self._closure(child_lits, [child])
                self._extend(path + [child], child_lits, child_queue, child_closure)

    def _record(
        self,
        path: list[int],
        lits: dict[tuple[str, bool], list[int]],
        closure: tuple[str, tuple[int, int]] | None,
    ) -> None:
        pair_vars = frozenset(
            name
            for (name, polarity) in lits
            if polarity and lits.get((name, False))
        )
        self.branch_pair_vars.append(pair_vars)
        if closure is not None:
            name, pair = closure
            self.branches.append(Branch(tuple(path), True, name, pair))
        else:
            self.branches.append(Branch(tuple(path), False))


def refute(
    goal: Formula,
    strategy: Strategy = Strategy.DEFAULT,
    max_nodes: int | None = None,
) -> TableauResult:
    """Build the refutation tree for the negation of ``goal``.

    All branches closed with the closing set covering every variable proves
    the goal true; a proper subset proves it merely never false; an open
    branch leaves the goal unproved and the closing set is meaningless.
    """
    limit = DEFAULT_MAX_NODES if max_nodes is None else max_nodes
    builder = _TreeBuilder(goal, strategy, limit)
    builder.build()
    names = variables(goal)
    all_closed = all(b.closed for b in builder.branches)
    closing_set = None
    if all_closed:
        closed_names = {b.closing_variable for b in builder.branches}
        closing_set = tuple(n for n in names if n in closed_names)
    if not all_closed:
        outcome = Outcome.OPEN
    elif set(closing_set) == set(names):
        outcome = Outcome.PROVED_TRUE
    else:
        outcome = Outcome.PROVED_NOT_FALSE
    closing_sets = None
    if strategy is Strategy.EXHAUSTIVE:
        if all_closed:
            closing_sets = _minimal_unions(builder.branch_pair_vars, names)
        else:
            closing_sets = ()
    return TableauResult(
        goal,
        tuple(builder.nodes),
        tuple(builder.branches),
        outcome,
        strategy,
        closing_set,
        closing_sets,
    )


def closing_sets_all(
    goal: Formula, max_nodes: int | None = None
) -> list[tuple[str, ...]]:
    """All distinct minimal closing sets over per-branch closure choices.

    The tree is expanded fully; each branch then offers every variable that
    appears there with both polarities, one choice per branch is taken, and
    the inclusion-minimal unions are returned in lexicographic order.
    Expansion order is not varied; it cannot change which pairs a fully
    expanded branch carries.  Empty when the goal is not provable.
    """
    result = refute(goal, Strategy.EXHAUSTIVE, max_nodes=max_nodes)
    return [tuple(s) for s in (result.closing_sets or ())]


def _minimal_unions(
    branch_vars: list[frozenset[str]], names: tuple[str, ...]
) -> tuple[tuple[str, ...], ...]:
    order = {n: i for i, n in enumerate(names)}
    unions: set[frozenset[str]] = {frozenset()}
    for choices in branch_vars:
        if not choices:
            return ()
        unions = {u | {v} for u in unions for v in choices}
    minimal = [u for u in unions if not any(o < u for o in unions)]
    as_tuples = [
        tuple(sorted(u, key=order.__getitem__)) for u in minimal
    ]
    as_tuples.sort(key=lambda s: tuple(order[n] for n in s))
    return tuple(as_tuples)
