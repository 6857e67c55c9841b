"""Formula syntax: trees, a parser for the concrete syntax, and a printer.

Connectives from loosest to tightest binding: ``->`` (right-associative),
``|``, ``&`` (both left-associative), ``~``.  Unicode spellings are accepted
on input; ``v`` standing alone is a disjunction sign, not a variable.
``<->`` is input sugar for the conjunction of both implications and never
appears in a tree.  There are no propositional constants: every leaf is a
variable, so every formula mentions at least one.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterable, Iterator, Union

from .errors import ParseError

__all__ = [
    "Var",
    "Not",
    "And",
    "Or",
    "Implies",
    "Formula",
    "SourceSpan",
    "parse",
    "pretty",
    "variables",
    "subformulas",
    "ordered_subset",
    "format_var_set",
    "is_valid_variable_name",
]

_IDENT_RE = re.compile(r"[A-Za-z][A-Za-z0-9_]*")


def is_valid_variable_name(name: str) -> bool:
    # "v" alone is reserved as the disjunction token.
    return bool(_IDENT_RE.fullmatch(name)) and name != "v"


@dataclass(frozen=True)
class SourceSpan:
    """Half-open character range ``[start, end)`` in the parsed text."""

    start: int
    end: int


@dataclass(frozen=True)
class Var:
    name: str

    def __post_init__(self):
        if not is_valid_variable_name(self.name):
            raise ValueError(f"invalid variable name {self.name!r}")

    def __str__(self) -> str:
        return pretty(self)


@dataclass(frozen=True)
class Not:
    operand: "Formula"

    def __str__(self) -> str:
        return pretty(self)


@dataclass(frozen=True)
class And:
    left: "Formula"
    right: "Formula"

    def __str__(self) -> str:
        return pretty(self)


@dataclass(frozen=True)
class Or:
    left: "Formula"
    right: "Formula"

    def __str__(self) -> str:
        return pretty(self)


@dataclass(frozen=True)
class Implies:
    left: "Formula"
    right: "Formula"

    def __str__(self) -> str:
        return pretty(self)


Formula = Union[Var, Not, And, Or, Implies]


# ---------------------------------------------------------------------------
# Tokenizer

_TOKEN_RE = re.compile(
    r"(?P<ws>\s+)"
    r"|(?P<iff><->|↔)"
    r"|(?P<implies>->|→)"
    r"|(?P<or>\||∨)"
    r"|(?P<and>&|∧)"
    r"|(?P<not>~|¬)"
    r"|(?P<lparen>\()"
    r"|(?P<rparen>\))"
    r"|(?P<ident>[A-Za-z][A-Za-z0-9_]*)"
)


@dataclass(frozen=True)
class _Token:
    kind: str
    text: str
    span: SourceSpan


def _tokenize(text: str) -> list[_Token]:
    tokens: list[_Token] = []
    pos = 0
    while pos < len(text):
        match = _TOKEN_RE.match(text, pos)
        if match is None:
            raise ParseError(
                f"unexpected character {text[pos]!r}", SourceSpan(pos, pos + 1)
            )
        kind = match.lastgroup
        if kind != "ws":
            tok_text = match.group()
            if kind == "ident" and tok_text == "v":
                kind = "or"
            tokens.append(_Token(kind, tok_text, SourceSpan(match.start(), match.end())))
        pos = match.end()
    tokens.append(_Token("eof", "", SourceSpan(len(text), len(text))))
    return tokens


# ---------------------------------------------------------------------------
# Parser

class _Parser:
    def __init__(self, tokens: list[_Token]):
        self.tokens = tokens
        self.pos = 0

    def peek(self) -> _Token:
        return self.tokens[self.pos]

    def advance(self) -> _Token:
        token = self.tokens[self.pos]
        self.pos += 1
        return token

    def fail(self, expected: str) -> None:
        token = self.peek()
        found = "end of input" if token.kind == "eof" else repr(token.text)
        raise ParseError(f"expected {expected}, found {found}", token.span)

    def formula(self) -> Formula:
        left = self.implication()
        if self.peek().kind == "iff":
            self.advance()
            right = self.formula()
            return And(Implies(left, right), Implies(right, left))
        return left

    def implication(self) -> Formula:
        left = self.disjunction()
        if self.peek().kind == "implies":
            self.advance()
            return Implies(left, self.implication())
        return left

    def disjunction(self) -> Formula:
        f = self.conjunction()
        while self.peek().kind == "or":
            self.advance()
            f = Or(f, self.conjunction())
        return f

    def conjunction(self) -> Formula:
        f = self.unary()
        while self.peek().kind == "and":
            self.advance()
            f = And(f, self.unary())
        return f

    def unary(self) -> Formula:
        token = self.peek()
        if token.kind == "not":
            self.advance()
            return Not(self.unary())
        if token.kind == "ident":
            self.advance()
            return Var(token.text)
        if token.kind == "lparen":
            self.advance()
            f = self.formula()
            if self.peek().kind != "rparen":
                self.fail("')'")
            self.advance()
            return f
        self.fail("a variable, '~', or '('")
        raise AssertionError("unreachable")


def parse(text: str) -> Formula:
    """Parse concrete syntax into a formula tree.

    Raises ParseError, carrying the offending character span, on any input
    that the grammar rejects.
    """
    if not text.strip():
        raise ParseError("empty input", SourceSpan(0, len(text)))
    parser = _Parser(_tokenize(text))
    f = parser.formula()
    if parser.peek().kind != "eof":
        parser.fail("end of input")
    return f


# ---------------------------------------------------------------------------
# Printing

_BINARY = {And: (" & ", 3), Or: (" | ", 2), Implies: (" -> ", 1)}


def _prec(f: Formula) -> int:
    if isinstance(f, (Var, Not)):
        return 4
    return _BINARY[type(f)][1]


def pretty(f: Formula) -> str:
    """Render with the fewest parentheses that reparse to the same tree."""
    if isinstance(f, Var):
        return f.name
    if isinstance(f, Not):
        inner = pretty(f.operand)
        if not isinstance(f.operand, (Var, Not)):
            inner = "(" + inner + ")"
        return "~" + inner
    sep, prec = _BINARY[type(f)]
    right_assoc = isinstance(f, Implies)
    left = pretty(f.left)
    if _prec(f.left) < prec or (right_assoc and _prec(f.left) == prec):
        left = "(" + left + ")"
    right = pretty(f.right)
    if _prec(f.right) < prec or (not right_assoc and _prec(f.right) == prec):
        right = "(" + right + ")"
    return left + sep + right


def subformulas(f: Formula) -> Iterator[Formula]:
    """Preorder traversal, left subtrees before right."""
    stack = [f]
    while stack:
        g = stack.pop()
        yield g
        if isinstance(g, Not):
            stack.append(g.operand)
        elif isinstance(g, (And, Or, Implies)):
            stack.append(g.right)
            stack.append(g.left)


def variables(f: Formula) -> tuple[str, ...]:
    """Distinct variable names in first-occurrence order.

    This order is the canonical column order used by tables, reports and
    witnesses everywhere in the package.
    """
    seen: set[str] = set()
    out: list[str] = []
    for g in subformulas(f):
        if isinstance(g, Var) and g.name not in seen:
            seen.add(g.name)
            out.append(g.name)
    return tuple(out)


def ordered_subset(names: Iterable[str], subset: Iterable[str]) -> tuple[str, ...]:
    """Deduplicate ``subset`` and put it in the canonical order of ``names``.

    Raises ValueError when a member is not in ``names``.
    """
    names = tuple(names)
    wanted = set(subset)
    strays = wanted - set(names)
    if strays:
        raise ValueError(
            "variables not in the formula: " + ", ".join(sorted(strays))
        )
    return tuple(n for n in names if n in wanted)


def format_var_set(names: Iterable[str]) -> str:
    return "{" + ",".join(names) + "}"
