"""Text syntax for iterated forests and for terms.

Forests: a bare natural is a color; ``[label:child,child]`` is a tree whose
label is written one level down (``[0]`` and ``[0:]`` are the singleton tree
labeled 0); ``{t,t,...}`` collects trees, ``{}`` is the empty forest.
Operands at mixed nesting levels are lifted upward automatically, so
``{0,[1:]}`` is a level-1 forest.

Terms: ``(u+v)`` is the join, ``(u .p v)`` the grade-p product, and
``G(a,b,c)`` the mind-change combinator; a number is a constant color.
The two product symbols select the signature and may not be mixed.

Serialization is canonical: children and forest members are emitted in
structural-key order, so equal quotient classes of minimal forests print
identically, byte for byte.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

from . import iterated
from .iterated import IForest, ITree
from .terms import Const, Dot, G, Join, Term


class ParseError(ValueError):
    """Syntax error with the offending token position."""

    def __init__(self, message: str, position: int) -> None:
        super().__init__(f"{message} (at position {position})")
        self.position = position


# ---------------------------------------------------------------------------
# Forest text.

@dataclass(frozen=True)
class TreeExpr:
    """Parsed tree node before level resolution."""

    label: "int | TreeExpr"
    children: tuple["TreeExpr | int", ...] = ()


@dataclass(frozen=True)
class ForestExpr:
    """Parsed forest literal before level resolution."""

    trees: tuple["TreeExpr | int", ...]


_FOREST_TOKEN = re.compile(r"\s*(\d+|[\[\]{}:,])")


class _Tokens:
    def __init__(self, text: str, pattern: re.Pattern) -> None:
        self.items: list[tuple[str, int]] = []
        pos = 0
        while pos < len(text):
            if text[pos].isspace():
                pos += 1
                continue
            m = pattern.match(text, pos)
            if not m:
                raise ParseError(f"unexpected character {text[pos]!r}", pos)
            self.items.append((m.group(1), m.start(1)))
            pos = m.end()
        self.index = 0

    def peek(self) -> str | None:
        if self.index < len(self.items):
            return self.items[self.index][0]
        return None

    def position(self) -> int:
        if self.index < len(self.items):
            return self.items[self.index][1]
        return self.items[-1][1] + len(self.items[-1][0]) if self.items else 0

    def take(self, expected: str | None = None) -> str:
        tok = self.peek()
        if tok is None:
            raise ParseError(
                f"unexpected end of input, expected {expected or 'more input'}",
                self.position(),
            )
        if expected is not None and tok != expected:
            raise ParseError(f"expected {expected!r}, got {tok!r}", self.position())
        self.index += 1
        return tok


def parse_forest(text: str, k: int | None = 2) -> IForest:
    """Parse forest text; colors must stay below ``k`` (None = unbounded)."""
    tokens = _Tokens(text, _FOREST_TOKEN)
    expr = _parse_forest_expr(tokens)
    if tokens.peek() is not None:
        raise ParseError(f"trailing input {tokens.peek()!r}", tokens.position())
    return _resolve_forest(expr, k)


def _parse_forest_expr(tokens: _Tokens) -> ForestExpr:
    if tokens.peek() == "{":
        tokens.take("{")
        trees: list[TreeExpr | int] = []
        if tokens.peek() != "}":
            trees.append(_parse_tree_expr(tokens))
            while tokens.peek() == ",":
                tokens.take(",")
                trees.append(_parse_tree_expr(tokens))
        tokens.take("}")
        return ForestExpr(tuple(trees))
    return ForestExpr((_parse_tree_expr(tokens),))


def _parse_tree_expr(tokens: _Tokens) -> "TreeExpr | int":
    tok = tokens.peek()
    if tok is None:
        raise ParseError("expected a tree", tokens.position())
    if tok.isdigit():
        tokens.take()
        return int(tok)
    if tok != "[":
        raise ParseError(f"expected a tree, got {tok!r}", tokens.position())
    tokens.take("[")
    label = _parse_tree_expr(tokens)
    children: list[TreeExpr | int] = []
    if tokens.peek() == ":":
        tokens.take(":")
        if tokens.peek() != "]":
            children.append(_parse_tree_expr(tokens))
            while tokens.peek() == ",":
                tokens.take(",")
                children.append(_parse_tree_expr(tokens))
    tokens.take("]")
    return TreeExpr(label, tuple(children))  # type: ignore[arg-type]


def _resolve_forest(expr: ForestExpr, k: int | None) -> IForest:
    if not expr.trees:
        return IForest(0)
    trees = [_resolve_tree(t, k) for t in expr.trees]
    level = max(t.level for t in trees)
    return IForest(level, tuple(iterated.lift_tree(t, level) for t in trees))


def _resolve_tree(expr: "TreeExpr | int", k: int | None) -> ITree:
    if isinstance(expr, int):
        if k is not None and expr >= k:
            raise ValueError(f"color {expr} outside alphabet of size {k}")
        return iterated.color(expr)
    label = _resolve_tree(expr.label, k)
    children = [_resolve_tree(c, k) for c in expr.children]
    level = max([label.level + 1] + [c.level for c in children])
    return ITree(
        level,
        iterated.lift_tree(label, level - 1),
        tuple(iterated.lift_tree(c, level) for c in children),
    )


def serialize_tree(t: ITree) -> str:
    t = iterated.canonical_tree(t)
    return _tree_text(t)


def _tree_text(t: ITree) -> str:
    if t.level == 0:
        return str(t.label)
    body = _tree_text(t.label)
    if t.children:
        return f"[{body}:{','.join(_tree_text(c) for c in t.children)}]"
    return f"[{body}]"


def serialize_forest(f: IForest) -> str:
    """Canonical text of a forest: sorted, braced, parseable back."""
    f = iterated.canonical(f)
    return "{" + ",".join(_tree_text(t) for t in f.trees) + "}"


# ---------------------------------------------------------------------------
# Term text.

_TERM_TOKEN = re.compile(r"\s*(\d+|[().+,]|G)")


def parse_term(text: str) -> Term:
    """Parse a term; returns a G-signature or star-signature term.

    The combinator ``G(...)`` and the graded product ``.p`` may not appear
    in the same term.
    """
    tokens = _Tokens(text, _TERM_TOKEN)
    term = _parse_term_expr(tokens)
    if tokens.peek() is not None:
        raise ParseError(f"trailing input {tokens.peek()!r}", tokens.position())
    if _uses_g(term) and _uses_dot(term):
        raise ValueError("mixed signatures: term uses both G(...) and .p")
    return term


def _parse_term_expr(tokens: _Tokens) -> Term:
    tok = tokens.peek()
    if tok is None:
        raise ParseError("expected a term", tokens.position())
    if tok.isdigit():
        tokens.take()
        return Const(int(tok))
    if tok == "G":
        tokens.take("G")
        tokens.take("(")
        a = _parse_term_expr(tokens)
        tokens.take(",")
        b = _parse_term_expr(tokens)
        tokens.take(",")
        c = _parse_term_expr(tokens)
        tokens.take(")")
        return G(a, b, c)
    if tok == "(":
        tokens.take("(")
        left = _parse_term_expr(tokens)
        op = tokens.take()
        if op == "+":
            right = _parse_term_expr(tokens)
            tokens.take(")")
            return Join(left, right)
        if op == ".":
            grade_tok = tokens.take()
            if not grade_tok.isdigit():
                raise ParseError(f"grade expected after '.', got {grade_tok!r}",
                                 tokens.position())
            right = _parse_term_expr(tokens)
            tokens.take(")")
            return Dot(int(grade_tok), left, right)
        raise ParseError(f"expected '+' or '.', got {op!r}", tokens.position())
    raise ParseError(f"expected a term, got {tok!r}", tokens.position())


def _uses_g(u: Term) -> bool:
    match u:
        case G():
            return True
        case Join(a, b):
            return _uses_g(a) or _uses_g(b)
        case Dot(_, a, b):
            return _uses_g(a) or _uses_g(b)
    return False


def _uses_dot(u: Term) -> bool:
    match u:
        case Dot():
            return True
        case Join(a, b):
            return _uses_dot(a) or _uses_dot(b)
        case G(a, b, c):
            return _uses_dot(a) or _uses_dot(b) or _uses_dot(c)
    return False


def serialize_term(u: Term) -> str:
    match u:
        case Const(color):
            return str(color)
        case Join(left, right):
            return f"({serialize_term(left)}+{serialize_term(right)})"
        case Dot(grade, left, right):
            return f"({serialize_term(left)} .{grade} {serialize_term(right)})"
        case G(on_halt, on_diverge, oracle):
            parts = ",".join(
                serialize_term(x) for x in (on_halt, on_diverge, oracle)
            )
            return f"G({parts})"
    raise TypeError(f"not a term: {u!r}")
