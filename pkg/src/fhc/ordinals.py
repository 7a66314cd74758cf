"""Cantor-normal-form ordinals below epsilon_0 and the graded level family.

An ordinal is a finite sum ``w^e1*c1 + ... + w^er*cr`` with strictly
decreasing ordinal exponents and positive integer coefficients; the empty
sum is zero.  Only what the level family needs is provided: comparison,
addition, peeling off the last power, and a text syntax (``w^2*2+w+3``).

``build_t`` turns an ordinal and a color into the tree index of the
corresponding hierarchy level, by induction on the ordinal: zero gives the
bare color, a successor stacks the color over the join of all one-step-lower
levels, a power of omega recurses into the exponent one grade up, and a
mixed limit multiplies the leading-power level onto the join of the rest.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from functools import total_ordering

from . import iterated
from .iterated import IForest


@total_ordering
@dataclass(frozen=True)
class Ordinal:
    """CNF term list; invariant: decreasing exponents, positive coefficients."""

    terms: tuple[tuple["Ordinal", int], ...] = ()

    def __post_init__(self) -> None:
        prev = None
        for exp, coef in self.terms:
            if not isinstance(exp, Ordinal) or coef < 1:
                raise ValueError("CNF terms need ordinal exponents and positive coefficients")
            if prev is not None and ord_compare(exp, prev) >= 0:
                raise ValueError("CNF exponents must strictly decrease")
            prev = exp
        object.__setattr__(self, "_hash", hash(self.terms))

    def __hash__(self) -> int:
        return self._hash  # type: ignore[attr-defined]

    def __lt__(self, other: "Ordinal") -> bool:
        return ord_compare(self, other) < 0

    def __repr__(self) -> str:
        return f"Ordinal({format_ordinal(self)!r})"

    def is_zero(self) -> bool:
        return not self.terms


ZERO = Ordinal()
ONE = Ordinal(((ZERO, 1),))


def from_int(n: int) -> Ordinal:
    if n < 0:
        raise ValueError("ordinals are non-negative")
    return Ordinal(((ZERO, n),)) if n else ZERO


def omega_pow(exp: Ordinal, coef: int = 1) -> Ordinal:
    return Ordinal(((exp, coef),))


OMEGA = omega_pow(ONE)


def ord_compare(a: Ordinal, b: Ordinal) -> int:
    """-1, 0 or 1: term lists compare lexicographically on (exponent, coefficient)."""
    for (ea, ca), (eb, cb) in zip(a.terms, b.terms):
        c = ord_compare(ea, eb)
        if c:
            return c
        if ca != cb:
            return -1 if ca < cb else 1
    if len(a.terms) != len(b.terms):
        return -1 if len(a.terms) < len(b.terms) else 1
    return 0


def ord_add(a: Ordinal, b: Ordinal) -> Ordinal:
    """Ordinal addition on CNF (left terms below b's lead are absorbed)."""
    if b.is_zero():
        return a
    lead_exp, lead_coef = b.terms[0]
    kept = [t for t in a.terms if ord_compare(t[0], lead_exp) > 0]
    merged = lead_coef
    if len(kept) < len(a.terms) and ord_compare(a.terms[len(kept)][0], lead_exp) == 0:
        merged += a.terms[len(kept)][1]
    return Ordinal(tuple(kept) + ((lead_exp, merged),) + b.terms[1:])


def peel_last(a: Ordinal) -> tuple[Ordinal, Ordinal]:
    """Write ``a = beta + w^gamma`` with gamma the smallest exponent of ``a``.

    ``beta`` is ``a`` with the last coefficient decremented (term dropped at
    zero) and is always a multiple of ``w^gamma``.
    """
    if a.is_zero():
        raise ValueError("zero has no last term")
    exp, coef = a.terms[-1]
    if coef > 1:
        beta = Ordinal(a.terms[:-1] + ((exp, coef - 1),))
    else:
        beta = Ordinal(a.terms[:-1])
    return beta, exp


# ---------------------------------------------------------------------------
# Text syntax: 0 | naturals | w | w^<ord> | *<nat> coefficients | + sums.

_TOKEN = re.compile(r"\s*(\d+|[w^*+()])")


class OrdinalSyntaxError(ValueError):
    pass


def parse_ordinal(text: str) -> Ordinal:
    """Parse the canonical syntax; non-canonical input is rejected, never
    normalized."""
    tokens = _tokenize(text)
    ordinal, pos = _parse_sum(tokens, 0)
    if pos != len(tokens):
        raise OrdinalSyntaxError(f"trailing input at token {pos}: {tokens[pos]!r}")
    return ordinal


def _tokenize(text: str) -> list[str]:
    tokens, pos = [], 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m:
            raise OrdinalSyntaxError(f"bad character at position {pos}: {text[pos]!r}")
        tokens.append(m.group(1))
        pos = m.end()
    if not tokens:
        raise OrdinalSyntaxError("empty ordinal")
    return tokens


def _parse_sum(tokens: list[str], pos: int) -> tuple[Ordinal, int]:
    terms: list[tuple[Ordinal, int]] = []
    while True:
        (exp, coef), pos = _parse_term(tokens, pos)
        if terms and ord_compare(exp, terms[-1][0]) >= 0:
            raise OrdinalSyntaxError("exponents must strictly decrease; input is not canonical")
        terms.append((exp, coef))
        if pos < len(tokens) and tokens[pos] == "+":
            pos += 1
            continue
        break
    if len(terms) == 1 and terms[0][1] == 0:
        return ZERO, pos
    if any(c == 0 for _, c in terms):
        raise OrdinalSyntaxError("zero coefficient in a sum")
    return Ordinal(tuple(terms)), pos


def _parse_term(tokens: list[str], pos: int) -> tuple[tuple[Ordinal, int], int]:
    if pos >= len(tokens):
        raise OrdinalSyntaxError("unexpected end of ordinal")
    tok = tokens[pos]
    if tok.isdigit():
        return (ZERO, int(tok)), pos + 1
    if tok != "w":
        raise OrdinalSyntaxError(f"expected 'w' or a number, got {tok!r}")
    pos += 1
    exp = ONE
    if pos < len(tokens) and tokens[pos] == "^":
        exp, pos = _parse_factor(tokens, pos + 1)
    coef = 1
    if pos < len(tokens) and tokens[pos] == "*":
        pos += 1
        if pos >= len(tokens) or not tokens[pos].isdigit():
            raise OrdinalSyntaxError("coefficient expected after '*'")
        coef = int(tokens[pos])
        if coef < 1:
            raise OrdinalSyntaxError("coefficients are positive")
        pos += 1
    return (exp, coef), pos


def _parse_factor(tokens: list[str], pos: int) -> tuple[Ordinal, int]:
    """A power atom: nat, w, w^factor, or a parenthesized sum."""
    if pos < len(tokens) and tokens[pos] == "(":
        ordinal, pos = _parse_sum(tokens, pos + 1)
        if pos >= len(tokens) or tokens[pos] != ")":
            raise OrdinalSyntaxError("unbalanced parenthesis in exponent")
        return ordinal, pos + 1
    if pos < len(tokens) and tokens[pos].isdigit():
        return from_int(int(tokens[pos])), pos + 1
    if pos < len(tokens) and tokens[pos] == "w":
        pos += 1
        if pos < len(tokens) and tokens[pos] == "^":
            inner, pos = _parse_factor(tokens, pos + 1)
            return omega_pow(inner), pos
        return OMEGA, pos
    raise OrdinalSyntaxError("exponent expected after '^'")


def format_ordinal(a: Ordinal) -> str:
    if a.is_zero():
        return "0"
    parts = []
    for exp, coef in a.terms:
        if exp.is_zero():
            parts.append(str(coef))
            continue
        if exp == ONE:
            body = "w"
        else:
            inner = format_ordinal(exp)
            body = f"w^({inner})" if "+" in inner or "*" in inner else f"w^{inner}"
        parts.append(body if coef == 1 else f"{body}*{coef}")
    return "+".join(parts)


# ---------------------------------------------------------------------------
# The ordinal-indexed family of level indices.

def build_t(alpha: Ordinal, i: int, n: int, k: int) -> IForest:
    """The level index for ordinal ``alpha``, polarity color ``i``, grade
    ``n``, over a finite alphabet of ``k`` colors.

    Products in the successor and limit clauses are taken at grade ``n``,
    which makes the grade parameter drive depth growth across powers of
    omega (guarded by the monotonicity acceptance test).
    """
    if k is None or k < 2:
        raise ValueError("finite alphabet required for the level family (k >= 2)")
    if not 0 <= i < k:
        raise ValueError(f"color {i} outside alphabet of size {k}")
    memo: dict = {}

    def rec(a: Ordinal, col: int, grade: int) -> IForest:
        key = (a, col, grade)
        hit = memo.get(key)
        if hit is not None:
            return hit
        if a.is_zero():
            out = iterated.color_forest(col)
        else:
            beta, gamma = peel_last(a)
            everyone = None
            if gamma.is_zero():
                # successor: col stacked over the join of all lower levels
                everyone = _join_all(rec(beta, j, grade) for j in range(k))
                out = iterated.dot_p(iterated.color_forest(col), everyone, grade)
            elif beta.is_zero():
                # a pure power of omega recurses into the exponent, one grade up
                out = rec(gamma, col, grade + 1)
            else:
                everyone = _join_all(rec(beta, j, grade) for j in range(k))
                head = rec(omega_pow(gamma), col, grade)
                out = iterated.dot_p(head, everyone, grade)
        memo[key] = out
        return out

    return rec(alpha, i, n)


def _join_all(parts) -> IForest:
    out = None
    for p in parts:
        out = p if out is None else iterated.join(out, p)
    assert out is not None
    return out
