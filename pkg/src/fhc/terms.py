"""Variable-free terms describing the algebra of complete numberings.

Two signatures share the constants and the binary join.  The first carries
the ternary mind-change combinator ``G`` (value flips from the diverge-branch
to the halt-branch when an oracle computation stops); the second replaces it
with the graded sequential products ``.^p`` whose grade records how many
jumps the implicit oracle sits above the bottom degree.

Every term denotes an iterated colored forest through ``interpret``; the
order and equivalence questions about the numbering algebra are decided
there, which is what makes the quotient structure computably presentable.
``encode`` is the converse direction: the canonical term of a forest, with a
chosen jump shift.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache, reduce

from . import iterated
from .iterated import IForest, ITree


@dataclass(frozen=True)
class Const:
    """A constant color ``i``; denotes the constant partition."""

    color: int

    def __post_init__(self) -> None:
        if self.color < 0:
            raise ValueError("colors are non-negative")


@dataclass(frozen=True)
class Join:
    left: "Term"
    right: "Term"


@dataclass(frozen=True)
class G:
    """Mind-change combinator: ``on_diverge`` until the oracle halts, then
    ``on_halt`` takes over."""

    on_halt: "GTerm"
    on_diverge: "GTerm"
    oracle: "GTerm"


@dataclass(frozen=True)
class Dot:
    """``left .^grade right``: the graded sequential product."""

    grade: int
    left: "STerm"
    right: "STerm"

    def __post_init__(self) -> None:
        if self.grade < 0:
            raise ValueError("grade must be a natural number")


GTerm = Const | Join | G
STerm = Const | Join | Dot
Term = Const | Join | G | Dot


def jump_term(n: int) -> GTerm:
    """The n-th jump constant: 0 for n = 0, then G(0, 1, previous)."""
    t: GTerm = Const(0)
    for _ in range(n):
        t = G(Const(0), Const(1), t)
    return t


def jump_height(u: GTerm) -> int:
    """How many jumps above bottom the denoted numbering sits.

    Purely syntactic: a G whose halt and diverge branches are the same
    constant collapses to that constant, regardless of the oracle.
    """
    match u:
        case Const():
            return 0
        case Join(left, right):
            return max(jump_height(left), jump_height(right))
        case G(on_halt, on_diverge, oracle):
            if isinstance(on_halt, Const) and on_halt == on_diverge:
                return 0
            return max(
                jump_height(on_halt),
                jump_height(on_diverge),
                jump_height(oracle) + 1,
            )
    raise TypeError(f"not a G-signature term: {u!r}")


def g_to_s(u: GTerm) -> STerm:
    """Translate the mind-change combinator into graded products."""
    match u:
        case Const():
            return u
        case Join(left, right):
            return Join(g_to_s(left), g_to_s(right))
        case G(on_halt, on_diverge, oracle):
            return Dot(jump_height(oracle), g_to_s(on_diverge), g_to_s(on_halt))
    raise TypeError(f"not a G-signature term: {u!r}")


def s_to_g(u: STerm) -> GTerm:
    """Expand graded products back into the mind-change combinator.

    This is the single place where the operand swap between the two
    signatures happens: ``left .^p right`` becomes
    ``G(right', left', jump_term(p))``.
    """
    match u:
        case Const():
            return u
        case Join(left, right):
            return Join(s_to_g(left), s_to_g(right))
        case Dot(grade, left, right):
            return G(s_to_g(right), s_to_g(left), jump_term(grade))
    raise TypeError(f"not a star-signature term: {u!r}")


def restrict_level(u: STerm, n: int) -> STerm:
    """Rewrite ``u`` into a term whose grades all lie below ``n``.

    Operands are restricted first; a product of grade >= n survives only by
    collapsing two syntactically equal constant operands.  Anything else at
    such a grade denotes a numbering above the n-th jump and is rejected.
    """
    match u:
        case Const():
            return u
        case Join(left, right):
            return Join(restrict_level(left, n), restrict_level(right, n))
        case Dot(grade, left, right):
            rl, rr = restrict_level(left, n), restrict_level(right, n)
            if grade < n:
                return Dot(grade, rl, rr)
            if isinstance(rl, Const) and rl == rr:
                return rl
            raise ValueError(f"term exceeds jump bound {n}")
    raise TypeError(f"not a star-signature term: {u!r}")


def window_normalize(u: STerm, n: int, m: int) -> STerm:
    """Push ``u`` into the grade window [n, n+m): low grades become joins.

    Grades at or above ``n + m`` are outside the window and rejected.
    """
    match u:
        case Const():
            return u
        case Join(left, right):
            return Join(window_normalize(left, n, m), window_normalize(right, n, m))
        case Dot(grade, left, right):
            if grade >= n + m:
                raise ValueError(f"term outside window [{n}, {n + m})")
            wl = window_normalize(left, n, m)
            wr = window_normalize(right, n, m)
            if grade < n:
                return Join(wl, wr)
            return Dot(grade, wl, wr)
    raise TypeError(f"not a star-signature term: {u!r}")


def term_s(u: STerm) -> STerm:
    """Shift every grade up by one (the level-shift on terms)."""
    match u:
        case Const():
            return u
        case Join(left, right):
            return Join(term_s(left), term_s(right))
        case Dot(grade, left, right):
            return Dot(grade + 1, term_s(left), term_s(right))
    raise TypeError(f"not a star-signature term: {u!r}")


def term_r(u: STerm) -> STerm:
    """Shift grades down by one; a grade-0 product falls apart into a join."""
    match u:
        case Const():
            return u
        case Join(left, right):
            return Join(term_r(left), term_r(right))
        case Dot(grade, left, right):
            if grade == 0:
                return Join(term_r(left), term_r(right))
            return Dot(grade - 1, term_r(left), term_r(right))
    raise TypeError(f"not a star-signature term: {u!r}")


# ---------------------------------------------------------------------------
# Between forests and terms.

def _join_all(parts: list[STerm]) -> STerm:
    return reduce(Join, parts)


def encode(f: IForest, shift: int = 0) -> STerm:
    """The canonical term of a forest, with grades starting at ``shift``.

    All grades of the result lie in [shift, shift + level).  The empty
    forest denotes the bottom class, which no term reaches.
    """
    if f.is_empty():
        raise ValueError("bottom has no term")
    return _join_all([_encode_tree(t, shift) for t in f.trees])


@lru_cache(maxsize=None)
def _encode_tree(t: ITree, shift: int) -> STerm:
    if t.level == 0:
        return Const(t.label)
    if not t.children:
        return _encode_tree(t.label, shift + 1)
    children = _join_all([_encode_tree(c, shift) for c in t.children])
    return Dot(shift, _encode_tree(t.label, shift + 1), children)


@lru_cache(maxsize=None)
def interpret(u: STerm) -> IForest:
    """Evaluate a term in the forest algebra (joins and graded products)."""
    match u:
        case Const(color):
            return iterated.color_forest(color)
        case Join(left, right):
            return iterated.join(interpret(left), interpret(right))
        case Dot(grade, left, right):
            return iterated.dot_p(interpret(left), interpret(right), grade)
    raise TypeError(f"not a star-signature term: {u!r}")


def term_leq(u: STerm, v: STerm, n: int = 0) -> bool:
    """Decide the n-th derived order between the denoted numberings."""
    return iterated.colim_leq(interpret(u), interpret(v), n)


def term_equiv(u: STerm, v: STerm, n: int = 0) -> bool:
    return term_leq(u, v, n) and term_leq(v, u, n)
