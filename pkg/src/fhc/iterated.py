"""Iterated colored forests: trees labeled by trees labeled by ... colors.

Level 0 holds the bare colors ``0 .. k-1``; a tree at level ``m+1`` is a
finite rooted tree whose every node carries a level-``m`` tree as its label.
All levels embed into one big structure via the canonical lifting ``lift``
(a color becomes the singleton tree it labels), so forests of different
levels are always comparable after lifting to a common level.

On top of the embedding order ``<=^0`` the module provides the level-shift
maps ``s_lift`` (wrap as a one-node tree a level up) and ``r_drop`` (join all
node labels a level down), the derived preorders ``<=^n`` that compare
``r_drop`` images, the graded sequential products, and minimization.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from . import forests
from .forests import LabelPreorder, LForest, LTree


@dataclass(frozen=True)
class ITree:
    """One tree of an iterated forest.

    At level 0 the ``label`` is a color (an int) and there are no children;
    at level ``m > 0`` the label is an ``ITree`` of level ``m - 1`` and the
    children are trees of the same level ``m``.
    """

    level: int
    label: "int | ITree"
    children: tuple["ITree", ...] = ()

    def __post_init__(self) -> None:
        if self.level == 0:
            if not isinstance(self.label, int) or self.label < 0:
                raise ValueError("level-0 tree must be labeled by a color")
            if self.children:
                raise ValueError("level-0 tree has no children")
        else:
            if not isinstance(self.label, ITree) or self.label.level != self.level - 1:
                raise ValueError(
                    f"level-{self.level} tree needs a level-{self.level - 1} label"
                )
            for c in self.children:
                if c.level != self.level:
                    raise ValueError("children must sit at the parent's level")
        object.__setattr__(self, "_hash", hash((self.level, self.label, self.children)))

    def __hash__(self) -> int:
        return self._hash  # type: ignore[attr-defined]

    @property
    def size(self) -> int:
        """Total number of color occurrences through all nestings."""
        if self.level == 0:
            return 1
        return self.label.size + sum(c.size for c in self.children)


@dataclass(frozen=True)
class IForest:
    """A finite sequence of same-level trees; may be empty at any level."""

    level: int
    trees: tuple[ITree, ...] = ()

    def __post_init__(self) -> None:
        for t in self.trees:
            if t.level != self.level:
                raise ValueError("forest level differs from tree level")
        object.__setattr__(self, "_hash", hash((self.level, self.trees)))

    def __hash__(self) -> int:
        return self._hash  # type: ignore[attr-defined]

    @property
    def size(self) -> int:
        return sum(t.size for t in self.trees)

    def is_empty(self) -> bool:
        return not self.trees


def color(i: int) -> ITree:
    return ITree(0, i)


def color_forest(*colors: int) -> IForest:
    return IForest(0, tuple(color(i) for i in colors))


def itree(label: ITree, *children: ITree) -> ITree:
    return ITree(label.level + 1, label, tuple(children))


def iforest(*trees: ITree) -> IForest:
    if not trees:
        raise ValueError("level of an empty forest is ambiguous; use IForest")
    return IForest(trees[0].level, tuple(trees))


def singleton(t: ITree) -> IForest:
    return IForest(t.level, (t,))


# ---------------------------------------------------------------------------
# Lifting between levels.

@lru_cache(maxsize=None)
def _lift_one(t: ITree) -> ITree:
    if t.level == 0:
        # a color lifts to the singleton tree it labels
        return ITree(1, t)
    return ITree(
        t.level + 1, _lift_one(t.label), tuple(_lift_one(c) for c in t.children)
    )


def lift_tree(t: ITree, target: int) -> ITree:
    if target < t.level:
        raise ValueError("cannot lower level by lifting")
    while t.level < target:
        t = _lift_one(t)
    return t


def lift(f: IForest, target: int) -> IForest:
    """Embed ``f`` at a higher level without changing its class."""
    if target < f.level:
        raise ValueError("cannot lower level by lifting")
    return IForest(target, tuple(lift_tree(t, target) for t in f.trees))


@lru_cache(maxsize=None)
def _unlift_tree(t: ITree) -> "ITree | None":
    """Invert the one-step lifting where possible, else None."""
    if t.level == 0:
        return None
    if t.level == 1:
        # only singleton shapes arise from lifting a color
        return t.label if not t.children else None
    label = _unlift_tree(t.label)
    if label is None:
        return None
    children = []
    for c in t.children:
        u = _unlift_tree(c)
        if u is None:
            return None
        children.append(u)
    return ITree(t.level - 1, label, tuple(children))


def unlift(f: IForest) -> IForest:
    """Drop as many levels as lifting can reconstruct; class-preserving.

    The result is the lowest-level member of the class with the same shape,
    e.g. the lift of a color forest comes back down to the colors.
    """
    while f.level > 0:
        if f.is_empty():
            f = IForest(f.level - 1)
            continue
        lowered = [_unlift_tree(t) for t in f.trees]
        if any(t is None for t in lowered):
            return f
        f = IForest(f.level - 1, tuple(lowered))  # type: ignore[arg-type]
    return f


# ---------------------------------------------------------------------------
# The order at relation level 0: the embedding order, instantiated with the
# label preorder one level down (down to color equality at the bottom).

@lru_cache(maxsize=None)
def _as_ltree(t: ITree) -> LTree:
    return LTree(t.label, tuple(_as_ltree(c) for c in t.children))


def _as_lforest(f: IForest) -> LForest:
    return LForest(tuple(_as_ltree(t) for t in f.trees))


def _from_ltree(t: LTree, level: int) -> ITree:
    return ITree(level, t.label, tuple(_from_ltree(c, level) for c in t.children))


def _from_lforest(f: LForest, level: int) -> IForest:
    return IForest(level, tuple(_from_ltree(t, level) for t in f.trees))


@lru_cache(maxsize=None)
def tree_leq0(a: ITree, b: ITree) -> bool:
    """The embedding order on two trees of the same level."""
    if a.level == 0:
        return a.label == b.label
    return forests.h_leq(
        LForest((_as_ltree(a),)), LForest((_as_ltree(b),)), LABEL_ORDER
    )


#: iterated trees compared by the embedding order of their own level;
#: serves as the label preorder one level up
LABEL_ORDER = LabelPreorder(tree_leq0, "iterated trees")


@lru_cache(maxsize=None)
def forest_leq0(a: IForest, b: IForest) -> bool:
    p = max(a.level, b.level)
    a, b = lift(a, p), lift(b, p)
    if p == 0:
        present = {t.label for t in b.trees}
        return all(t.label in present for t in a.trees)
    return forests.h_leq(_as_lforest(a), _as_lforest(b), LABEL_ORDER)


def colim_leq(a: IForest, b: IForest, n: int = 0) -> bool:
    """Decide ``a <=^n b``; operands may sit at different levels.

    ``<=^0`` is the embedding order after lifting to a common level;
    ``<=^(n+1)`` compares the ``r_drop`` images at ``n``.
    """
    p = max(a.level, b.level)
    a, b = lift(a, p), lift(b, p)
    for _ in range(n):
        a, b = r_drop(a), r_drop(b)
    return forest_leq0(a, b)


def colim_equiv(a: IForest, b: IForest, n: int = 0) -> bool:
    return colim_leq(a, b, n) and colim_leq(b, a, n)


def colim_leq_oracle(
    a: IForest, b: IForest, n: int = 0, bound: int | None = None
) -> bool:
    """``colim_leq`` decided by the brute-force map search; small inputs only."""
    p = max(a.level, b.level)
    a, b = lift(a, p), lift(b, p)
    for _ in range(n):
        a, b = r_drop(a), r_drop(b)
    if max(a.level, b.level) == 0:
        present = {t.label for t in b.trees}
        return all(t.label in present for t in a.trees)
    return forests.h_leq_oracle(_as_lforest(a), _as_lforest(b), LABEL_ORDER, bound)


# ---------------------------------------------------------------------------
# Level-shift maps and graded products.

def s_lift(f: IForest) -> IForest:
    """Wrap every tree as the label of a fresh one-node tree a level up."""
    return IForest(f.level + 1, tuple(ITree(f.level + 1, t) for t in f.trees))


def r_drop(f: IForest) -> IForest:
    """Join all node labels one level down; fixes level-0 forests."""
    if f.level == 0:
        return f
    labels: list[ITree] = []

    def collect(t: ITree) -> None:
        labels.append(t.label)
        for c in t.children:
            collect(c)

    for t in f.trees:
        collect(t)
    return IForest(f.level - 1, tuple(labels))


def join(f: IForest, g: IForest) -> IForest:
    p = max(f.level, g.level)
    f, g = lift(f, p), lift(g, p)
    return IForest(p, f.trees + g.trees)


def dot_p(f: IForest, g: IForest, p: int = 0) -> IForest:
    """The graded sequential product ``f .^p g``.

    Grade 0 stacks ``g`` above every leaf of ``f`` (after lifting to a common
    level, at least 1); grade ``p + 1`` is ``s_lift`` of the grade-``p``
    product of the ``r_drop`` images.
    """
    if p > 0:
        return s_lift(dot_p(r_drop(f), r_drop(g), p - 1))
    level = max(f.level, g.level, 1)
    f, g = lift(f, level), lift(g, level)
    return _from_lforest(
        forests.seq_product(_as_lforest(f), _as_lforest(g)), level
    )


# ---------------------------------------------------------------------------
# Minimization and canonical form.

def iminimize(f: IForest) -> IForest:
    """The least representative: minimal as a forest, labels minimal too."""
    if f.level == 0:
        seen: set[int] = set()
        kept = [t for t in f.trees if not (t.label in seen or seen.add(t.label))]
        return IForest(0, tuple(kept))
    shape = forests.minimize(_as_lforest(f), LABEL_ORDER)
    return IForest(
        f.level, tuple(_imin_labels(t, f.level) for t in shape.trees)
    )


def _imin_labels(t: LTree, level: int) -> ITree:
    return ITree(
        level,
        _imin_tree(t.label),
        tuple(_imin_labels(c, level) for c in t.children),
    )


def _imin_tree(t: ITree) -> ITree:
    if t.level == 0:
        return t
    m = iminimize(singleton(t))
    assert len(m.trees) == 1  # minimizing a tree yields a tree
    return m.trees[0]


@lru_cache(maxsize=None)
def sort_key(t: ITree):
    if t.level == 0:
        return (0, t.label)
    return (1, sort_key(t.label), tuple(sorted(sort_key(c) for c in t.children)))


def canonical(f: IForest) -> IForest:
    """Reorder children and trees by a structural key; class-preserving.

    Empty forests come out at level 0: they all denote the bottom class and
    the text form carries no level.
    """
    if f.is_empty():
        return IForest(0)
    return IForest(f.level, tuple(sorted(
        (canonical_tree(t) for t in f.trees), key=sort_key
    )))


@lru_cache(maxsize=None)
def canonical_tree(t: ITree) -> ITree:
    if t.level == 0:
        return t
    return ITree(
        t.level,
        canonical_tree(t.label),
        tuple(sorted((canonical_tree(c) for c in t.children), key=sort_key)),
    )


# ---------------------------------------------------------------------------
# Deterministic enumeration (canonical representatives only).

def enumerate_trees(k: int, max_size: int, level: int) -> list[ITree]:
    """All canonical trees at ``level`` with size up to ``max_size``."""
    return [t for s in range(1, max_size + 1) for t in _trees_exact(k, s, level)]


@lru_cache(maxsize=None)
def _trees_exact(k: int, size: int, level: int) -> tuple[ITree, ...]:
    if size < 1:
        return ()
    if level == 0:
        return tuple(color(i) for i in range(k)) if size == 1 else ()
    out = []
    for label_size in range(1, size + 1):
        for label in _trees_exact(k, label_size, level - 1):
            for ch in _tuples_exact(k, size - label_size, level):
                out.append(ITree(level, label, ch))
    return tuple(sorted(out, key=sort_key))


@lru_cache(maxsize=None)
def _tuples_exact(k: int, total: int, level: int) -> tuple[tuple[ITree, ...], ...]:
    pool = enumerate_trees(k, total, level)
    out: list[tuple[ITree, ...]] = []

    def rec(start: int, remaining: int, acc: list[ITree]) -> None:
        if remaining == 0:
            out.append(tuple(acc))
            return
        for i in range(start, len(pool)):
            t = pool[i]
            if t.size <= remaining:
                acc.append(t)
                rec(i, remaining - t.size, acc)
                acc.pop()

    rec(0, total, [])
    return tuple(out)


def enumerate_forests(k: int, max_size: int, max_level: int) -> list[IForest]:
    """All canonical forests with level up to ``max_level`` and size up to
    ``max_size``, in a fixed (size-ascending) order; the empty forest first.
    """
    out = [IForest(0)]
    for size in range(1, max_size + 1):
        for level in range(max_level + 1):
            for ch in _tuples_exact(k, size, level):
                out.append(IForest(level, ch))
    return out


def count_forests(k: int, max_size: int, max_level: int) -> int:
    """What ``enumerate_forests`` would yield, counted without materializing."""
    return 1 + sum(
        _count_tuples(k, size, level)
        for size in range(1, max_size + 1)
        for level in range(max_level + 1)
    )


@lru_cache(maxsize=None)
def _count_trees(k: int, size: int, level: int) -> int:
    if size < 1:
        return 0
    if level == 0:
        return k if size == 1 else 0
    return sum(
        _count_trees(k, label_size, level - 1)
        * _count_tuples(k, size - label_size, level)
        for label_size in range(1, size + 1)
    )


@lru_cache(maxsize=None)
def _count_tuples(k: int, total: int, level: int) -> int:
    from math import comb

    # multisets of trees with sizes summing to total, grouped by tree size
    def grouped(remaining: int, size: int) -> int:
        if remaining == 0:
            return 1
        if size > remaining:
            return 0
        kinds = _count_trees(k, size, level)
        out = 0
        for copies in range(remaining // size + 1):
            ways = comb(kinds + copies - 1, copies) if copies else 1
            if ways == 0:
                continue
            out += ways * grouped(remaining - copies * size, size + 1)
        return out

    return grouped(total, 1)
