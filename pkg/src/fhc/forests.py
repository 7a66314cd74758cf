"""Finite labeled trees and forests under the homomorphic embedding order.

A forest is a finite multiset of finite rooted trees whose nodes carry labels
from some preorder.  Forest ``A`` lies below forest ``B`` when some monotone
map of node posets sends every node of ``A`` to a node of ``B`` with a larger
or equal label.  This module decides that order two independent ways (a
structural recursion and a brute-force search over node maps), minimizes
forests within their equivalence class, and provides the join and sequential
product that make the quotient a semilattice.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from typing import Any, Callable, Iterator

DEFAULT_ORACLE_BOUND = 10_000_000
ORACLE_BOUND_ENV = "FHC_ORACLE_BOUND"


class OracleBoundError(RuntimeError):
    """Raised when the brute-force search space exceeds the configured bound."""


@dataclass(frozen=True)
class LabelPreorder:
    """A label domain given by its comparison predicate.

    ``leq`` must be reflexive and transitive on every label actually used;
    this is assumed, not checked.
    """

    leq: Callable[[Any, Any], bool]
    name: str = "preorder"

    def __repr__(self) -> str:
        return f"LabelPreorder({self.name})"


#: Labels comparable only to themselves (equality as the preorder).
ANTICHAIN = LabelPreorder(lambda a, b: a == b, "antichain")


@dataclass(frozen=True)
class LTree:
    """A finite rooted tree with a label at every node.

    Child order is stored but carries no meaning for the embedding order;
    canonicalization may reorder children freely.
    """

    label: Any
    children: tuple["LTree", ...] = ()

    def __post_init__(self) -> None:
        object.__setattr__(self, "_hash", hash((self.label, self.children)))

    def __hash__(self) -> int:
        return self._hash  # type: ignore[attr-defined]

    @property
    def size(self) -> int:
        return 1 + sum(c.size for c in self.children)

    def nodes(self) -> Iterator["LTree"]:
        """All subtree handles in preorder; one per node."""
        yield self
        for c in self.children:
            yield from c.nodes()


@dataclass(frozen=True)
class LForest:
    """A finite sequence of trees; the empty forest is the bottom element."""

    trees: tuple[LTree, ...] = ()

    def __post_init__(self) -> None:
        object.__setattr__(self, "_hash", hash(self.trees))

    def __hash__(self) -> int:
        return self._hash  # type: ignore[attr-defined]

    @property
    def size(self) -> int:
        return sum(t.size for t in self.trees)

    def is_empty(self) -> bool:
        return not self.trees


def tree(label: Any, *children: LTree) -> LTree:
    return LTree(label, tuple(children))


def forest(*trees: LTree) -> LForest:
    return LForest(tuple(trees))


def singleton(label: Any) -> LForest:
    return LForest((LTree(label),))


# ---------------------------------------------------------------------------
# The embedding order, decided by structural recursion.

def _tree_leq(a: LTree, b: LTree, q: LabelPreorder, memo: dict) -> bool:
    key = (a, b)
    hit = memo.get(key)
    if hit is not None:
        return hit
    a_single = not a.children
    b_single = not b.children
    if a_single and b_single:
        out = q.leq(a.label, b.label)
    elif a_single:
        out = any(q.leq(a.label, n.label) for n in b.nodes())
    elif b_single:
        out = all(q.leq(n.label, b.label) for n in a.nodes())
    elif q.leq(a.label, b.label):
        out = all(_tree_leq(c, b, q, memo) for c in a.children)
    else:
        out = any(_tree_leq(a, c, q, memo) for c in b.children)
    memo[key] = out
    return out


def h_leq(a: LForest, b: LForest, q: LabelPreorder) -> bool:
    """Decide whether ``a`` embeds into ``b`` over the label preorder ``q``.

    The empty forest is below everything; otherwise every tree of ``a`` must
    embed into some tree of ``b``.
    """
    memo: dict = {}
    return all(
        any(_tree_leq(ta, tb, q, memo) for tb in b.trees) for ta in a.trees
    )


def h_equiv(a: LForest, b: LForest, q: LabelPreorder) -> bool:
    return h_leq(a, b, q) and h_leq(b, a, q)


# ---------------------------------------------------------------------------
# The same order decided from the definition: search for a monotone,
# label-respecting map of nodes.  Ground truth for the recursion above.

def _flatten(f: LForest) -> tuple[list[Any], list[int]]:
    """Preorder node labels and parent indices (-1 for roots of trees)."""
    labels: list[Any] = []
    parents: list[int] = []

    def walk(t: LTree, parent: int) -> None:
        idx = len(labels)
        labels.append(t.label)
        parents.append(parent)
        for c in t.children:
            walk(c, idx)

    for t in f.trees:
        walk(t, -1)
    return labels, parents


def oracle_bound() -> int:
    return int(os.environ.get(ORACLE_BOUND_ENV, DEFAULT_ORACLE_BOUND))


def h_leq_oracle(
    a: LForest, b: LForest, q: LabelPreorder, bound: int | None = None
) -> bool:
    """Decide the embedding order by exhausting node maps from ``a`` to ``b``.

    Intended for small inputs; refuses when the map space ``|b| ** |a|``
    exceeds ``bound`` (default from FHC_ORACLE_BOUND or 10**7).
    """
    if bound is None:
        bound = oracle_bound()
    a_labels, a_parents = _flatten(a)
    b_labels, b_parents = _flatten(b)
    if not a_labels:
        return True
    if len(b_labels) ** len(a_labels) > bound:
        raise OracleBoundError(
            f"oracle too large: {len(b_labels)}**{len(a_labels)} maps"
        )
    if not b_labels:
        return False

    def below(i: int, j: int) -> bool:
        # j is i or a descendant of i in b's node poset
        while j != -1:
            if j == i:
                return True
            j = b_parents[j]
        return False

    image = [-1] * len(a_labels)

    def assign(i: int) -> bool:
        if i == len(a_labels):
            return True
        p = a_parents[i]
        for j in range(len(b_labels)):
            if not q.leq(a_labels[i], b_labels[j]):
                continue
            if p != -1 and not below(image[p], j):
                continue
            image[i] = j
            if assign(i + 1):
                return True
        image[i] = -1
        return False

    return assign(0)


# ---------------------------------------------------------------------------
# Minimization: the least-node-count representative of a class.

def minimize(f: LForest, q: LabelPreorder) -> LForest:
    """Return a forest of minimum node count equivalent to ``f``.

    Follows the standard recursion: dominated trees are dropped, nodes whose
    whole path from the root stays below the root label are spliced out, and
    a root covering its only child is removed.
    """
    if f.size <= 1:
        return f
    if len(f.trees) > 1:
        memo: dict = {}
        kept: list[LTree] = []
        for i, t in enumerate(f.trees):
            dominated = False
            for j, u in enumerate(f.trees):
                if i == j or not _tree_leq(t, u, q, memo):
                    continue
                # strictly below, or a duplicate of an earlier tree
                if not _tree_leq(u, t, q, memo) or j < i:
                    dominated = True
                    break
            if not dominated:
                kept.append(t)
        return LForest(tuple(_min_tree(t, q) for t in kept))
    return LForest((_min_tree(f.trees[0], q),))


def _min_tree(t: LTree, q: LabelPreorder) -> LTree:
    if not t.children:
        return t
    root = t.label
    t1 = LTree(root, minimize(LForest(t.children), q).trees)
    t2 = LTree(root, tuple(_strip_dominated(t1, root, q)))
    t3 = LTree(root, minimize(LForest(t2.children), q).trees)
    if len(t3.children) == 1 and q.leq(root, t3.children[0].label):
        return t3.children[0]
    return t3


def _strip_dominated(t: LTree, root: Any, q: LabelPreorder) -> Iterator[LTree]:
    # splice out every node reachable from the root through labels <= root
    for c in t.children:
        if q.leq(c.label, root):
            yield from _strip_dominated(c, root, q)
        else:
            yield c


def is_join_irreducible(f: LForest, q: LabelPreorder) -> bool:
    """Whether ``f`` is not a join of two strictly smaller classes."""
    if f.is_empty():
        raise ValueError("bottom element: the empty forest is not join-irreducible")
    return len(minimize(f, q).trees) == 1


def canonical_decomposition(f: LForest, q: LabelPreorder) -> tuple[LTree, ...]:
    """The pairwise incomparable minimal trees joining to ``f``.

    Empty for the empty forest (supremum of the empty family).
    """
    return minimize(f, q).trees


# ---------------------------------------------------------------------------
# Semilattice operations.

def join(f: LForest, g: LForest) -> LForest:
    """Concatenation of tree sequences; the supremum in the quotient."""
    return LForest(f.trees + g.trees)


def seq_product(f: LForest, g: LForest) -> LForest:
    """Put a copy of ``g`` above every leaf of ``f``.

    An empty ``f`` acts as a single virtual leaf, so the bottom element is
    neutral on the left.
    """
    if f.is_empty():
        return g

    def graft(t: LTree) -> LTree:
        if not t.children:
            return LTree(t.label, g.trees)
        return LTree(t.label, tuple(graft(c) for c in t.children))

    return LForest(tuple(graft(t) for t in f.trees))
