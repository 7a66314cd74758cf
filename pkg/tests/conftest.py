"""Shared enumeration and random-generation helpers for the test suite."""

from __future__ import annotations

import random
from functools import lru_cache

from fhc.forests import LForest, LTree
from fhc import iterated


def ltree_key(t: LTree):
    return (t.label, tuple(sorted(ltree_key(c) for c in t.children)))


@lru_cache(maxsize=None)
def all_ltrees(k: int, size: int) -> tuple[LTree, ...]:
    """Canonical int-labeled trees with exactly ``size`` nodes, sorted."""
    if size < 1:
        return ()
    out = []
    for label in range(k):
        for ch in _child_tuples(k, size - 1):
            out.append(LTree(label, ch))
    return tuple(sorted(out, key=ltree_key))


@lru_cache(maxsize=None)
def _child_tuples(k: int, total: int) -> tuple[tuple[LTree, ...], ...]:
    """Key-sorted tree tuples with node counts summing to exactly ``total``."""
    pool = [t for s in range(1, total + 1) for t in all_ltrees(k, s)]
    out: list[tuple[LTree, ...]] = []

    def rec(start: int, remaining: int, acc: list[LTree]) -> None:
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


def all_lforests(k: int, max_nodes: int) -> list[LForest]:
    """Every canonical forest with at most ``max_nodes`` nodes, incl. empty."""
    out = [LForest(())]
    for size in range(1, max_nodes + 1):
        out.extend(LForest(ch) for ch in _child_tuples(k, size))
    return out


def random_iforest(
    rng: random.Random, k: int, max_level: int, max_nodes: int
) -> iterated.IForest:
    """A pseudo-random iterated forest: bounded level, size, uniform colors."""
    level = rng.randint(0, max_level)
    n_trees = rng.randint(0 if level > 0 else 1, 2)
    return iterated.IForest(
        level, tuple(random_itree(rng, k, level, max_nodes) for _ in range(n_trees))
    )


def random_itree(
    rng: random.Random, k: int, level: int, max_nodes: int
) -> iterated.ITree:
    if level == 0:
        return iterated.color(rng.randrange(k))
    label = random_itree(rng, k, level - 1, max_nodes)
    n_children = rng.randint(0, max(0, max_nodes - 1))
    children = tuple(
        random_itree(rng, k, level, max(1, max_nodes // 2)) for _ in range(n_children)
    )
    return iterated.ITree(level, label, children)
