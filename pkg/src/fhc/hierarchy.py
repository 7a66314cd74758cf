"""Level semantics over the discrete space of naturals.

A level descriptor is a nonempty iterated forest; the corresponding class
of k-partitions is never materialized.  Verdicts about inclusion between
levels are read off the embedding order of the descriptors, which is sound
and complete here: descriptor order implies level inclusion, and the
hierarchy does not collapse, so non-order implies non-inclusion.  The
complete member of a level is returned symbolically, as the mind-change
term of the descriptor.

The quotient machinery enumerates every forest within resource bounds,
buckets by equivalence, and emits the resulting poset as a Hasse diagram
(DOT text) or a line-oriented cache file.  Both outputs are deterministic,
byte for byte.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import iterated, notation, terms
from .iterated import IForest
from .terms import GTerm

EQUAL = "equal"
SUBSET = "subset"
SUPERSET = "superset"
INCOMPARABLE = "incomparable"

DEFAULT_SEGMENT_BOUND = 200_000


class SegmentBoundError(RuntimeError):
    """Raised when the requested segment enumeration is too large."""


@dataclass(frozen=True)
class LevelDescriptor:
    """Index of one hierarchy level; join-irreducible descriptors are the
    non-self-dual levels (single trees)."""

    forest: IForest

    def __post_init__(self) -> None:
        if self.forest.is_empty():
            raise ValueError("a level descriptor needs a nonempty forest")


def level_relation(t: LevelDescriptor, v: LevelDescriptor) -> str:
    """Inclusion verdict between the two levels over the naturals.

    ``subset``/``superset`` are strict; ``incomparable`` certifies that
    neither level contains the other.
    """
    fwd = iterated.colim_leq(t.forest, v.forest, 0)
    bwd = iterated.colim_leq(v.forest, t.forest, 0)
    if fwd and bwd:
        return EQUAL
    if fwd:
        return SUBSET
    if bwd:
        return SUPERSET
    return INCOMPARABLE


def complete_witness(t: LevelDescriptor, shift: int = 0) -> GTerm:
    """A symbolic description of a partition complete in the level.

    The term is read as a nested mind-change procedure over iterated jump
    oracles; it is never evaluated as an actual numbering.
    """
    return terms.s_to_g(terms.encode(t.forest, shift))


# ---------------------------------------------------------------------------
# Quotient segments.

@dataclass(frozen=True)
class QuotientSegment:
    """An initial segment of the quotient poset.

    ``classes`` holds one minimal canonical representative per equivalence
    class; ``covers`` is the transitive reduction of the strict order, as
    (lower index, upper index) pairs.
    """

    k: int
    max_nodes: int
    max_level: int
    classes: tuple[IForest, ...]
    covers: tuple[tuple[int, int], ...]


def enumerate_segment(
    k: int, max_nodes: int, max_level: int, bound: int = DEFAULT_SEGMENT_BOUND
) -> QuotientSegment:
    """Bucket every forest within the bounds into equivalence classes.

    Classes appear in order of their smallest member; refuse when the raw
    enumeration exceeds ``bound`` forests.
    """
    total = iterated.count_forests(k, max_nodes, max_level)
    if total > bound:
        raise SegmentBoundError(
            f"segment too large: {total} forests exceed the bound {bound}"
        )
    forests = iterated.enumerate_forests(k, max_nodes, max_level)
    reps: list[IForest] = []
    for f in forests:
        for rep in reps:
            if iterated.colim_leq(f, rep, 0) and iterated.colim_leq(rep, f, 0):
                break
        else:
            reps.append(iterated.canonical(iterated.unlift(iterated.iminimize(f))))
    covers = _transitive_reduction(reps)
    return QuotientSegment(k, max_nodes, max_level, tuple(reps), covers)


def _transitive_reduction(reps: list[IForest]) -> tuple[tuple[int, int], ...]:
    n = len(reps)
    less = [
        [i != j and iterated.colim_leq(reps[i], reps[j], 0) for j in range(n)]
        for i in range(n)
    ]
    covers = []
    for i in range(n):
        for j in range(n):
            if not less[i][j]:
                continue
            if any(less[i][m] and less[m][j] for m in range(n)):
                continue
            covers.append((i, j))
    return tuple(covers)


def hasse_dot(seg: QuotientSegment) -> str:
    """The segment as a DOT digraph, one node per class, one edge per cover."""
    lines = ["digraph segment {", "  rankdir=BT;"]
    for idx, rep in enumerate(seg.classes):
        lines.append(f'  n{idx} [label="{notation.serialize_forest(rep)}"];')
    for lo, hi in sorted(seg.covers):
        lines.append(f"  n{lo} -> n{hi};")
    lines.append("}")
    return "\n".join(lines) + "\n"


# ---------------------------------------------------------------------------
# Segment cache file: a stable line-oriented text format.

def write_segment(seg: QuotientSegment) -> str:
    lines = [f"fhc-segment v1 k={seg.k} nodes={seg.max_nodes} level={seg.max_level}"]
    lines.extend(notation.serialize_forest(rep) for rep in seg.classes)
    lines.append("covers:")
    lines.extend(f"{lo} {hi}" for lo, hi in sorted(seg.covers))
    return "\n".join(lines) + "\n"


def read_segment(text: str) -> QuotientSegment:
    lines = text.splitlines()
    if not lines:
        raise ValueError("empty segment file")
    header = lines[0].split()
    if header[:2] != ["fhc-segment", "v1"]:
        raise ValueError(f"not a segment file: {lines[0]!r}")
    params = dict(item.split("=", 1) for item in header[2:])
    k = int(params["k"])
    classes: list[IForest] = []
    covers: list[tuple[int, int]] = []
    in_covers = False
    for line in lines[1:]:
        if not line.strip():
            continue
        if line.strip() == "covers:":
            in_covers = True
            continue
        if in_covers:
            lo, hi = line.split()
            covers.append((int(lo), int(hi)))
        else:
            classes.append(notation.parse_forest(line, k))
    return QuotientSegment(
        k, int(params["nodes"]), int(params["level"]),
        tuple(classes), tuple(covers),
    )
