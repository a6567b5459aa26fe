"""Path and cycle subgraphs of K_n as canonical vertex words.

A path subgraph has no direction, so a vertex word and its reversal name
the same path; the canonical word starts with the smaller endpoint.  A
cycle word names the same cycle under every rotation and reflection; the
canonical word puts the minimum vertex first and then orients the cycle
so the second vertex is smaller than the last.

The enumerators generate canonical words directly (never a non-canonical
word that is later filtered out), so every subgraph appears exactly once
and the streams never need to be materialized for deduplication.  Words
are emitted in lexicographic order, which makes generated design files
byte-for-byte reproducible.
"""

from __future__ import annotations

from itertools import combinations
from typing import Iterator

from .graph import edge_count, edge_index

__all__ = [
    "canonical_path",
    "canonical_cycle",
    "enumerate_paths",
    "enumerate_cycles",
    "path_to_block",
    "cycle_to_block",
    "enumerate_k5_special",
    "K5_SHAPES",
]

PathWord = tuple[int, ...]
CycleWord = tuple[int, ...]
Block = tuple[int, ...]

K5_SHAPES = ("fan", "rectangle", "triangle")


def _check_distinct(seq: tuple[int, ...], kind: str) -> None:
    if len(set(seq)) != len(seq):
        raise ValueError(f"{kind} word has a repeated vertex: {seq}")


def canonical_path(seq) -> PathWord:
    """Canonical word for the path visiting `seq`: the smaller endpoint comes first."""
    word = tuple(seq)
    if len(word) < 2:
        raise ValueError(f"path needs at least 2 vertices, got {word}")
    _check_distinct(word, "path")
    return word if word[0] < word[-1] else word[::-1]


def canonical_cycle(seq) -> CycleWord:
    """Canonical word for the cycle visiting `seq` and closing back to its start.

    Rotate so the minimum vertex is first, then pick the direction whose
    second vertex is smaller; this selects one representative out of the
    2m rotations and reflections of an m-cycle.
    """
    word = tuple(seq)
    if len(word) < 3:
        raise ValueError(f"cycle needs at least 3 vertices, got {word}")
    _check_distinct(word, "cycle")
    i = word.index(min(word))
    forward = word[i:] + word[:i]
    rev = word[::-1]
    j = rev.index(forward[0])
    backward = rev[j:] + rev[:j]
    return min(forward, backward)


def enumerate_paths(n: int, khat: int, first: int | None = None) -> Iterator[PathWord]:
    """Yield every canonical path word with khat edges (khat+1 vertices) in K_n.

    Words come out in lexicographic order, each path exactly once.  Pass
    `first` to restrict to words starting at one vertex; the streams for
    distinct `first` values partition the full stream, so callers may
    process them independently and merge.
    """
    if khat < 2:
        raise ValueError(f"path blocks need khat >= 2, got {khat}")
    if n < khat + 1:
        raise ValueError(f"K_{n} has no paths on {khat + 1} vertices")
    length = khat + 1
    if first is None:
        starts = range(n)
    else:
        if not 0 <= first < n:
            raise ValueError(f"first vertex {first} out of range for K_{n}")
        starts = range(first, first + 1)
    for a in starts:
        yield from _extend_path((a,), 1 << a, n, length)


def _extend_path(prefix: PathWord, used: int, n: int, length: int) -> Iterator[PathWord]:
    # Interior vertices are free; the last must exceed the first so only
    # the canonical orientation is ever built.
    if len(prefix) == length - 1:
        for last in range(prefix[0] + 1, n):
            if not used >> last & 1:
                yield prefix + (last,)
    else:
        for x in range(n):
            if not used >> x & 1:
                yield from _extend_path(prefix + (x,), used | 1 << x, n, length)


def enumerate_cycles(n: int, khat: int, first: int | None = None) -> Iterator[CycleWord]:
    """Yield every canonical cycle word on khat vertices of K_n, lexicographically.

    A canonical word starts at the cycle's minimum vertex, so all later
    vertices are drawn from above the first; the last must exceed the
    second, which fixes the direction.  `first` partitions as in
    enumerate_paths.
    """
    if khat < 3:
        raise ValueError(f"cycle blocks need khat >= 3, got {khat}")
    if n < khat:
        raise ValueError(f"K_{n} has no cycles on {khat} vertices")
    if first is None:
        starts = range(n)
    else:
        if not 0 <= first < n:
            raise ValueError(f"first vertex {first} out of range for K_{n}")
        starts = range(first, first + 1)
    for a in starts:
        yield from _extend_cycle((a,), 1 << a, n, khat)


def _extend_cycle(prefix: CycleWord, used: int, n: int, length: int) -> Iterator[CycleWord]:
    if len(prefix) == length - 1:
        for last in range(prefix[1] + 1, n):
            if not used >> last & 1:
                yield prefix + (last,)
    else:
        for x in range(prefix[0] + 1, n):
            if not used >> x & 1:
                yield from _extend_cycle(prefix + (x,), used | 1 << x, n, length)


def path_to_block(word, n: int) -> Block:
    """Sorted edge ids of the consecutive pairs of a path word."""
    word = tuple(word)
    if len(word) < 2:
        raise ValueError(f"path needs at least 2 vertices, got {word}")
    _check_distinct(word, "path")
    edges = []
    for a, b in zip(word, word[1:]):
        if a > b:
            a, b = b, a
        edges.append(edge_index(a, b, n))
    edges.sort()
    return tuple(edges)


def cycle_to_block(word, n: int) -> Block:
    """Sorted edge ids of a cycle word: consecutive pairs plus the closing edge."""
    word = tuple(word)
    if len(word) < 3:
        raise ValueError(f"cycle needs at least 3 vertices, got {word}")
    _check_distinct(word, "cycle")
    edges = []
    for a, b in zip(word, word[1:] + word[:1]):
        if a > b:
            a, b = b, a
        edges.append(edge_index(a, b, n))
    edges.sort()
    return tuple(edges)


def enumerate_k5_special() -> Iterator[tuple[str, Block]]:
    """Yield the 30 four-edge blocks of K_5 of the three special shapes.

    Shapes, each tagged by name: "fan" (the four edges at one vertex,
    5 blocks), "rectangle" (a 4-cycle, 15 blocks), and "triangle" (a
    3-cycle plus the edge on the two remaining vertices, 10 blocks).
    """
    n = 5
    assert edge_count(n) == 10
    for center in range(n):
        spokes = sorted(
            edge_index(min(center, x), max(center, x), n) for x in range(n) if x != center
        )
        yield "fan", tuple(spokes)
    for word in enumerate_cycles(n, 4):
        yield "rectangle", cycle_to_block(word, n)
    for tri in combinations(range(n), 3):
        a, b, c = tri
        d, e = (x for x in range(n) if x not in tri)
        edges = sorted(
            (
                edge_index(a, b, n),
                edge_index(a, c, n),
                edge_index(b, c, n),
                edge_index(d, e, n),
            )
        )
        yield "triangle", tuple(edges)
