"""Block design model, exact parameter arithmetic, and brute-force verification.

A design here is a variety count v plus a multiset of blocks; each block
is a strictly ascending tuple of variety ids below v.  Multiplicities are
first-class because exploding a design can repeat blocks.

Verification never trusts claimed parameters: it streams over the blocks
once, tallying block sizes, per-variety replication, and co-occurrence
counts for all C(v,2) variety pairs, then reads the verdict off the
tallies.  Pair counts live in a flat array indexed by the same ranking
that numbers the edges of K_v, so updates are O(1) and the fold handles
millions of blocks.  Folds can be partitioned and merged, which makes the
result independent of processing order and lets callers verify generated
designs without ever materializing them.

All arithmetic is exact; Python integers never overflow, so the factorial
growth of the constructions' parameters costs nothing in correctness.
"""

from __future__ import annotations

import math
from collections import Counter
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from itertools import combinations
from typing import Callable, Iterable, Iterator, Sequence

from .graph import edge_endpoints

__all__ = [
    "Block",
    "Design",
    "DesignParams",
    "TParams",
    "Witness",
    "BalanceReport",
    "BalanceAccumulator",
    "MalformedDesignError",
    "BALANCED",
    "UNBALANCED",
    "NOT_UNIFORM_BLOCK_SIZE",
    "NOT_UNIFORM_REPLICATION",
    "COMPLETE",
    "perm",
    "binom",
    "check_admissibility",
    "complete_parameters",
    "is_symmetric",
    "verify_bibd",
    "verify_blocks",
    "verify_partitioned",
    "verify_t_design",
    "verify_t_blocks",
]

Block = tuple[int, ...]

BALANCED = "balanced"
UNBALANCED = "unbalanced"
NOT_UNIFORM_BLOCK_SIZE = "not-uniform-block-size"
NOT_UNIFORM_REPLICATION = "not-uniform-replication"
COMPLETE = "complete"


class MalformedDesignError(ValueError):
    """A block violates the design's structural invariants."""


def perm(n: int, k: int) -> int:
    """Falling factorial n!/(n-k)!, exact."""
    if not 0 <= k <= n:
        raise ValueError(f"perm requires 0 <= k <= n, got n={n}, k={k}")
    return math.perm(n, k)


def binom(n: int, k: int) -> int:
    """Binomial coefficient C(n, k), exact."""
    if not 0 <= k <= n:
        raise ValueError(f"binom requires 0 <= k <= n, got n={n}, k={k}")
    return math.comb(n, k)


@dataclass(frozen=True)
class DesignParams:
    """The five parameters (v, b, r, k, lambda) of a block design."""

    v: int
    b: int
    r: int
    k: int
    lambda_: int

    def __str__(self) -> str:
        return f"v={self.v} b={self.b} r={self.r} k={self.k} lambda={self.lambda_}"


@dataclass(frozen=True)
class TParams:
    """Strength t and index lambda_t of a t-design."""

    t: int
    lambda_t: int

    def __str__(self) -> str:
        return f"t={self.t} lambda_t={self.lambda_t}"


@dataclass(frozen=True)
class Witness:
    """A variety subset whose block count deviates from the common value."""

    subset: tuple[int, ...]
    observed: int
    expected: int

    def __str__(self) -> str:
        ids = " ".join(str(x) for x in self.subset)
        return f"subset {{{ids}}} lies in {self.observed} blocks, expected {self.expected}"


@dataclass(frozen=True)
class BalanceReport:
    """Verdict of a balance check, with parameters or a counterexample."""

    verdict: str
    params: DesignParams | None = None
    witness: Witness | None = None

    @property
    def balanced(self) -> bool:
        return self.verdict == BALANCED


def check_admissibility(p: DesignParams) -> str | None:
    """None when both parameter identities hold, else which identity fails.

    The identities are the double-counting laws v*r = b*k and
    r*(k-1) = lambda*(v-1); any consistent parameter set satisfies both.
    """
    if min(p.v, p.b, p.r, p.k, p.lambda_) < 0:
        raise ValueError(f"parameters must be nonnegative, got {p}")
    if p.k < 1 or p.v < 2:
        raise ValueError(f"need k >= 1 and v >= 2, got {p}")
    if p.v * p.r != p.b * p.k:
        return f"v*r = {p.v * p.r} != b*k = {p.b * p.k}"
    if p.r * (p.k - 1) != p.lambda_ * (p.v - 1):
        return f"r*(k-1) = {p.r * (p.k - 1)} != lambda*(v-1) = {p.lambda_ * (p.v - 1)}"
    return None


def complete_parameters(v: int, k: int, lambda_: int) -> DesignParams | None:
    """Fill in b and r from the short form (v, k, lambda).

    Returns None when r = lambda*(v-1)/(k-1) or b = v*r/k is not an
    integer, i.e. no design with these parameters can exist.
    """
    if not v > k >= 2:
        raise ValueError(f"need v > k >= 2, got v={v}, k={k}")
    if lambda_ < 1:
        raise ValueError(f"need lambda >= 1, got {lambda_}")
    r, rem = divmod(lambda_ * (v - 1), k - 1)
    if rem:
        return None
    b, rem = divmod(v * r, k)
    if rem:
        return None
    return DesignParams(v, b, r, k, lambda_)


def is_symmetric(p: DesignParams) -> bool:
    """True iff v = b.  For admissible parameters this forces r = k."""
    if p.v != p.b:
        return False
    assert p.r == p.k, f"symmetric parameters must have r = k, got {p}"
    return True


def _check_block(block: Block, v: int) -> None:
    if len(block) == 0:
        raise MalformedDesignError("empty block")
    prev = -1
    for e in block:
        if e <= prev:
            raise MalformedDesignError(f"block {tuple(block)} is not strictly ascending")
        prev = e
    if prev >= v:
        raise MalformedDesignError(f"block {tuple(block)} has variety {prev} >= v={v}")


@dataclass
class Design:
    """Variety count plus a multiset of blocks, stored as block -> multiplicity."""

    v: int
    blocks: dict[Block, int] = field(default_factory=dict)

    @classmethod
    def from_blocks(cls, v: int, blocks: Iterable[Block]) -> "Design":
        """Collect an iterable of blocks, accumulating repeats as multiplicity."""
        if v < 1:
            raise ValueError(f"need at least one variety, got v={v}")
        mult: dict[Block, int] = {}
        for block in blocks:
            block = tuple(block)
            _check_block(block, v)
            mult[block] = mult.get(block, 0) + 1
        return cls(v, mult)

    @property
    def num_blocks(self) -> int:
        """Total number of blocks counting multiplicity."""
        return sum(self.blocks.values())

    def iter_blocks(self) -> Iterator[Block]:
        """Yield every block, each one multiplicity-many times."""
        for block, mult in self.blocks.items():
            for _ in range(mult):
                yield block


def _modal(counter: Counter) -> int:
    # Most frequent value; ties broken toward the smaller value so the
    # choice never depends on insertion order.
    return min(counter.items(), key=lambda kv: (-kv[1], kv[0]))[0]


class BalanceAccumulator:
    """Streaming tally of block sizes, replications, and pair co-occurrences.

    Feed blocks with update(); disjoint partitions of a block stream can
    be tallied into separate accumulators and combined with merge(), which
    adds counts elementwise, so the final report never depends on how the
    stream was split or ordered.
    """

    def __init__(self, v: int):
        if v < 1:
            raise ValueError(f"need at least one variety, got v={v}")
        self.v = v
        self.num_blocks = 0
        self.size_counts: dict[int, int] = {}
        self.size_example: dict[int, Block] = {}
        self.replication = [0] * v
        self.pair_counts = [0] * (v * (v - 1) // 2)
        # Row offsets for the pair ranking: pair {e, f}, e < f, lands at
        # _off[e] + f, matching the edge numbering of K_v.
        self._off = [e * v - e * (e + 1) // 2 - e - 1 for e in range(v)]

    def add(self, block: Block) -> None:
        self.update((block,))

    def update(self, blocks: Iterable[Block]) -> None:
        v = self.v
        off = self._off
        pairs = self.pair_counts
        repl = self.replication
        sizes = self.size_counts
        for block in blocks:
            _check_block(block, v)
            k = len(block)
            if k in sizes:
                sizes[k] += 1
            else:
                sizes[k] = 1
                self.size_example[k] = tuple(block)
            for e in block:
                repl[e] += 1
            for e, f in combinations(block, 2):
                pairs[off[e] + f] += 1
            self.num_blocks += 1

    def merge(self, other: "BalanceAccumulator") -> None:
        if other.v != self.v:
            raise ValueError(f"cannot merge accumulators for v={self.v} and v={other.v}")
        self.num_blocks += other.num_blocks
        for k, c in other.size_counts.items():
            if k in self.size_counts:
                self.size_counts[k] += c
            else:
                self.size_counts[k] = c
                self.size_example[k] = other.size_example[k]
        for i, c in enumerate(other.replication):
            self.replication[i] += c
        for i, c in enumerate(other.pair_counts):
            self.pair_counts[i] += c

    def report(self) -> BalanceReport:
        """Read the verdict off the tallies.

        Checks run in order: uniform block size, completeness (k = v),
        pair balance, uniform replication.  Pair balance is checked before
        replication because for k >= 2 uniform pair counts force uniform
        replication, and when both fail the deviant pair is the
        informative counterexample.
        """
        if self.num_blocks == 0:
            raise MalformedDesignError("design has no blocks")
        if len(self.size_counts) > 1:
            expected = _modal(Counter(self.size_counts))
            bad = min(k for k in self.size_counts if k != expected)
            witness = Witness(self.size_example[bad], bad, expected)
            return BalanceReport(NOT_UNIFORM_BLOCK_SIZE, witness=witness)
        k = next(iter(self.size_counts))
        b = self.num_blocks
        if k == self.v:
            # Every block is the full variety set: r = lambda = b.
            return BalanceReport(COMPLETE, params=DesignParams(self.v, b, b, k, b))
        lam_counter = Counter(self.pair_counts)
        if len(lam_counter) > 1:
            expected = _modal(lam_counter)
            rank = next(i for i, c in enumerate(self.pair_counts) if c != expected)
            witness = Witness(edge_endpoints(rank, self.v), self.pair_counts[rank], expected)
            return BalanceReport(UNBALANCED, witness=witness)
        r_counter = Counter(self.replication)
        if len(r_counter) > 1:
            expected = _modal(r_counter)
            x = next(i for i, c in enumerate(self.replication) if c != expected)
            witness = Witness((x,), self.replication[x], expected)
            return BalanceReport(NOT_UNIFORM_REPLICATION, witness=witness)
        r = self.replication[0]
        lam = self.pair_counts[0] if self.pair_counts else 0
        params = DesignParams(self.v, b, r, k, lam)
        # Self-check: the double-counting identities must hold for any
        # design that passed all three uniformity checks.
        assert params.v * params.r == params.b * params.k, params
        assert params.r * (params.k - 1) == params.lambda_ * (params.v - 1), params
        return BalanceReport(BALANCED, params=params)


def verify_blocks(v: int, blocks: Iterable[Block]) -> BalanceReport:
    """Balance-check a stream of blocks over varieties [0, v)."""
    acc = BalanceAccumulator(v)
    acc.update(blocks)
    return acc.report()


def verify_bibd(design: Design) -> BalanceReport:
    """Balance-check a design by full enumeration of its pair counts."""
    return verify_blocks(design.v, design.iter_blocks())


def verify_partitioned(
    v: int,
    sources: Sequence[Callable[[], Iterable[Block]]],
    workers: int = 1,
) -> BalanceReport:
    """Balance-check disjoint block streams, optionally folding them in parallel.

    Each source is a zero-argument callable producing one partition of the
    block stream.  Partitions are tallied into private accumulators and
    merged in list order, so the report is identical for any worker count.
    """
    if workers <= 1:
        total = BalanceAccumulator(v)
        for source in sources:
            total.update(source())
        return total.report()

    def fold(source: Callable[[], Iterable[Block]]) -> BalanceAccumulator:
        acc = BalanceAccumulator(v)
        acc.update(source())
        return acc

    with ThreadPoolExecutor(max_workers=workers) as pool:
        parts = list(pool.map(fold, sources))
    total = BalanceAccumulator(v)
    for part in parts:
        total.merge(part)
    return total.report()


def verify_t_blocks(v: int, blocks: Iterable[Block], t: int) -> TParams | Witness:
    """Check whether every t-subset of varieties lies in a constant number of blocks.

    Returns TParams on success, or the first (lexicographically) deviant
    t-subset as a Witness.  Requires uniform block sizes with t <= size.
    Counting walks the t-subsets of each block, so the cost is
    b*C(k,t) rather than C(v,t)*b; t-subsets covered by no block at all
    are caught by comparing the number of distinct covered subsets
    against C(v,t).
    """
    if t < 1:
        raise ValueError(f"need t >= 1, got t={t}")
    counts: dict[tuple[int, ...], int] = {}
    size: int | None = None
    for block in blocks:
        _check_block(block, v)
        if size is None:
            size = len(block)
            if t > size:
                raise ValueError(f"t={t} exceeds block size {size}")
        elif len(block) != size:
            raise ValueError(
                f"t-design check requires uniform block sizes, saw {size} and {len(block)}"
            )
        for sub in combinations(block, t):
            counts[sub] = counts.get(sub, 0) + 1
    if size is None:
        raise MalformedDesignError("design has no blocks")
    spectrum = Counter(counts.values())
    uncovered = binom(v, t) - len(counts)
    if uncovered:
        spectrum[0] += uncovered
    if len(spectrum) == 1:
        return TParams(t, next(iter(spectrum)))
    expected = _modal(spectrum)
    for sub in combinations(range(v), t):
        observed = counts.get(sub, 0)
        if observed != expected:
            return Witness(sub, observed, expected)
    raise AssertionError("non-uniform spectrum but no deviant subset found")


def verify_t_design(design: Design, t: int) -> TParams | Witness:
    """Check the t-design property of a design; see verify_t_blocks."""
    return verify_t_blocks(design.v, design.iter_blocks(), t)
