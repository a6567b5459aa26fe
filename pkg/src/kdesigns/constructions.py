"""The two infinite design families on complete graphs, and the K_5 3-design.

The varieties are the edges of K_n.  Taking as blocks the edge sets of
all paths with khat edges gives a balanced design exactly when
n = 2*khat - 1 (the KP family); taking the edge sets of all cycles on
khat vertices gives one when n = 2*khat - 3 (the KC family).  Both have
closed-form parameters, which the builders cross-check against streaming
verification of the actual enumeration.

imbalance_witness quantifies why other n fail for paths: it counts the
blocks shared by a fixed pair of adjacent edges and by a fixed pair of
nonadjacent edges; the counts agree only at n = 2*khat - 1.
"""

from __future__ import annotations

from dataclasses import dataclass

from .design import Design, DesignParams, binom, check_admissibility, perm
from .graph import edge_count
from .subgraphs import (
    cycle_to_block,
    enumerate_cycles,
    enumerate_k5_special,
    enumerate_paths,
    path_to_block,
)

__all__ = [
    "CapacityError",
    "DEFAULT_MAX_BLOCKS",
    "ImbalanceWitness",
    "kp_vertices",
    "kc_vertices",
    "kp_parameters",
    "kc_parameters",
    "build_kp",
    "build_kc",
    "build_k5_special",
    "imbalance_witness",
]

DEFAULT_MAX_BLOCKS = 100_000_000


class CapacityError(RuntimeError):
    """A construction would exceed the configured block-count ceiling."""


def _guard(blocks: int, max_blocks: int, what: str) -> None:
    if blocks > max_blocks:
        raise CapacityError(
            f"{what} has {blocks} blocks, above the ceiling of {max_blocks}"
        )


def kp_vertices(khat: int) -> int:
    """Order of the complete graph hosting the path design: n = 2*khat - 1."""
    if khat < 2:
        raise ValueError(f"path designs need khat >= 2, got {khat}")
    return 2 * khat - 1


def kc_vertices(khat: int) -> int:
    """Order of the complete graph hosting the cycle design: n = 2*khat - 3."""
    if khat < 3:
        raise ValueError(f"cycle designs need khat >= 3, got {khat}")
    return 2 * khat - 3


def kp_parameters(khat: int) -> DesignParams:
    """Closed-form parameters of the path design with block size khat."""
    n = kp_vertices(khat)
    params = DesignParams(
        v=binom(n, 2),
        b=perm(n, khat + 1) // 2,
        r=khat * perm(n - 2, khat - 1),
        k=khat,
        lambda_=(khat - 1) * perm(n - 3, khat - 2),
    )
    assert check_admissibility(params) is None, params
    return params


def kc_parameters(khat: int) -> DesignParams:
    """Closed-form parameters of the cycle design with block size khat."""
    n = kc_vertices(khat)
    params = DesignParams(
        v=binom(n, 2),
        b=perm(n, khat) // (2 * khat),
        r=perm(n - 2, khat - 2),
        k=khat,
        lambda_=perm(n - 3, khat - 3),
    )
    assert check_admissibility(params) is None, params
    return params


def build_kp(khat: int, max_blocks: int = DEFAULT_MAX_BLOCKS) -> Design:
    """Materialize the path design: one block per canonical path of K_{2*khat-1}."""
    _guard(kp_parameters(khat).b, max_blocks, f"path design khat={khat}")
    n = kp_vertices(khat)
    blocks = (path_to_block(word, n) for word in enumerate_paths(n, khat))
    return Design.from_blocks(edge_count(n), blocks)


def build_kc(khat: int, max_blocks: int = DEFAULT_MAX_BLOCKS) -> Design:
    """Materialize the cycle design: one block per canonical cycle of K_{2*khat-3}."""
    _guard(kc_parameters(khat).b, max_blocks, f"cycle design khat={khat}")
    n = kc_vertices(khat)
    blocks = (cycle_to_block(word, n) for word in enumerate_cycles(n, khat))
    return Design.from_blocks(edge_count(n), blocks)


def build_k5_special() -> Design:
    """The 30-block design on the 10 edges of K_5 (fans, rectangles, triangles).

    Every 3-subset of edges lies in exactly one block, so this verifies
    as a t-design with t = 3 and lambda_3 = 1.
    """
    blocks = (block for _shape, block in enumerate_k5_special())
    return Design.from_blocks(edge_count(5), blocks)


@dataclass(frozen=True)
class ImbalanceWitness:
    """Shared-block counts for adjacent and nonadjacent edge pairs in K_n paths.

    Of the blocks of the path family on K_n with block size khat,
    lambda_adj contain a fixed pair of edges sharing a vertex and
    lambda_non contain a fixed pair of disjoint edges.  The two counts
    are equal exactly at n = 2*khat - 1.
    """

    n: int
    khat: int
    lambda_adj: int
    lambda_non: int

    @property
    def verdict(self) -> str:
        if self.lambda_adj == self.lambda_non:
            return "balanced"
        if self.lambda_adj < self.lambda_non:
            return "adjacent-fewer"
        return "adjacent-more"


def imbalance_witness(n: int, khat: int) -> ImbalanceWitness:
    """Exact shared-block counts for fixed edge pairs among K_n path blocks.

    A block containing two adjacent edges is a vertex word containing
    their three vertices consecutively: khat - 1 positions for that run,
    times arrangements of the remaining vertices.  For disjoint edges,
    each edge occupies one of 4 relative orientations across two of the
    khat - 1 effective positions, and the leftover vertices are permuted
    into the remaining slots.

    Needs khat >= 3 (a 2-edge path cannot contain two disjoint edges) and
    n >= max(khat + 1, 4) so both kinds of edge pair occur in blocks.
    """
    if khat < 3:
        raise ValueError(f"need khat >= 3 so disjoint edge pairs can occur, got {khat}")
    if n < khat + 1:
        raise ValueError(f"K_{n} has no paths on {khat + 1} vertices")
    if n < 4:
        raise ValueError(f"K_{n} has no disjoint edge pairs")
    lambda_adj = (khat - 1) * perm(n - 3, khat - 2)
    lambda_non = 4 * binom(khat - 1, 2) * perm(n - 4, khat - 3)
    return ImbalanceWitness(n, khat, lambda_adj, lambda_non)
