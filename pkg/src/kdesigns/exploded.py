"""Exploding a design: replace every block by all of its j-subsets.

The result is again a block design, with parameters scaled by binomial
factors, but it can contain repeated blocks even when the source did not,
so multiplicities are tracked throughout.  The path family arises this
way: exploding the cycle design with block size khat + 1 down to
j = khat yields exactly the path design with block size khat, every block
once, because removing one edge from a cycle leaves a path and adding the
closing edge to a path rebuilds the unique cycle.
"""

from __future__ import annotations

from itertools import combinations

from .constructions import DEFAULT_MAX_BLOCKS, build_kc, build_kp
from .design import Design, DesignParams, binom, check_admissibility

__all__ = ["exploded_parameters", "explode_design", "check_kp_equals_exploded_kc"]


def exploded_parameters(p: DesignParams, j: int) -> DesignParams:
    """Parameters of the j-exploded design of a design with parameters p.

    Each block yields C(k,j) subsets; a fixed variety inside a block
    survives into C(k-1,j-1) of them and a fixed pair into C(k-2,j-2).
    """
    if not 2 <= j <= p.k:
        raise ValueError(f"need 2 <= j <= k={p.k}, got j={j}")
    result = DesignParams(
        v=p.v,
        b=p.b * binom(p.k, j),
        r=p.r * binom(p.k - 1, j - 1),
        k=j,
        lambda_=p.lambda_ * binom(p.k - 2, j - 2),
    )
    assert check_admissibility(result) is None, result
    return result


def explode_design(design: Design, j: int) -> Design:
    """The j-exploded design: the multiset of all j-subsets of every block.

    Multiplicities multiply and accumulate: a block of multiplicity m
    contributes m copies of each of its j-subsets, and coinciding subsets
    of different blocks add up.
    """
    sizes = {len(block) for block in design.blocks}
    if len(sizes) > 1:
        raise ValueError(f"explosion requires uniform block sizes, saw {sorted(sizes)}")
    k = next(iter(sizes)) if sizes else 0
    if not 2 <= j <= k:
        raise ValueError(f"need 2 <= j <= block size {k}, got j={j}")
    exploded: dict[tuple[int, ...], int] = {}
    for block, mult in design.blocks.items():
        for sub in combinations(block, j):
            exploded[sub] = exploded.get(sub, 0) + mult
    return Design(design.v, exploded)


def check_kp_equals_exploded_kc(khat: int, max_blocks: int = DEFAULT_MAX_BLOCKS) -> bool:
    """True iff exploding the cycle design of block size khat+1 down to khat
    reproduces the path design of block size khat exactly, every block once."""
    if khat < 2:
        raise ValueError(f"path designs need khat >= 2, got {khat}")
    exploded = explode_design(build_kc(khat + 1, max_blocks), khat)
    paths = build_kp(khat, max_blocks)
    if any(mult != 1 for mult in exploded.blocks.values()):
        return False
    return exploded == paths
