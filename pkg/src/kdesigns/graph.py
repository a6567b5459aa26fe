"""Edge numbering for complete graphs.

The complete graph K_n has n vertices 0..n-1 and one edge per unordered
vertex pair.  Edges are identified by the lexicographic rank of their
endpoint pair (a, b) with a < b, giving a dense id in [0, C(n,2)).  This
numbering is closed-form in both directions and is part of the design
file format, so it must never change.
"""

from __future__ import annotations

__all__ = ["edge_count", "edge_index", "edge_endpoints"]


def edge_count(n: int) -> int:
    """Number of edges of K_n, i.e. C(n, 2)."""
    if n < 1:
        raise ValueError(f"complete graph needs at least one vertex, got n={n}")
    return n * (n - 1) // 2


def edge_index(a: int, b: int, n: int) -> int:
    """Dense id of the edge {a, b} of K_n; requires 0 <= a < b < n."""
    if not 0 <= a < b < n:
        raise ValueError(f"expected 0 <= a < b < n, got a={a}, b={b}, n={n}")
    return a * n - a * (a + 1) // 2 + (b - a - 1)


def edge_endpoints(edge: int, n: int) -> tuple[int, int]:
    """Endpoint pair (a, b) with a < b of an edge id; inverse of edge_index."""
    if not 0 <= edge < edge_count(n):
        raise ValueError(f"edge id {edge} out of range for K_{n}")
    a = 0
    row = n - 1  # number of pairs whose first endpoint is a
    while edge >= row:
        edge -= row
        a += 1
        row -= 1
    return a, a + 1 + edge
