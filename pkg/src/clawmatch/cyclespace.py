"""GF(2) cycle space of a multigraph.

The cycle space is the set of edge subsets in which every vertex has even
degree; it is a vector space over GF(2) of dimension m - n + c.  Edge
subsets are carried as bitmask integers internally so that symmetric
difference is a single XOR, and enumeration walks a Gray code so that
consecutive members differ by one basis vector.

Parallel edges and loops are first-class: a parallel pair is a 2-cycle
and a loop is a 1-cycle, each a legitimate basis element.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import CapExceeded
from .graphs import EdgeSubset, Multigraph, connected_components, subset_degrees


@dataclass(frozen=True)
class CycleBasis:
    host: Multigraph
    basis: tuple[EdgeSubset, ...]
    dimension: int


def _mask(members) -> int:
    m = 0
    for e in members:
        m |= 1 << e
    return m


def _unmask(mask: int) -> frozenset[int]:
    out = set()
    while mask:
        low = mask & -mask
        out.add(low.bit_length() - 1)
        mask ^= low
    return frozenset(out)


def cycle_basis(h: Multigraph) -> CycleBasis:
    """Fundamental cycles of a spanning forest, one per non-tree edge.

    A loop is its own basis element (the tree path between its endpoints
    is empty); the off-tree copy of a parallel pair yields a 2-cycle.
    """
    in_tree = [False] * h.m
    visited = [False] * h.n
    root_mask = [0] * h.n  # XOR of edge bits on the tree path from the component root
    for root in range(h.n):
        if visited[root]:
            continue
        visited[root] = True
        queue = [root]
        while queue:
            v = queue.pop(0)
            for e in h.incident(v):
                u, w = h.edges[e]
                if u == w:
                    continue
                o = w if u == v else u
                if visited[o]:
                    continue
                visited[o] = True
                in_tree[e] = True
                root_mask[o] = root_mask[v] ^ (1 << e)
                queue.append(o)
    basis = []
    for e in range(h.m):
        if in_tree[e]:
            continue
        u, v = h.edges[e]
        basis.append(EdgeSubset(h, _unmask(root_mask[u] ^ root_mask[v] ^ (1 << e))))
    c = len(connected_components(h))
    dim = h.m - h.n + c
    assert len(basis) == dim
    return CycleBasis(h, tuple(basis), dim)


def is_even_subgraph(h: Multigraph, s: EdgeSubset) -> bool:
    """True iff every vertex has even degree in s (a loop contributes 2)."""
    if s.host != h:
        raise ValueError("subset is not hosted on this graph")
    return all(d % 2 == 0 for d in subset_degrees(h, s.members))


def enumerate_cycle_space(h: Multigraph, cap: int) -> list[EdgeSubset]:
    """All 2^dimension members, Gray-code order, empty set first."""
    cb = cycle_basis(h)
    total = 1 << cb.dimension
    if total > cap:
        raise CapExceeded(total, cap)
    masks = [_mask(b.members) for b in cb.basis]
    out = [0]
    cur = 0
    for i in range(1, total):
        cur ^= masks[(i & -i).bit_length() - 1]
        out.append(cur)
    return [EdgeSubset(h, _unmask(m)) for m in out]
