"""Multigraph carrier and the basic structural predicates.

Vertices are dense integer ids 0..n-1.  Edges are an indexed list of
unordered pairs; parallel edges are repeated pairs and loops are pairs
(v, v).  A loop counts twice toward the degree of its vertex.  Edge
indices are stable, which is what lets higher layers talk about "the
second of a parallel pair".
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from itertools import combinations
from typing import Iterable, Iterator

from .errors import NotSimple


@dataclass(frozen=True)
class Multigraph:
    n: int
    edges: tuple[tuple[int, int], ...]

    def __post_init__(self):
        object.__setattr__(self, "edges", tuple((u, v) for u, v in self.edges))
        if self.n < 0:
            raise ValueError("vertex count must be nonnegative")
        for i, (u, v) in enumerate(self.edges):
            if not (0 <= u < self.n and 0 <= v < self.n):
                raise ValueError(f"edge {i} endpoint out of range: ({u}, {v})")

    @property
    def m(self) -> int:
        return len(self.edges)

    @cached_property
    def _incidence(self) -> tuple[tuple[int, ...], ...]:
        inc: list[list[int]] = [[] for _ in range(self.n)]
        for i, (u, v) in enumerate(self.edges):
            inc[u].append(i)
            if v != u:
                inc[v].append(i)
        return tuple(tuple(ids) for ids in inc)

    @cached_property
    def _neighbors(self) -> tuple[tuple[int, ...], ...]:
        nbr: list[set[int]] = [set() for _ in range(self.n)]
        for u, v in self.edges:
            if u != v:
                nbr[u].add(v)
                nbr[v].add(u)
        return tuple(tuple(sorted(s)) for s in nbr)

    def incident(self, v: int) -> tuple[int, ...]:
        """Edge ids at v, ascending; a loop appears once."""
        return self._incidence[v]

    def neighbors(self, v: int) -> tuple[int, ...]:
        """Distinct neighbors of v, ascending, excluding v itself."""
        return self._neighbors[v]

    def degree(self, v: int) -> int:
        deg = 0
        for i in self._incidence[v]:
            u, w = self.edges[i]
            deg += 2 if u == w else 1
        return deg

    def degrees(self) -> tuple[int, ...]:
        return tuple(self.degree(v) for v in range(self.n))

    def other_end(self, e: int, v: int) -> int:
        u, w = self.edges[e]
        if v == u:
            return w
        if v == w:
            return u
        raise ValueError(f"vertex {v} is not an endpoint of edge {e}")

    def has_edge(self, u: int, v: int) -> bool:
        return v in self._neighbors[u] if u != v else any(a == b == u for a, b in self.edges)

    @cached_property
    def _pair_ids(self) -> dict[tuple[int, int], int]:
        ids: dict[tuple[int, int], int] = {}
        for i, (u, v) in enumerate(self.edges):
            key = (u, v) if u <= v else (v, u)
            if key in ids or u == v:
                return {}  # not simple; edge_between refuses below
            ids[key] = i
        return ids

    def edge_between(self, u: int, v: int) -> int:
        """Edge id joining u and v.  Simple graphs only."""
        ids = self._pair_ids
        if not ids and self.m:
            raise NotSimple("edge_between requires a simple graph")
        key = (u, v) if u <= v else (v, u)
        try:
            return ids[key]
        except KeyError:
            raise ValueError(f"no edge between {u} and {v}") from None

    def is_simple(self) -> bool:
        seen = set()
        for u, v in self.edges:
            if u == v:
                return False
            key = (u, v) if u <= v else (v, u)
            if key in seen:
                return False
            seen.add(key)
        return True

    def ensure_simple(self) -> None:
        if not self.is_simple():
            raise NotSimple("graph has loops or parallel edges")


@dataclass(frozen=True)
class EdgeSubset:
    """A set of edge indices of a fixed host multigraph."""

    host: Multigraph
    members: frozenset[int]

    def __post_init__(self):
        object.__setattr__(self, "members", frozenset(self.members))
        for e in self.members:
            if not (0 <= e < self.host.m):
                raise ValueError(f"edge index {e} out of range")

    def __contains__(self, e: int) -> bool:
        return e in self.members

    def __len__(self) -> int:
        return len(self.members)

    def __iter__(self) -> Iterator[int]:
        return iter(sorted(self.members))

    def sym_diff(self, other: "EdgeSubset") -> "EdgeSubset":
        if self.host != other.host:
            raise ValueError("symmetric difference needs a common host")
        return EdgeSubset(self.host, self.members ^ other.members)

    def sorted_tuple(self) -> tuple[int, ...]:
        return tuple(sorted(self.members))


# EdgeSubsets specialized by degree invariants; the names document intent.
CycleSpaceElement = EdgeSubset
TwoFactor = EdgeSubset
PerfectMatching = EdgeSubset


@dataclass(frozen=True)
class Claw:
    """An induced K_{1,3}: a center adjacent to three pairwise nonadjacent leaves."""

    center: int
    leaves: tuple[int, int, int]

    def __post_init__(self):
        object.__setattr__(self, "leaves", tuple(sorted(self.leaves)))


def subset_degrees(g: Multigraph, members: Iterable[int]) -> list[int]:
    """Degree of every vertex in the spanning subgraph picked by members (loops count twice)."""
    deg = [0] * g.n
    for e in members:
        u, v = g.edges[e]
        deg[u] += 1
        deg[v] += 1
    return deg


def is_perfect_matching(g: Multigraph, members: Iterable[int]) -> bool:
    return all(d == 1 for d in subset_degrees(g, members))


def is_two_factor(g: Multigraph, members: Iterable[int]) -> bool:
    return all(d == 2 for d in subset_degrees(g, members))


def connected_components(g: Multigraph) -> list[tuple[int, ...]]:
    """Components as sorted vertex tuples, ordered by smallest vertex."""
    seen = [False] * g.n
    comps = []
    for root in range(g.n):
        if seen[root]:
            continue
        stack = [root]
        seen[root] = True
        comp = [root]
        while stack:
            v = stack.pop()
            for w in g.neighbors(v):
                if not seen[w]:
                    seen[w] = True
                    comp.append(w)
                    stack.append(w)
        comps.append(tuple(sorted(comp)))
    return comps


def is_connected(g: Multigraph) -> bool:
    return len(connected_components(g)) <= 1


def is_cubic(g: Multigraph) -> bool:
    """True iff every vertex has degree exactly 3, loops counted twice."""
    return all(d == 3 for d in g.degrees())


def _component_count_excluding(g: Multigraph, banned: frozenset[int]) -> int:
    seen = [False] * g.n
    count = 0
    adj: list[list[int]] = [[] for _ in range(g.n)]
    for i, (u, v) in enumerate(g.edges):
        if i in banned or u == v:
            continue
        adj[u].append(v)
        adj[v].append(u)
    for root in range(g.n):
        if seen[root]:
            continue
        count += 1
        stack = [root]
        seen[root] = True
        while stack:
            v = stack.pop()
            for w in adj[v]:
                if not seen[w]:
                    seen[w] = True
                    stack.append(w)
    return count


def bridges(g: Multigraph) -> EdgeSubset:
    """All cutedges, by a single lowpoint DFS.

    A parallel pair contributes no bridge and a loop is never a bridge:
    only the one edge used to enter a vertex is excluded from back-edge
    updates, so the second copy of a parallel pair acts as a back edge.
    """
    disc = [-1] * g.n
    low = [0] * g.n
    found: list[int] = []
    timer = 0
    for root in range(g.n):
        if disc[root] != -1:
            continue
        disc[root] = low[root] = timer
        timer += 1
        stack: list[tuple[int, int, Iterator[int]]] = [(root, -1, iter(g.incident(root)))]
        while stack:
            v, entry_edge, it = stack[-1]
            advanced = False
            for e in it:
                if e == entry_edge:
                    continue
                u, w = g.edges[e]
                if u == w:
                    continue
                o = w if u == v else u
                if disc[o] == -1:
                    disc[o] = low[o] = timer
                    timer += 1
                    stack.append((o, e, iter(g.incident(o))))
                    advanced = True
                    break
                low[v] = min(low[v], disc[o])
            if not advanced:
                stack.pop()
                if stack:
                    parent = stack[-1][0]
                    low[parent] = min(low[parent], low[v])
                    if low[v] > disc[parent]:
                        found.append(entry_edge)
    return EdgeSubset(g, frozenset(found))


def is_two_edge_connected(g: Multigraph) -> bool:
    """Connected, at least 2 vertices, and bridgeless."""
    if g.n < 2 or not is_connected(g):
        return False
    return not bridges(g).members


def is_three_edge_connected(g: Multigraph) -> bool:
    """No set of at most 2 edges disconnects g.  Brute force over edge pairs."""
    if g.n < 2 or not is_connected(g):
        return False
    for e in range(g.m):
        if _component_count_excluding(g, frozenset((e,))) > 1:
            return False
    for e, f in combinations(range(g.m), 2):
        if _component_count_excluding(g, frozenset((e, f))) > 1:
            return False
    return True


def find_claw(g: Multigraph) -> Claw | None:
    """Some induced claw of a simple graph, or None.

    Rejects multigraphs with loops or parallel edges: claw-freeness is a
    simple-graph notion.
    """
    g.ensure_simple()
    for v in range(g.n):
        nb = g.neighbors(v)
        if len(nb) < 3:
            continue
        for a, b, c in combinations(nb, 3):
            if g.has_edge(a, b) or g.has_edge(a, c) or g.has_edge(b, c):
                continue
            return Claw(v, (a, b, c))
    return None


def is_claw_free(g: Multigraph) -> bool:
    return find_claw(g) is None
