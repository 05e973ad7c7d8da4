"""Exhaustive ground truth: perfect matchings, 2-factors, long 2-factors.

Everything here is plain backtracking on purpose.  These counts are the
oracle the constructive machinery is checked against, so they must stay
simple enough to trust; no transfer matrices, no Pfaffians.  Counts are
Python ints, hence arbitrary precision for free.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Mapping

from .errors import CapExceeded, NoTwoFactor
from .graphs import EdgeSubset, Multigraph, is_cubic, is_two_edge_connected


@dataclass(frozen=True)
class CountReport:
    perfect_matchings: int
    two_factors: int
    method: str


def _iter_perfect_matchings(g: Multigraph) -> Iterator[frozenset[int]]:
    """Backtracking on the lowest-id unmatched vertex, incident edges in id order.

    Loops never belong to a matching; parallel edges count separately.
    """
    matched = [False] * g.n
    chosen: list[int] = []

    def rec(start: int) -> Iterator[frozenset[int]]:
        v = start
        while v < g.n and matched[v]:
            v += 1
        if v == g.n:
            yield frozenset(chosen)
            return
        for e in g.incident(v):
            u, w = g.edges[e]
            if u == w:
                continue
            o = w if u == v else u
            if matched[o]:
                continue
            matched[v] = matched[o] = True
            chosen.append(e)
            yield from rec(v + 1)
            chosen.pop()
            matched[v] = matched[o] = False

    yield from rec(0)


def count_perfect_matchings(g: Multigraph) -> int:
    """Exact number of perfect matchings; odd-order graphs give 0."""
    if g.n % 2:
        return 0
    return sum(1 for _ in _iter_perfect_matchings(g))


def enumerate_perfect_matchings(g: Multigraph, cap: int) -> list[EdgeSubset]:
    out = []
    for mset in _iter_perfect_matchings(g):
        out.append(EdgeSubset(g, mset))
        if len(out) > cap:
            raise CapExceeded(count_perfect_matchings(g), cap)
    return out


def _iter_two_factors(g: Multigraph) -> Iterator[frozenset[int]]:
    """All spanning subgraphs with every degree exactly 2 (loops count twice)."""
    if any(d < 2 for d in g.degrees()):
        return
    deg = [0] * g.n
    rem = [0] * g.n  # undecided degree still available at each vertex
    for u, v in g.edges:
        rem[u] += 1
        rem[v] += 1
    chosen: list[int] = []

    def feasible(v: int) -> bool:
        return deg[v] <= 2 and deg[v] + rem[v] >= 2

    def rec(i: int) -> Iterator[frozenset[int]]:
        if i == g.m:
            if all(d == 2 for d in deg):
                yield frozenset(chosen)
            return
        u, v = g.edges[i]
        step = 2 if u == v else 1
        rem[u] -= step
        rem[v] -= step if u != v else 0
        # include edge i
        deg[u] += step
        deg[v] += step if u != v else 0
        if feasible(u) and feasible(v):
            chosen.append(i)
            yield from rec(i + 1)
            chosen.pop()
        deg[u] -= step
        deg[v] -= step if u != v else 0
        # exclude edge i
        if feasible(u) and feasible(v):
            yield from rec(i + 1)
        rem[u] += step
        rem[v] += step if u != v else 0

    yield from rec(0)


def count_two_factors(g: Multigraph) -> int:
    return sum(1 for _ in _iter_two_factors(g))


def enumerate_two_factors(g: Multigraph, cap: int) -> list[EdgeSubset]:
    out = []
    for fset in _iter_two_factors(g):
        out.append(EdgeSubset(g, fset))
        if len(out) > cap:
            raise CapExceeded(count_two_factors(g), cap)
    return out


def count_report(g: Multigraph) -> CountReport:
    report = CountReport(count_perfect_matchings(g), count_two_factors(g), "backtracking")
    if is_cubic(g):
        # complement bijection: in a cubic graph these counts must agree
        assert report.perfect_matchings == report.two_factors
    return report


def max_length_two_factor(h: Multigraph, lengths: Mapping[int, int]) -> EdgeSubset:
    """A 2-factor of cubic bridgeless h maximizing the total edge length.

    Found by enumerating perfect matchings and complementing; ties go to
    the lexicographically smallest edge tuple.  The maximizer always
    reaches ceil(2/3 of the total length): averaging over a fractional
    3-edge-coloring puts 2/3 of the mass on some 2-factor, and the max
    dominates the average.
    """
    if not is_cubic(h):
        raise ValueError("host must be cubic for the complement to be a 2-factor")
    all_edges = frozenset(range(h.m))
    best: frozenset[int] | None = None
    best_key: tuple[int, ...] | None = None
    best_score = -1
    for mset in _iter_perfect_matchings(h):
        factor = all_edges - mset
        score = sum(lengths.get(e, 0) for e in factor)
        key = tuple(sorted(factor))
        if score > best_score or (score == best_score and key < best_key):
            best, best_key, best_score = factor, key, score
    if best is None:
        raise NoTwoFactor("host has no perfect matching, hence no 2-factor")
    total = sum(lengths.get(e, 0) for e in range(h.m))
    # the averaging bound is only guaranteed on bridgeless hosts
    if is_two_edge_connected(h):
        assert best_score >= -(-2 * total // 3)
    return EdgeSubset(h, best)
