"""Turning cycle-space members of the base into 2-factors and certificates.

A member C of the base's cycle space lifts to a 2-factor of the expanded
graph: a triangle touched by C is routed as the 2-path through its third
corner (forced, so triangles carry no choice), an untouched triangle
contributes its 3-cycle, a diamond on a traversed edge is crossed one of
two ways (the binary routing choice), and a diamond on an unused edge
contributes its internal 4-cycle.  Complementing 2-factors of a cubic
graph gives perfect matchings; collecting enough of them certifies the
exponential lower bound with exact integer arithmetic.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Mapping

from .counting import (
    count_perfect_matchings,
    enumerate_two_factors,
    max_length_two_factor,
)
from .cyclespace import enumerate_cycle_space
from .errors import BoundFailure, CapExceeded, DegreeViolation
from .graphs import (
    EdgeSubset,
    Multigraph,
    find_claw,
    is_cubic,
    is_three_edge_connected,
    is_two_factor,
    subset_degrees,
)
from .structure import (
    KIND_EXPANDED,
    KIND_K4,
    KIND_RING,
    Decomposition,
    _scan_diamonds,
    classify,
    string_passages,
)


@dataclass(frozen=True)
class RoutingChoice:
    """One bit per diamond lying on a traversed base edge.

    Keys are (base edge id, position along its string); bit 0 crosses
    entry-s-t-exit, bit 1 crosses entry-t-s-exit, with s < t the
    diamond's internals.
    """

    bits: Mapping[tuple[int, int], int]

    def __post_init__(self):
        object.__setattr__(self, "bits", dict(self.bits))
        for key, bit in self.bits.items():
            if bit not in (0, 1):
                raise ValueError(f"selector {key} must be 0 or 1")


def traversed_diamonds(member: EdgeSubset, d: Decomposition) -> tuple[tuple[int, int], ...]:
    """Slots (base edge, position) of every diamond the member passes through."""
    slots = []
    for e in sorted(member.members):
        rep = d.replacements[e]
        if rep.string:
            slots.extend((e, i) for i in range(len(rep.string.diamonds)))
    return tuple(slots)


def zero_routing(member: EdgeSubset, d: Decomposition) -> RoutingChoice:
    return RoutingChoice({slot: 0 for slot in traversed_diamonds(member, d)})


def all_routings(member: EdgeSubset, d: Decomposition) -> Iterator[RoutingChoice]:
    """All 2^L selector vectors over the traversed diamonds, counter order."""
    slots = traversed_diamonds(member, d)
    for value in range(1 << len(slots)):
        yield RoutingChoice({slot: (value >> i) & 1 for i, slot in enumerate(slots)})


def expand(member: EdgeSubset, d: Decomposition, routing: RoutingChoice) -> EdgeSubset:
    """Lift an even subgraph of the base to a 2-factor of the expanded graph."""
    if d.kind != KIND_EXPANDED:
        raise ValueError("expand needs an expanded decomposition")
    h, g = d.base, d.graph
    if member.host != h:
        raise ValueError("member is not hosted on the decomposition's base")
    deg = subset_degrees(h, member.members)
    for v, dv in enumerate(deg):
        if dv not in (0, 2):
            raise DegreeViolation(f"base vertex {v} has degree {dv} in the member, expected 0 or 2")
    slots = traversed_diamonds(member, d)
    if set(routing.bits) != set(slots):
        raise ValueError("routing must select exactly the traversed diamonds")

    picked: set[int] = set()
    for v in range(h.n):
        a, b, c = d.triangles[v]
        if deg[v] == 0:
            picked.update((g.edge_between(a, b), g.edge_between(a, c), g.edge_between(b, c)))
        else:
            used = [e for e in h.incident(v) if e in member.members]
            c1, c2 = (d.corner(e, v) for e in used)
            (third,) = set(d.triangles[v]) - {c1, c2}
            picked.update((g.edge_between(c1, third), g.edge_between(third, c2)))

    for e in range(h.m):
        rep = d.replacements[e]
        if e in member.members:
            picked.update(rep.connectors)
            if rep.string:
                for i, (entry, exit_port, s, t) in enumerate(string_passages(g, rep.string)):
                    if routing.bits[(e, i)] == 0:
                        walk = ((entry, s), (s, t), (t, exit_port))
                    else:
                        walk = ((entry, t), (t, s), (s, exit_port))
                    picked.update(g.edge_between(u, w) for u, w in walk)
        elif rep.string:
            for dia in rep.string.diamonds:
                p, q = dia.ports
                s, t = dia.internals
                picked.update(
                    g.edge_between(u, w) for u, w in ((p, s), (s, q), (q, t), (t, p))
                )

    result = EdgeSubset(g, frozenset(picked))
    bad = [v for v, dv in enumerate(subset_degrees(g, result.members)) if dv != 2]
    if bad:
        raise DegreeViolation(f"expansion is not a 2-factor at vertices {bad}")
    return result


def complement_matching(g: Multigraph, factor: EdgeSubset) -> EdgeSubset:
    """The perfect matching complementary to a 2-factor of a cubic graph."""
    if not is_cubic(g):
        raise ValueError("complementation needs a cubic host")
    if factor.host != g or not is_two_factor(g, factor.members):
        raise DegreeViolation("argument is not a 2-factor of the host")
    return EdgeSubset(g, frozenset(range(g.m)) - factor.members)


@dataclass(frozen=True)
class Certificate:
    """A deduplicated family of perfect matchings beating 2^(n/12).

    matchings are canonical rows (sorted edge ids, rows sorted);
    bound_ok records the exact-integer comparison count^12 > 2^n.
    """

    host: Multigraph
    matchings: tuple[tuple[int, ...], ...]
    n: int
    branch: str
    bound_ok: bool


def _ring_family(g: Multigraph, ring) -> list[tuple[int, ...]]:
    # the all-connector matching plus the 2^d per-diamond internal pairings
    owner = {v: i for i, dia in enumerate(ring) for v in dia.vertices}
    connecting = [e for e, (u, v) in enumerate(g.edges) if owner[u] != owner[v]]
    chords = [g.edge_between(*dia.internals) for dia in ring]
    family = [tuple(sorted(connecting + chords))]
    d = len(ring)
    for bits in range(1 << d):
        rows: list[int] = []
        for i, dia in enumerate(ring):
            p, q = dia.ports
            s, t = dia.internals
            if (bits >> i) & 1:
                rows += [g.edge_between(p, t), g.edge_between(q, s)]
            else:
                rows += [g.edge_between(p, s), g.edge_between(q, t)]
        family.append(tuple(sorted(rows)))
    return family


def certify(g: Multigraph, *, both_branches: bool = False, cap: int = 1 << 22) -> Certificate:
    """Emit an explicit family of perfect matchings with |family|^12 > 2^n.

    Dispatch follows the structure: K4 and rings get their closed-form
    families; otherwise the cycle-space branch fires when the base has
    k >= n/6 vertices and the long-2-factor branch when k < n/6.  The
    flag runs both branches and unions them.
    """
    d = classify(g)
    if d.kind == KIND_K4:
        pairings = (((0, 1), (2, 3)), ((0, 2), (1, 3)), ((0, 3), (1, 2)))
        rows = [tuple(sorted(g.edge_between(u, v) for u, v in pair)) for pair in pairings]
        branch = "k4"
    elif d.kind == KIND_RING:
        rows = _ring_family(g, d.ring)
        branch = "ring"
    else:
        n, k = g.n, d.base.n
        use_cycle = 6 * k >= n
        run_cycle = use_cycle or both_branches
        run_long = (not use_cycle) or both_branches
        rows = []
        if run_cycle:
            for c in enumerate_cycle_space(d.base, cap):
                factor = expand(c, d, zero_routing(c, d))
                rows.append(complement_matching(g, factor).sorted_tuple())
        if run_long:
            lengths = {e: rep.length for e, rep in enumerate(d.replacements)}
            chosen = max_length_two_factor(d.base, lengths)
            span = len(traversed_diamonds(chosen, d))
            if 1 << span > cap:
                raise CapExceeded(1 << span, cap)
            for r in all_routings(chosen, d):
                factor = expand(chosen, d, r)
                rows.append(complement_matching(g, factor).sorted_tuple())
        if run_cycle and run_long:
            branch = "both"
        elif run_cycle:
            branch = "cycle-space"
        else:
            branch = "long-2-factor"

    distinct = sorted(set(rows))
    count = len(distinct)
    if not count**12 > 2**g.n:
        dump = "\n".join(" ".join(map(str, row)) for row in distinct)
        raise BoundFailure(
            f"certificate of {count} matchings misses the bound on n={g.n} (branch {branch})",
            dump,
        )
    return Certificate(g, tuple(distinct), g.n, branch, True)


def certificate_problems(g: Multigraph, cert: Certificate) -> list[str]:
    """Re-validate a certificate from scratch; empty list means valid."""
    problems: list[str] = []
    if cert.n != g.n:
        problems.append(f"certificate n={cert.n} does not match the graph n={g.n}")
    seen: set[tuple[int, ...]] = set()
    for idx, row in enumerate(cert.matchings):
        if any(e < 0 or e >= g.m for e in row):
            problems.append(f"matching {idx} has an out-of-range edge index")
            continue
        deg = subset_degrees(g, row)
        bad = next((v for v, dv in enumerate(deg) if dv != 1), None)
        if bad is not None:
            problems.append(
                f"matching {idx} is not a perfect matching: vertex {bad} has degree {deg[bad]}"
            )
        key = tuple(sorted(row))
        if key in seen:
            problems.append(f"matching {idx} duplicates an earlier row")
        seen.add(key)
    count = len(seen)
    bound_holds = count**12 > 2**g.n
    if not bound_holds:
        problems.append(f"bound fails: {count}^12 <= 2^{g.n}")
    if cert.bound_ok != bound_holds:
        problems.append("bound_ok flag does not match the exact arithmetic")
    return problems


def verify_certificate(g: Multigraph, cert: Certificate) -> bool:
    return not certificate_problems(g, cert)


def verify_3ec_remark(g: Multigraph, *, cap: int = 1 << 22) -> bool:
    """Check the exact count 2^(n/6+1) and its mechanism on a 3-edge-connected host.

    The mechanism: such a graph has no diamonds, and lifting the base's
    cycle space is a bijection onto the 2-factors of g.  K4 is excluded
    by precondition.
    """
    g.ensure_simple()
    if not is_cubic(g):
        raise ValueError("host must be cubic")
    claw = find_claw(g)
    if claw is not None:
        raise ValueError(f"host must be claw-free, found claw at {claw.center}")
    if not is_three_edge_connected(g):
        raise ValueError("host must be 3-edge-connected")
    if g.n == 4:
        raise ValueError("K4 is excluded from the remark")

    if g.n % 6:
        return False
    if count_perfect_matchings(g) != 2 ** (g.n // 6 + 1):
        return False
    if _scan_diamonds(g):
        return False
    d = classify(g)
    if d.kind != KIND_EXPANDED or d.total_length() != 0:
        return False
    members = enumerate_cycle_space(d.base, cap)
    lifted = {expand(c, d, zero_routing(c, d)).sorted_tuple() for c in members}
    if len(lifted) != len(members):
        return False
    try:
        factors = enumerate_two_factors(g, max(cap, 2 * len(members)))
    except CapExceeded:
        return False
    return lifted == {f.sorted_tuple() for f in factors}
