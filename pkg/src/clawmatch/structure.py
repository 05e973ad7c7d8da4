"""Structure of 2-edge-connected claw-free cubic graphs.

Every such graph is K4, a ring of diamonds, or is built from a
2-edge-connected cubic base multigraph by replacing each base vertex
with a triangle and some base edges with strings of diamonds.  This
module recognizes that structure (classify / contract_to_base), inverts
it (build), and provides the corpus generators.

All decompositions store concrete vertex and edge ids of the host graph,
not abstract isomorphism classes, so rebuilding is exact.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from itertools import combinations
from typing import Mapping, Sequence

from .errors import (
    InvalidBase,
    NotClawFree,
    NotCubic,
    NotTwoEdgeConnected,
    ParallelCollision,
    StructureViolation,
)
from .graphs import (
    Multigraph,
    bridges,
    find_claw,
    is_connected,
    is_cubic,
    is_two_edge_connected,
)

KIND_K4 = "k4"
KIND_RING = "ring"
KIND_EXPANDED = "expanded"


@dataclass(frozen=True)
class Diamond:
    """An induced K4 minus one edge.

    The two endpoints of the missing edge are the ports (degree 2 inside
    the diamond); the other two vertices are the internals, adjacent to
    everything in the diamond.
    """

    vertices: tuple[int, int, int, int]
    ports: tuple[int, int]
    internals: tuple[int, int]

    def __post_init__(self):
        object.__setattr__(self, "vertices", tuple(sorted(self.vertices)))
        object.__setattr__(self, "ports", tuple(sorted(self.ports)))
        object.__setattr__(self, "internals", tuple(sorted(self.internals)))
        if set(self.ports) | set(self.internals) != set(self.vertices):
            raise ValueError("ports and internals must partition the diamond")


@dataclass(frozen=True)
class DiamondString:
    """A maximal chain of diamonds joined port-to-port.

    Diamonds are ordered from the head side; head and tail are the two
    ports of degree 2 within the string's induced subgraph.
    """

    diamonds: tuple[Diamond, ...]
    head: int
    tail: int

    def __post_init__(self):
        if not self.diamonds:
            raise ValueError("a string contains at least one diamond")
        if self.head not in self.diamonds[0].ports:
            raise ValueError("head must be a port of the first diamond")
        if self.tail not in self.diamonds[-1].ports:
            raise ValueError("tail must be a port of the last diamond")

    def __len__(self) -> int:
        return len(self.diamonds)


@dataclass(frozen=True)
class EdgeReplacement:
    """What one base edge became in the expanded graph.

    ends are the base endpoints, corners the triangle vertices carrying
    the edge on each side (aligned with ends).  connectors are the host
    edges joining corners to the string ends and consecutive diamonds;
    with no string it is the single direct corner-to-corner edge.
    """

    ends: tuple[int, int]
    corners: tuple[int, int]
    string: DiamondString | None
    connectors: tuple[int, ...]

    @property
    def length(self) -> int:
        return len(self.string.diamonds) if self.string else 0


@dataclass(frozen=True)
class Decomposition:
    kind: str
    graph: Multigraph
    ring: tuple[Diamond, ...] = ()
    base: Multigraph | None = None
    triangles: tuple[tuple[int, int, int], ...] = ()
    replacements: tuple[EdgeReplacement, ...] = ()

    def lengths(self) -> tuple[int, ...]:
        return tuple(rep.length for rep in self.replacements)

    def total_length(self) -> int:
        return sum(self.lengths())

    def corner(self, h_edge: int, h_vertex: int) -> int:
        """Triangle corner of h_vertex carrying h_edge."""
        rep = self.replacements[h_edge]
        if h_vertex == rep.ends[0]:
            return rep.corners[0]
        if h_vertex == rep.ends[1]:
            return rep.corners[1]
        raise ValueError(f"vertex {h_vertex} is not an end of base edge {h_edge}")


def string_passages(g: Multigraph, s: DiamondString) -> list[tuple[int, int, int, int]]:
    """Per diamond in order: (entry port, exit port, internal, internal)."""
    passages = []
    entry = s.head
    for idx, dia in enumerate(s.diamonds):
        if entry not in dia.ports:
            raise StructureViolation("string orientation broken: entry is not a port")
        exit_port = dia.ports[1] if dia.ports[0] == entry else dia.ports[0]
        passages.append((entry, exit_port, dia.internals[0], dia.internals[1]))
        if idx + 1 < len(s.diamonds):
            nxt = s.diamonds[idx + 1]
            cand = [p for p in nxt.ports if g.has_edge(exit_port, p)]
            if len(cand) != 1:
                raise StructureViolation("consecutive diamonds are not joined by one port edge")
            entry = cand[0]
        elif exit_port != s.tail:
            raise StructureViolation("string tail does not match the walk")
    return passages


def _require_cubic_claw_free(g: Multigraph) -> None:
    g.ensure_simple()
    for v, d in enumerate(g.degrees()):
        if d != 3:
            raise NotCubic(v, d)
    claw = find_claw(g)
    if claw is not None:
        raise NotClawFree(claw)


def _scan_diamonds(g: Multigraph) -> list[Diamond]:
    # a diamond is discovered exactly once, via its internal edge: the two
    # common neighbors of the internals are the (nonadjacent) ports
    found: dict[tuple[int, ...], Diamond] = {}
    for a, b in g.edges:
        if a == b:
            continue
        common = set(g.neighbors(a)) & set(g.neighbors(b))
        if len(common) != 2:
            continue
        p, q = sorted(common)
        if g.has_edge(p, q):
            continue
        verts = tuple(sorted((a, b, p, q)))
        found[verts] = Diamond(verts, (p, q), (a, b))
    diamonds = [found[k] for k in sorted(found)]
    covered = set()
    for dia in diamonds:
        if covered & set(dia.vertices):
            raise StructureViolation("two distinct diamonds intersect")
        covered |= set(dia.vertices)
    return diamonds


def find_diamonds(g: Multigraph) -> list[Diamond]:
    """All diamonds of a simple cubic claw-free graph, by minimum vertex id."""
    _require_cubic_claw_free(g)
    return _scan_diamonds(g)


def _group_strings(
    g: Multigraph, diamonds: list[Diamond]
) -> tuple[list[DiamondString], list[tuple[Diamond, ...]]]:
    owner: dict[int, int] = {}
    for i, dia in enumerate(diamonds):
        for v in dia.vertices:
            owner[v] = i
    links: list[list[tuple[int, int]]] = [[] for _ in diamonds]  # (other index, edge id)
    free: list[list[int]] = [[] for _ in diamonds]  # unattached ports
    for i, dia in enumerate(diamonds):
        vset = set(dia.vertices)
        for p in dia.ports:
            ext = [w for w in g.neighbors(p) if w not in vset]
            if len(ext) != 1:
                raise StructureViolation(f"port {p} has {len(ext)} outside neighbors")
            w = ext[0]
            if w in owner:
                links[i].append((owner[w], g.edge_between(p, w)))
            else:
                free[i].append(p)

    seen = [False] * len(diamonds)
    strings: list[DiamondString] = []
    rings: list[tuple[Diamond, ...]] = []
    for start in range(len(diamonds)):
        if seen[start]:
            continue
        comp = [start]
        seen[start] = True
        stack = [start]
        while stack:
            x = stack.pop()
            for o, _ in links[x]:
                if not seen[o]:
                    seen[o] = True
                    comp.append(o)
                    stack.append(o)
        if all(len(links[i]) == 2 for i in comp):
            rings.append(_ring_walk(diamonds, links, comp))
        else:
            strings.append(_string_walk(diamonds, links, free, comp))
    strings.sort(key=lambda s: s.head)
    return strings, rings


def _ring_walk(diamonds, links, comp) -> tuple[Diamond, ...]:
    start = min(comp, key=lambda i: diamonds[i].vertices[0])
    order = [start]
    used: set[int] = set()
    cur = start
    while True:
        options = [
            (diamonds[o].vertices[0], eid, o) for o, eid in links[cur] if eid not in used
        ]
        if not options:
            break
        _, eid, nxt = min(options)
        used.add(eid)
        if nxt == start:
            break
        order.append(nxt)
        cur = nxt
    if len(order) != len(comp):
        raise StructureViolation("diamond cycle is not a single closed walk")
    return tuple(diamonds[i] for i in order)


def _string_walk(diamonds, links, free, comp) -> DiamondString:
    if len(comp) == 1:
        i = comp[0]
        if len(free[i]) != 2:
            raise StructureViolation("isolated diamond without two free ports")
        p, q = sorted(free[i])
        return DiamondString((diamonds[i],), p, q)
    ends = [i for i in comp if len(links[i]) == 1]
    if len(ends) != 2 or any(len(free[i]) != 1 for i in ends):
        raise StructureViolation("diamond chain has malformed ends")
    a, b = ends
    start = a if free[a][0] < free[b][0] else b
    order = [start]
    used: set[int] = set()
    cur = start
    while True:
        options = [(eid, o) for o, eid in links[cur] if eid not in used]
        if not options:
            break
        eid, nxt = min(options)
        used.add(eid)
        order.append(nxt)
        cur = nxt
    if len(order) != len(comp):
        raise StructureViolation("diamond chain is not a single open walk")
    return DiamondString(
        tuple(diamonds[i] for i in order), free[start][0], free[order[-1]][0]
    )


def find_strings(
    g: Multigraph, diamonds: list[Diamond] | None = None
) -> tuple[list[DiamondString], list[tuple[Diamond, ...]]]:
    """Partition all diamonds into maximal strings.

    Returns (strings, rings).  Closed diamond cycles have no head or
    tail, so they are reported separately in cyclic order and classify
    deals with them; for every graph that is not a ring of diamonds the
    second list is empty.
    """
    if diamonds is None:
        diamonds = find_diamonds(g)
    else:
        _require_cubic_claw_free(g)
    return _group_strings(g, diamonds)


def _contract(g: Multigraph, strings: list[DiamondString]) -> Decomposition:
    in_diamond: set[int] = set()
    for s in strings:
        for dia in s.diamonds:
            in_diamond |= set(dia.vertices)

    # group the remaining vertices into their unique triangles
    tri_index: dict[int, int] = {}
    triangles: list[tuple[int, int, int]] = []
    for v in range(g.n):
        if v in in_diamond or v in tri_index:
            continue
        nb = g.neighbors(v)
        pairs = [(a, b) for a, b in combinations(nb, 2) if g.has_edge(a, b)]
        if len(pairs) != 1:
            raise StructureViolation(f"vertex {v} lies in {len(pairs)} triangles, expected 1")
        a, b = pairs[0]
        if a in in_diamond or b in in_diamond or a in tri_index or b in tri_index:
            raise StructureViolation(f"triangle at vertex {v} overlaps other structure")
        idx = len(triangles)
        tri = tuple(sorted((v, a, b)))
        triangles.append(tri)
        for x in tri:
            tri_index[x] = idx

    # base edges: direct corner-to-corner edges plus one edge per string
    records: list[tuple[int, int, tuple[int, int], DiamondString | None, tuple[int, ...]]] = []
    for eid, (x, y) in enumerate(g.edges):
        if x in in_diamond or y in in_diamond:
            continue
        tx, ty = tri_index[x], tri_index[y]
        if tx == ty:
            continue  # a triangle side
        records.append((tx, ty, (x, y), None, (eid,)))
    for s in strings:
        head_dia, tail_dia = s.diamonds[0], s.diamonds[-1]
        hu = [w for w in g.neighbors(s.head) if w not in head_dia.vertices]
        tv = [w for w in g.neighbors(s.tail) if w not in tail_dia.vertices]
        if len(hu) != 1 or len(tv) != 1 or hu[0] in in_diamond or tv[0] in in_diamond:
            raise StructureViolation("string end does not attach to a triangle corner")
        u, v = hu[0], tv[0]
        if tri_index[u] == tri_index[v]:
            raise StructureViolation("string closes on one triangle, base would have a loop")
        connectors = [g.edge_between(u, s.head)]
        passages = string_passages(g, s)
        for (_, exit_port, _, _), (entry, _, _, _) in zip(passages, passages[1:]):
            connectors.append(g.edge_between(exit_port, entry))
        connectors.append(g.edge_between(s.tail, v))
        records.append((tri_index[u], tri_index[v], (u, v), s, tuple(connectors)))

    records.sort(key=lambda r: (min(r[0], r[1]), max(r[0], r[1]), r[4][0]))
    base = Multigraph(len(triangles), tuple((tu, tv) for tu, tv, *_ in records))
    replacements = tuple(
        EdgeReplacement((tu, tv), corners, s, conn) for tu, tv, corners, s, conn in records
    )
    if not is_cubic(base):
        raise StructureViolation("contracted base is not cubic")
    if not is_two_edge_connected(base):
        raise StructureViolation("contracted base is not 2-edge-connected")
    d = Decomposition(
        KIND_EXPANDED, g, base=base, triangles=tuple(triangles), replacements=replacements
    )
    _verify_cover(d)
    return d


def _verify_cover(d: Decomposition) -> None:
    """Every host edge must play exactly one structural role."""
    g = d.graph
    ids: list[int] = []
    if d.kind == KIND_RING:
        owner = {v: i for i, dia in enumerate(d.ring) for v in dia.vertices}
        for dia in d.ring:
            ids.extend(_diamond_edges(g, dia))
        ids.extend(e for e, (u, v) in enumerate(g.edges) if owner[u] != owner[v])
    elif d.kind == KIND_EXPANDED:
        for a, b, c in d.triangles:
            ids += [g.edge_between(a, b), g.edge_between(a, c), g.edge_between(b, c)]
        for rep in d.replacements:
            ids.extend(rep.connectors)
            if rep.string:
                for dia in rep.string.diamonds:
                    ids.extend(_diamond_edges(g, dia))
    else:
        return
    if sorted(ids) != list(range(g.m)):
        raise StructureViolation("decomposition does not cover the host edge set exactly")


def _diamond_edges(g: Multigraph, dia: Diamond) -> list[int]:
    p, q = dia.ports
    s, t = dia.internals
    return [
        g.edge_between(p, s),
        g.edge_between(p, t),
        g.edge_between(s, t),
        g.edge_between(s, q),
        g.edge_between(t, q),
    ]


def contract_to_base(g: Multigraph, strings: list[DiamondString]) -> Decomposition:
    """Contract triangles to base vertices and strings to base edges.

    Requires a graph that classify would not call K4 or a ring of
    diamonds; the result's base is cubic, loop-free and 2-edge-connected.
    """
    return _contract(g, strings)


def classify(g: Multigraph) -> Decomposition:
    """Decide K4 / ring of diamonds / expansion for a 2-edge-connected claw-free cubic graph.

    The returned decomposition stores concrete ids: rebuilding from it
    reproduces g exactly, not just up to isomorphism.
    """
    _require_cubic_claw_free(g)
    if not is_connected(g):
        raise NotTwoEdgeConnected("graph is disconnected")
    br = bridges(g)
    if br.members:
        witness = min(br.members)
        raise NotTwoEdgeConnected(f"graph has a bridge: edge {witness}", witness)

    diamonds = _scan_diamonds(g)
    if diamonds and 4 * len(diamonds) == g.n:
        if len(diamonds) < 2:
            raise StructureViolation("a ring of diamonds has at least 2 diamonds")
        _, rings = _group_strings(g, diamonds)
        if len(rings) != 1:
            raise StructureViolation("all-diamond graph is not a single ring")
        d = Decomposition(KIND_RING, g, ring=rings[0])
        _verify_cover(d)
        return d
    if g.n == 4:
        return Decomposition(KIND_K4, g)
    strings, rings = _group_strings(g, diamonds)
    if rings:
        raise StructureViolation("closed diamond cycle in a graph with triangle vertices")
    return _contract(g, strings)


def build(
    h: Multigraph, lengths: Mapping[int, int] | Sequence[int]
) -> tuple[Multigraph, Decomposition]:
    """Expand a base multigraph into a claw-free cubic graph.

    Each base vertex becomes a triangle; the three edges at a vertex
    attach to distinct corners in edge-index order, so a parallel pair
    with both lengths 0 lands on distinct corner pairs and produces a
    4-cycle, never parallel edges.  Each base edge of length L >= 1 is
    replaced by a string of L diamonds.
    """
    if not is_cubic(h):
        bad = next(v for v, d in enumerate(h.degrees()) if d != 3)
        raise InvalidBase(f"base vertex {bad} has degree {h.degree(bad)}, expected 3")
    if any(u == v for u, v in h.edges):
        raise InvalidBase("base has a loop")
    if not is_two_edge_connected(h):
        raise InvalidBase("base is not 2-edge-connected")
    length_of = [0] * h.m
    for e in range(h.m):
        value = lengths[e]
        if value < 0:
            raise ValueError(f"length of edge {e} is negative")
        length_of[e] = int(value)

    k = h.n
    corner: dict[tuple[int, int], int] = {}  # (edge id, side) -> corner vertex
    for v in range(k):
        for rank, e in enumerate(h.incident(v)):
            a, b = h.edges[e]
            side = 0 if v == a else 1
            corner[(e, side)] = 3 * v + rank

    g_edges: list[tuple[int, int]] = []

    def add_edge(u: int, v: int) -> int:
        g_edges.append((u, v))
        return len(g_edges) - 1

    for v in range(k):
        add_edge(3 * v, 3 * v + 1)
        add_edge(3 * v, 3 * v + 2)
        add_edge(3 * v + 1, 3 * v + 2)

    next_vertex = 3 * k
    replacements: list[EdgeReplacement] = []
    for e, (a, b) in enumerate(h.edges):
        ca, cb = corner[(e, 0)], corner[(e, 1)]
        if length_of[e] == 0:
            replacements.append(EdgeReplacement((a, b), (ca, cb), None, (add_edge(ca, cb),)))
            continue
        anchor = ca
        connectors: list[int] = []
        diamonds: list[Diamond] = []
        for _ in range(length_of[e]):
            x, s, t, y = range(next_vertex, next_vertex + 4)
            next_vertex += 4
            connectors.append(add_edge(anchor, x))
            add_edge(x, s)
            add_edge(x, t)
            add_edge(s, t)
            add_edge(s, y)
            add_edge(t, y)
            diamonds.append(Diamond((x, s, t, y), (x, y), (s, t)))
            anchor = y
        connectors.append(add_edge(anchor, cb))
        string = DiamondString(tuple(diamonds), diamonds[0].ports[0], diamonds[-1].ports[1])
        replacements.append(EdgeReplacement((a, b), (ca, cb), string, tuple(connectors)))

    g = Multigraph(next_vertex, tuple(g_edges))
    if not g.is_simple():
        raise ParallelCollision("expansion produced parallel edges or loops")
    d = Decomposition(
        KIND_EXPANDED,
        g,
        base=h,
        triangles=tuple((3 * v, 3 * v + 1, 3 * v + 2) for v in range(k)),
        replacements=tuple(replacements),
    )
    _verify_cover(d)
    return g, d


def ring_of_diamonds(d: int) -> Multigraph:
    """The 4d-vertex ring: d diamonds joined port-to-port in a cycle."""
    if d < 2:
        raise ValueError("a ring of diamonds contains at least 2 diamonds")
    edges: list[tuple[int, int]] = []
    for i in range(d):
        p, s, t, q = 4 * i, 4 * i + 1, 4 * i + 2, 4 * i + 3
        edges += [(p, s), (p, t), (s, t), (s, q), (t, q)]
    for i in range(d):
        edges.append((4 * i + 3, 4 * ((i + 1) % d)))
    return Multigraph(4 * d, tuple(edges))


def figure1_graph(segments: int = 0) -> Multigraph:
    """A bridged claw-free cubic graph with exactly 9 perfect matchings.

    Two 7-vertex end blocks (a diamond wired to a triangle) are chained
    through `segments` middle diamonds; every joining edge is a cutedge,
    so each end block contributes its 3 internal completions and each
    middle diamond is forced, giving 3 * 3 = 9 matchings for every size.
    """
    if segments < 0:
        raise ValueError("segments must be nonnegative")
    edges: list[tuple[int, int]] = []
    # left block: diamond on 0..3 (ports 0 and 2), triangle on 4..6
    edges += [(0, 1), (0, 3), (1, 2), (1, 3), (2, 3)]
    edges += [(0, 4), (2, 5)]
    edges += [(4, 5), (4, 6), (5, 6)]
    anchor = 6
    base = 7
    for _ in range(segments):
        p, s, t, q = base, base + 1, base + 2, base + 3
        edges.append((anchor, p))
        edges += [(p, s), (p, t), (s, t), (s, q), (t, q)]
        anchor = q
        base += 4
    # right block mirrors the left one
    r = base
    edges.append((anchor, r))
    edges += [(r, r + 1), (r, r + 2), (r + 1, r + 2)]
    edges += [(r + 1, r + 3), (r + 2, r + 5)]
    edges += [(r + 3, r + 4), (r + 3, r + 6), (r + 4, r + 5), (r + 4, r + 6), (r + 5, r + 6)]
    return Multigraph(r + 7, tuple(edges))


def random_base(k: int, seed: int = 0) -> Multigraph:
    """A seeded random cubic 2-edge-connected loop-free multigraph on k vertices.

    Pairing-model sampling with rejection; parallel edges are allowed,
    loops and bridges are not.  Deterministic for a fixed seed; no
    uniformity contract.
    """
    if k < 2 or k % 2:
        raise ValueError("k must be an even integer >= 2")
    rng = random.Random(seed)
    stubs_template = [v for v in range(k) for _ in range(3)]
    while True:
        stubs = stubs_template[:]
        rng.shuffle(stubs)
        pairs = []
        ok = True
        for i in range(0, len(stubs), 2):
            u, v = stubs[i], stubs[i + 1]
            if u == v:
                ok = False
                break
            pairs.append((u, v) if u < v else (v, u))
        if not ok:
            continue
        g = Multigraph(k, tuple(sorted(pairs)))
        if is_two_edge_connected(g):
            return g
