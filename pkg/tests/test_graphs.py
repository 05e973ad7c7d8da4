import random

import pytest

from clawmatch import (
    EdgeSubset,
    Multigraph,
    NotSimple,
    bridges,
    connected_components,
    find_claw,
    is_claw_free,
    is_connected,
    is_cubic,
    is_three_edge_connected,
    is_two_edge_connected,
    ring_of_diamonds,
)
from bruteforce import brute_bridges, brute_claw_centers
from corpus import (
    DOUBLE_DOUBLE,
    K4,
    LOOP1,
    PATH3,
    PETERSEN,
    PRISM,
    STAR_K13,
    TRIPLE_BOND,
    TWO_TRIANGLES_BRIDGED,
    base_corpus,
    certify_corpus,
)


def random_multigraph(rng: random.Random, n: int, m: int) -> Multigraph:
    return Multigraph(n, tuple((rng.randrange(n), rng.randrange(n)) for _ in range(m)))


def test_multigraph_rejects_bad_endpoints():
    with pytest.raises(ValueError):
        Multigraph(4, ((0, 5),))
    with pytest.raises(ValueError):
        Multigraph(2, ((-1, 0),))


def test_edge_subset_validates_members():
    with pytest.raises(ValueError):
        EdgeSubset(K4, frozenset({10}))
    s = EdgeSubset(K4, {5, 0})
    assert s.sorted_tuple() == (0, 5)
    assert 5 in s and 3 not in s


def test_degrees_count_loops_twice():
    assert LOOP1.degree(0) == 2
    g = Multigraph(2, ((0, 0), (0, 1)))
    assert g.degrees() == (3, 1)


def test_is_cubic_examples():
    assert is_cubic(K4)
    assert is_cubic(TRIPLE_BOND)
    assert not is_cubic(LOOP1)  # a loop gives degree 2
    assert not is_cubic(PATH3)


def test_degree_sum_is_twice_edge_count():
    rng = random.Random(42)
    graphs = [g for _, g in base_corpus()] + [
        random_multigraph(rng, rng.randrange(1, 9), rng.randrange(0, 14)) for _ in range(40)
    ]
    for g in graphs:
        assert sum(g.degrees()) == 2 * g.m


def test_bridges_path():
    assert bridges(PATH3).members == {0, 1}


def test_bridges_k4_empty():
    assert bridges(K4).members == set()


def test_bridges_two_triangles_joined():
    # brute removal over all 7 edges singles out the joining edge
    expected = brute_bridges(TWO_TRIANGLES_BRIDGED)
    assert expected == {6}
    assert bridges(TWO_TRIANGLES_BRIDGED).members == expected


def test_bridges_parallel_pair_and_loop_never_bridge():
    g = Multigraph(3, ((0, 1), (0, 1), (1, 2), (2, 2)))
    assert bridges(g).members == {2}
    assert brute_bridges(g) == {2}


def test_lowpoint_bridges_match_removal_oracle():
    rng = random.Random(7)
    graphs = [g for _, g in base_corpus()] + [g for _, g in certify_corpus()]
    for _ in range(60):
        graphs.append(random_multigraph(rng, rng.randrange(1, 10), rng.randrange(0, 16)))
    for g in graphs:
        assert bridges(g).members == brute_bridges(g)


def test_two_edge_connected_examples():
    assert is_two_edge_connected(K4)
    assert is_two_edge_connected(TRIPLE_BOND)
    assert not is_two_edge_connected(TWO_TRIANGLES_BRIDGED)
    assert not is_two_edge_connected(LOOP1)  # fewer than 2 vertices
    assert not is_two_edge_connected(Multigraph(8, K4.edges + tuple((u + 4, v + 4) for u, v in K4.edges)))


def test_cubic_two_edge_connected_graphs_have_no_loops():
    for _, g in base_corpus():
        if is_two_edge_connected(g):
            assert all(u != v for u, v in g.edges)


def test_find_claw_star():
    claw = find_claw(STAR_K13)
    assert claw is not None
    assert claw.center == 0
    assert claw.leaves == (1, 2, 3)


def test_find_claw_k4_and_prism_absent():
    assert find_claw(K4) is None
    # exhaustive 4-tuple scan agrees that the prism has no claw
    assert brute_claw_centers(PRISM) == []
    assert find_claw(PRISM) is None


def test_find_claw_rejects_multigraphs():
    with pytest.raises(NotSimple):
        find_claw(TRIPLE_BOND)
    with pytest.raises(NotSimple):
        find_claw(LOOP1)


def test_find_claw_matches_exhaustive_scan():
    rng = random.Random(11)
    for _ in range(60):
        n = rng.randrange(1, 9)
        pairs = set()
        for _ in range(rng.randrange(0, 14)):
            u, v = rng.randrange(n), rng.randrange(n)
            if u != v:
                pairs.add((min(u, v), max(u, v)))
        g = Multigraph(n, tuple(sorted(pairs)))
        expected = brute_claw_centers(g)
        got = find_claw(g)
        assert (got is None) == (not expected)
        if got is not None:
            a, b, c = got.leaves
            assert all(g.has_edge(got.center, x) for x in got.leaves)
            assert not (g.has_edge(a, b) or g.has_edge(a, c) or g.has_edge(b, c))


def test_is_claw_free():
    assert is_claw_free(K4)
    assert not is_claw_free(STAR_K13)
    assert not is_claw_free(PETERSEN)


def test_three_edge_connected_examples():
    assert is_three_edge_connected(K4)
    assert is_three_edge_connected(PRISM)
    assert is_three_edge_connected(TRIPLE_BOND)
    assert not is_three_edge_connected(PATH3)
    assert not is_three_edge_connected(DOUBLE_DOUBLE)  # the two parallel pairs are 2-cuts
    # consecutive connecting edges of a diamond ring form a 2-cut
    assert not is_three_edge_connected(ring_of_diamonds(2))


def test_connected_components():
    assert connected_components(PATH3) == [(0, 1, 2)]
    g = Multigraph(5, ((0, 1), (2, 3)))
    assert connected_components(g) == [(0, 1), (2, 3), (4,)]
    assert not is_connected(g)
    assert is_connected(Multigraph(0, ()))
