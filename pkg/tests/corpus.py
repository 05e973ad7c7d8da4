"""Shared test graphs.

Hand-coded edge lists are written out explicitly so the fixtures stay
independent of the construction code they are used to check.
"""

import random

from clawmatch import Multigraph, build, figure1_graph, random_base, ring_of_diamonds

K4 = Multigraph(4, ((0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)))

TRIPLE_BOND = Multigraph(2, ((0, 1), (0, 1), (0, 1)))

# two triangles joined by three rungs, written out by hand
PRISM = Multigraph(
    6, ((0, 1), (0, 2), (1, 2), (3, 4), (3, 5), (4, 5), (0, 3), (1, 4), (2, 5))
)

PETERSEN = Multigraph(
    10,
    tuple((i, (i + 1) % 5) for i in range(5))
    + tuple((i, i + 5) for i in range(5))
    + tuple((5 + i, 5 + (i + 2) % 5) for i in range(5)),
)

K33 = Multigraph(6, ((0, 3), (0, 4), (0, 5), (1, 3), (1, 4), (1, 5), (2, 3), (2, 4), (2, 5)))

PATH3 = Multigraph(3, ((0, 1), (1, 2)))

TRIANGLE = Multigraph(3, ((0, 1), (0, 2), (1, 2)))

STAR_K13 = Multigraph(4, ((0, 1), (0, 2), (0, 3)))

TWO_TRIANGLES_BRIDGED = Multigraph(
    6, ((0, 1), (0, 2), (1, 2), (3, 4), (3, 5), (4, 5), (2, 3))
)

LOOP1 = Multigraph(1, ((0, 0),))

# cubic multigraph with two parallel pairs
DOUBLE_DOUBLE = Multigraph(4, ((0, 1), (0, 1), (0, 2), (1, 3), (2, 3), (2, 3)))


def base_corpus():
    """Connected cubic 2-edge-connected multigraphs usable as bases, m <= 16."""
    items = [
        ("triple-bond", TRIPLE_BOND),
        ("k4", K4),
        ("prism", PRISM),
        ("k33", K33),
        ("petersen", PETERSEN),
        ("double-double", DOUBLE_DOUBLE),
    ]
    for k in (4, 6, 8):
        for seed in (0, 1):
            items.append((f"random-base-{k}-{seed}", random_base(k, seed=seed)))
    return items


def certify_corpus():
    """2-edge-connected claw-free cubic graphs with n <= 28."""
    items = [
        ("k4", K4),
        ("prism", PRISM),
    ]
    for d in (2, 3, 4, 5):
        items.append((f"ring-{d}", ring_of_diamonds(d)))
    built = [
        ("tri-k4", K4, [0] * 6),
        ("tb-100", TRIPLE_BOND, [1, 0, 0]),
        ("tb-111", TRIPLE_BOND, [1, 1, 1]),
        ("tb-210", TRIPLE_BOND, [2, 1, 0]),
        ("tb-400", TRIPLE_BOND, [4, 0, 0]),
        ("k4-100000", K4, [1, 0, 0, 0, 0, 0]),
        ("k4-110000", K4, [1, 1, 0, 0, 0, 0]),
        ("dd-201000", DOUBLE_DOUBLE, [2, 0, 1, 0, 0, 0]),
        ("k33-0", K33, [0] * 9),
        ("rb6-1-0", random_base(6, seed=1), [0] * 9),
        ("rb6-2-1", random_base(6, seed=2), [1, 0, 0, 0, 0, 0, 0, 0, 0]),
        ("rb8-5-0", random_base(8, seed=5), [0] * 12),
        ("rb8-8-1", random_base(8, seed=8), [1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0]),
    ]
    for name, h, lengths in built:
        g, _ = build(h, lengths)
        assert g.n <= 28, name
        items.append((name, g))
    return items


def cubic_corpus_small():
    """Cubic graphs with n <= 18 for the complement-bijection checks."""
    items = [
        ("k4", K4),
        ("triple-bond", TRIPLE_BOND),
        ("prism", PRISM),
        ("k33", K33),
        ("petersen", PETERSEN),
        ("double-double", DOUBLE_DOUBLE),
        ("ring-2", ring_of_diamonds(2)),
        ("ring-3", ring_of_diamonds(3)),
        ("ring-4", ring_of_diamonds(4)),
        ("fig1-0", figure1_graph(0)),
    ]
    for name, h, lengths in [
        ("tri-k4", K4, [0] * 6),
        ("tb-100", TRIPLE_BOND, [1, 0, 0]),
        ("tb-110", TRIPLE_BOND, [1, 1, 0]),
    ]:
        g, _ = build(h, lengths)
        assert g.n <= 18
        items.append((name, g))
    return items


def seeded_length_vector(rng: random.Random, m: int, max_total: int) -> list:
    lengths = [0] * m
    for _ in range(rng.randint(0, max_total)):
        lengths[rng.randrange(m)] += 1
    return lengths
