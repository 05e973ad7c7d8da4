"""Why the bridgeless hypothesis is necessary.

A family of claw-free cubic graphs with cutedges keeps exactly 9 perfect
matchings no matter how large it grows: every bridge is forced into
every matching, so the count never leaves the two end blocks.  Compare
that with bridgeless graphs of the same sizes, whose counts grow
exponentially.
"""

from clawmatch import (
    bridges,
    certify,
    count_perfect_matchings,
    figure1_graph,
    is_claw_free,
    is_cubic,
    ring_of_diamonds,
)


def main():
    print("bridged family:")
    for segments in range(4):
        g = figure1_graph(segments)
        assert is_cubic(g) and is_claw_free(g)
        print(f"  n={g.n:>2}: {len(bridges(g).members)} bridges, "
              f"{count_perfect_matchings(g)} perfect matchings")
    print()
    print("bridgeless rings of the same scale:")
    for d in (2, 3, 4, 5):
        g = ring_of_diamonds(d)
        cert = certify(g)
        print(f"  n={g.n:>2}: 0 bridges, {count_perfect_matchings(g)} perfect matchings, "
              f"certificate size {len(cert.matchings)}")


if __name__ == "__main__":
    main()
