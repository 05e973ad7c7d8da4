import pytest

from clawmatch import (
    Multigraph,
    ParseError,
    build,
    certify,
    classify,
    parse_graph,
    ring_of_diamonds,
    serialize_certificate,
    serialize_decomposition,
    serialize_graph,
)
from corpus import K4, TRIPLE_BOND, certify_corpus

K4_DOC = """p 4 6
e 0 1
e 0 2
e 0 3
e 1 2
e 1 3
e 2 3
"""


def test_parse_k4():
    g = parse_graph(K4_DOC)
    assert g == K4


def test_parse_keeps_edge_order_and_multiplicity():
    g = parse_graph("p 2 3\ne 0 1\ne 1 0\ne 0 1\n")
    assert g.edges == ((0, 1), (1, 0), (0, 1))


def test_parse_loop():
    g = parse_graph("p 1 1\ne 0 0\n")
    assert g.edges == ((0, 0),)


def test_parse_comments_and_blank_lines():
    doc = "# a comment\n\np 2 1   # header\ne 0 1\n"
    assert parse_graph(doc).m == 1


def test_parse_errors_carry_line_numbers():
    with pytest.raises(ParseError) as exc:
        parse_graph("p 4 1\ne 0 5\n")
    assert exc.value.line == 2
    with pytest.raises(ParseError) as exc:
        parse_graph("q 4 1\n")
    assert exc.value.line == 1
    with pytest.raises(ParseError):
        parse_graph("p -1 0\n")
    with pytest.raises(ParseError):
        parse_graph("p 2 2\ne 0 1\n")  # missing edge
    with pytest.raises(ParseError) as exc:
        parse_graph("p 2 1\ne 0 1\ne 1 0\n")  # extra edge
    assert exc.value.line == 3
    with pytest.raises(ParseError):
        parse_graph("")
    with pytest.raises(ParseError):
        parse_graph("p 2 1\ne one 0\n")


def test_graph_roundtrip_is_identity_on_corpus():
    for name, g in certify_corpus():
        text = serialize_graph(g)
        assert parse_graph(text) == g, name
        assert serialize_graph(parse_graph(text)) == text, name


def test_serialize_graph_canonical():
    assert serialize_graph(Multigraph(2, ((0, 1), (0, 1)))) == "p 2 2\ne 0 1\ne 0 1\n"


def test_serialize_decomposition_prism():
    prism, _ = build(TRIPLE_BOND, [0, 0, 0])
    text = serialize_decomposition(classify(prism))
    assert text == (
        "kind=expanded\n"
        "n=6\n"
        "k=2\n"
        "h_edge_0=0,1\n"
        "h_edge_1=0,1\n"
        "h_edge_2=0,1\n"
        "lengths=[0,0,0]\n"
        "triangle_0=0,1,2\n"
        "triangle_1=3,4,5\n"
    )


def test_serialize_decomposition_other_kinds():
    assert serialize_decomposition(classify(K4)) == "kind=k4\nn=4\n"
    text = serialize_decomposition(classify(ring_of_diamonds(2)))
    assert text.startswith("kind=ring\nn=8\ndiamonds=2\n")
    assert "diamond_0=0,1,2,3" in text
    g, _ = build(TRIPLE_BOND, [1, 0, 0])
    text = serialize_decomposition(classify(g))
    assert "lengths=[1,0,0]" in text or "lengths=[0,0,1]" in text or "lengths=[0,1,0]" in text
    assert "string_" in text


def test_serialize_certificate_k4():
    text = serialize_certificate(certify(K4))
    assert text == "n=4\nbranch=k4\ncount=3\nbound_ok=true\n0 5\n1 4\n2 3\n"


def test_serializers_are_deterministic():
    for name, g in certify_corpus():
        if g.n > 16:
            continue
        assert serialize_decomposition(classify(g)) == serialize_decomposition(classify(g)), name
        assert serialize_certificate(certify(g)) == serialize_certificate(certify(g)), name
