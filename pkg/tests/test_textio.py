"""Text round-trips and strict parse failures."""

import pytest
from hypothesis import given
from hypothesis import strategies as st

from chordalkit.errors import GraphTooLarge, InvalidOrdering, ParseError
from chordalkit.graph import Graph, VertexOrdering
from chordalkit.textio import (
    parse_graph_text,
    parse_ordering_text,
    write_graph_text,
    write_ordering_text,
)
from helpers import c4


def test_write_graph_golden():
    assert write_graph_text(c4()) == "p 4 4\ne 1 2\ne 1 4\ne 2 3\ne 3 4\n"


def test_parse_graph_roundtrip_c4():
    assert parse_graph_text(write_graph_text(c4())) == c4()


def test_parse_accepts_comments_and_blank_lines():
    text = "c a remark\n\np 3 1\nc another\ne 3 1\n"
    g = parse_graph_text(text)
    assert g.n == 3 and g.m == 1 and g.has_edge(1, 3)


def test_parse_accepts_bytes():
    assert parse_graph_text(b"p 2 1\ne 1 2\n").m == 1


@pytest.mark.parametrize(
    "text, fragment",
    [
        ("", "missing header"),
        ("e 1 2\n", "header"),
        ("p 2\n", "header"),
        ("p 2 x\n", "integers"),
        ("p -1 0\n", "non-negative"),
        ("p 2 1\ne 1 3\n", "range"),
        ("p 2 1\ne 0 1\n", "range"),
        ("p 3 1\ne 2 2\n", "self-loop"),
        ("p 3 2\ne 1 2\ne 2 1\n", "duplicate"),
        ("p 3 1\ne 1 2\ne 2 3\n", "more than the declared"),
        ("p 3 2\ne 1 2\n", "declares 2 edges but 1"),
        ("p 3 1\nx 1 2\n", "edge line"),
        ("p 3 1\ne 1 2 3\n", "edge line"),
        ("p 3 1\ne 1 q\n", "integers"),
    ],
)
def test_parse_errors(text, fragment):
    with pytest.raises(ParseError) as err:
        parse_graph_text(text)
    assert fragment in str(err.value)


def test_parse_error_reports_line_number():
    with pytest.raises(ParseError) as err:
        parse_graph_text("c hi\np 2 1\ne 1 3\n")
    assert err.value.line == 3
    assert "line 3" in str(err.value)


def test_parse_respects_cap():
    with pytest.raises(GraphTooLarge):
        parse_graph_text("p 100 0\n", cap=99)


def test_ordering_roundtrip_and_errors():
    o = VertexOrdering([1, 2, 4, 3])
    assert write_ordering_text(o) == "1 2 4 3\n"
    assert parse_ordering_text("1 2 4 3\n", 4) == o
    assert parse_ordering_text(b" 1\t2 4 3 ", 4) == o
    with pytest.raises(InvalidOrdering):
        parse_ordering_text("1 2 3\n", 4)
    with pytest.raises(InvalidOrdering):
        parse_ordering_text("1 2 4 4\n", 4)
    with pytest.raises(ParseError):
        parse_ordering_text("1 2 4 x\n", 4)


@st.composite
def graphs(draw):
    n = draw(st.integers(min_value=0, max_value=14))
    pairs = [(u, v) for u in range(1, n + 1) for v in range(u + 1, n + 1)]
    chosen = draw(st.lists(st.sampled_from(pairs), unique=True, max_size=len(pairs))) if pairs else []
    return Graph.from_edge_list(n, chosen)


@given(graphs())
def test_graph_text_roundtrip(g):
    assert parse_graph_text(write_graph_text(g)) == g
