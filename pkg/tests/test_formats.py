import io

import pytest
from hypothesis import given, settings, strategies as st

from conftest import random_graph
from specter.formats import DumpFormatError, read_adjacency_dump, read_adjacency_dumps, write_adjacency_dump
from specter.graphcore import Graph


@given(st.integers(0, 80), st.randoms(use_true_random=False))
@settings(max_examples=80, deadline=None)
def test_roundtrip(n, r):
    G = random_graph(r, n, 0.5)
    assert read_adjacency_dump(io.StringIO(write_adjacency_dump(G))) == [G]


def test_layout():
    # column j is bit j from the most significant bit of the first hex digit
    text = write_adjacency_dump(Graph.from_edges(5, [(0, 1), (0, 4)]))
    assert text.splitlines() == ["n=5", "48", "80", "00", "00", "80"]


def test_stream_with_comments():
    G, H = Graph.complete(3), Graph.path(4)
    text = "# first\n" + write_adjacency_dump(G) + "\n# second\n" + write_adjacency_dump(H)
    assert list(read_adjacency_dumps(text.splitlines())) == [G, H]


@pytest.mark.parametrize("text", ["n=2\n4\n0\n", "x=2\n", "n=2\n40\n", "n=3\n4\n8\n", "n=1\n8\n", "n=2\nzz\n80\n", "n=a\n"])
def test_errors(text):
    with pytest.raises(DumpFormatError):
        list(read_adjacency_dumps(io.StringIO(text)))
