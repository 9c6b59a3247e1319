import pytest
from hypothesis import given, strategies as st

from wordlab.errors import DomainError
from wordlab.graphs import LabelledGraph, builtin_graph, graph_from_edges, is_walk
from wordlab.morphisms import morphic_prefix, parse_morphism

B3 = parse_morphism("012/02/1")


def test_builtin_graphs():
    p3 = builtin_graph("P3STAR")
    assert p3.edges == frozenset({(0, 1), (1, 2), (2, 2)})
    assert len(builtin_graph("K3").edges) == 3
    p5 = builtin_graph("P5")
    assert p5.has_edge(1, 3) and not p5.has_edge(1, 2)
    assert builtin_graph("K13").edges == frozenset({(0, 3), (1, 3), (2, 3)})
    assert builtin_graph("C4").has_edge(3, 0)
    with pytest.raises(DomainError):
        builtin_graph("P6")


def test_is_walk_examples():
    p5 = builtin_graph("P5")
    assert is_walk("013431", p5)
    assert not is_walk("012", p5)
    assert is_walk("", p5) and is_walk("3", p5)
    assert is_walk("0122210", builtin_graph("P3STAR"))
    with pytest.raises(DomainError):
        is_walk("05", p5)


def test_graph_from_edges_normalizes():
    g = graph_from_edges(3, [(2, 0), (1, 0)])
    assert g.edges == frozenset({(0, 2), (0, 1)})
    assert g.has_edge(0, 2) and g.has_edge(2, 0)


@given(st.text(alphabet="01234", max_size=20), st.integers(0, 19), st.integers(0, 19))
def test_walk_factor_closure(w, i, j):
    g = builtin_graph("P5")
    if is_walk(w, g):
        lo, hi = min(i, j), max(i, j)
        assert is_walk(w[lo:hi], g)


@pytest.mark.parametrize(
    "image,graph",
    [("013431/0131/02", "P5"), ("1232/12/10", "P4"), ("122/12/10", "P3STAR")],
)
def test_paper_images_are_walks(image, graph):
    w = morphic_prefix(parse_morphism(image), B3, 10_000)
    assert is_walk(w, builtin_graph(graph))
