"""Vertex-labelled undirected graphs whose walks are words.

Vertices are letters. Loops are allowed. The hatted vertices of the 5-path
are encoded project-wide as 2-hat = 3 and 0-hat = 4, so P5 is the path
2-0-1-3-4.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import AlphabetError, DomainError
from .words import MAX_ALPHABET


@dataclass(frozen=True)
class LabelledGraph:
    vertex_count: int
    edges: frozenset[tuple[int, int]]  # pairs normalized (a <= b); (v, v) is a loop

    def __post_init__(self):
        if not 1 <= self.vertex_count <= MAX_ALPHABET:
            raise AlphabetError(f"vertex count must be 1..{MAX_ALPHABET}")
        for a, b in self.edges:
            if not (0 <= a <= b < self.vertex_count):
                raise AlphabetError(f"edge ({a},{b}) outside vertex range")

    def has_edge(self, a: int, b: int) -> bool:
        return (a, b) in self.edges if a <= b else (b, a) in self.edges

    def adjacency(self) -> list[list[bool]]:
        adj = [[False] * self.vertex_count for _ in range(self.vertex_count)]
        for a, b in self.edges:
            adj[a][b] = True
            adj[b][a] = True
        return adj


def graph_from_edges(vertex_count: int, pairs) -> LabelledGraph:
    edges = frozenset((a, b) if a <= b else (b, a) for a, b in pairs)
    return LabelledGraph(vertex_count, edges)


_BUILTINS = {
    "K3": (3, [(0, 1), (1, 2), (0, 2)]),
    "C4": (4, [(0, 1), (1, 2), (2, 3), (0, 3)]),
    "K13": (4, [(0, 3), (1, 3), (2, 3)]),
    "P5": (5, [(0, 2), (0, 1), (1, 3), (3, 4)]),
    "P4": (4, [(0, 1), (1, 2), (2, 3)]),
    "P3STAR": (3, [(0, 1), (1, 2), (2, 2)]),
}


def builtin_graph(name: str) -> LabelledGraph:
    """Named graphs: K3, C4, K13, P5 (path 2-0-1-3-4), P4, P3STAR (path + loop at 2)."""
    key = name.upper()
    if key not in _BUILTINS:
        raise DomainError(f"unknown builtin graph {name!r}; known: {', '.join(sorted(_BUILTINS))}")
    count, pairs = _BUILTINS[key]
    return graph_from_edges(count, pairs)


def is_walk(w: str, g: LabelledGraph) -> bool:
    """True iff every adjacent letter pair of ``w`` is an edge of ``g``."""
    letters = [int(ch) for ch in w]
    for a in letters:
        if a >= g.vertex_count:
            raise DomainError(f"letter {a} is not a vertex of the graph")
    return all(g.has_edge(a, b) for a, b in zip(letters, letters[1:]))
