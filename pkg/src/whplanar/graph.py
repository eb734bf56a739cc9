"""Undirected labelled multigraphs and the basic operations on them."""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from typing import Iterable, Optional, Sequence

from .errors import LoopContraction, NotAnEdge

Edge = tuple[int, int]


def _norm(u: int, v: int) -> Edge:
    return (u, v) if u <= v else (v, u)


@dataclass(frozen=True)
class MultiGraph:
    """Multigraph on vertices ``0..vertex_count-1``.

    Edges are kept as a sorted tuple of ``(min, max)`` pairs, so two graphs
    compare equal exactly when their edge multisets agree. Loops are allowed
    and count twice towards the degree of their vertex.
    """

    vertex_count: int
    edges: tuple[Edge, ...] = ()
    labels: Optional[tuple[str, ...]] = field(default=None, compare=False)

    def __init__(
        self,
        vertex_count: int,
        edges: Iterable[Sequence[int]] = (),
        labels: Optional[Iterable[str]] = None,
    ):
        if vertex_count < 0:
            raise ValueError("vertex_count must be non-negative")
        normed = sorted((u, v) if u <= v else (v, u) for u, v in edges)
        if normed:
            lo = min(u for u, _ in normed)
            hi = max(v for _, v in normed)
            if lo < 0 or hi >= vertex_count:
                raise ValueError(f"edge endpoint out of range for {vertex_count} vertices")
        if labels is not None:
            labels = tuple(str(s) for s in labels)
            if len(labels) != vertex_count:
                raise ValueError("one label per vertex required")
        object.__setattr__(self, "vertex_count", int(vertex_count))
        object.__setattr__(self, "edges", tuple(normed))
        object.__setattr__(self, "labels", labels)

    @property
    def edge_count(self) -> int:
        return len(self.edges)

    def label(self, v: int) -> str:
        return self.labels[v] if self.labels is not None else str(v)

    def degree(self, v: int) -> int:
        return sum((a == v) + (b == v) for a, b in self.edges)

    def degrees(self) -> list[int]:
        deg = [0] * self.vertex_count
        for a, b in self.edges:
            deg[a] += 1
            deg[b] += 1
        return deg

    def multiplicity(self, u: int, v: int) -> int:
        return self.edge_counter()[_norm(u, v)]

    def edge_counter(self) -> Counter:
        return Counter(self.edges)

    def has_loops(self) -> bool:
        return any(a == b for a, b in self.edges)

    def is_simple(self) -> bool:
        return not self.has_loops() and len(set(self.edges)) == len(self.edges)

    def adjacency(self) -> list[set[int]]:
        """Neighbour sets of the simple underlying graph."""
        adj: list[set[int]] = [set() for _ in range(self.vertex_count)]
        for a, b in self.edges:
            if a != b:
                adj[a].add(b)
                adj[b].add(a)
        return adj

    def add_edges(self, extra: Iterable[Sequence[int]]) -> "MultiGraph":
        return MultiGraph(self.vertex_count, list(self.edges) + list(extra), self.labels)

    def relabel(self, mapping: Sequence[int]) -> "MultiGraph":
        """Image of the graph under the vertex bijection ``v -> mapping[v]``."""
        labels = None
        if self.labels is not None:
            labels = [""] * self.vertex_count
            for v, w in enumerate(mapping):
                labels[w] = self.labels[v]
        return MultiGraph(self.vertex_count, [(mapping[a], mapping[b]) for a, b in self.edges], labels)

    def induced_subgraph(self, vertices: Iterable[int]) -> "MultiGraph":
        keep = sorted(set(vertices))
        index = {v: i for i, v in enumerate(keep)}
        edges = [(index[a], index[b]) for a, b in self.edges if a in index and b in index]
        labels = [self.label(v) for v in keep] if self.labels is not None else None
        return MultiGraph(len(keep), edges, labels)

    @classmethod
    def complete(cls, k: int) -> "MultiGraph":
        return cls(k, [(i, j) for i in range(k) for j in range(i + 1, k)])

    @classmethod
    def complete_bipartite(cls, p: int, q: int) -> "MultiGraph":
        return cls(p + q, [(i, p + j) for i in range(p) for j in range(q)])

    @classmethod
    def cycle(cls, k: int) -> "MultiGraph":
        return cls(k, [(i, (i + 1) % k) for i in range(k)])


def simple_underlying(g: MultiGraph) -> MultiGraph:
    """Drop loops and collapse parallel edges; the vertex set is unchanged."""
    edges = sorted({e for e in g.edges if e[0] != e[1]})
    return MultiGraph(g.vertex_count, edges, g.labels)


def components(g: MultiGraph) -> list[list[int]]:
    """Connected components as sorted vertex lists, ordered by smallest vertex."""
    adj = g.adjacency()
    seen = [False] * g.vertex_count
    out = []
    for root in range(g.vertex_count):
        if seen[root]:
            continue
        seen[root] = True
        comp = [root]
        stack = [root]
        while stack:
            v = stack.pop()
            for w in adj[v]:
                if not seen[w]:
                    seen[w] = True
                    comp.append(w)
                    stack.append(w)
        out.append(sorted(comp))
    return out


def is_connected(g: MultiGraph) -> bool:
    return len(components(g)) <= 1


def contract_edge(g: MultiGraph, u: int, v: int) -> tuple[MultiGraph, list[int]]:
    """Contract one copy of the edge ``(u, v)``.

    Returns the contracted graph and the relabelling ``old index -> new
    index``: the merged vertex takes index ``min(u, v)`` and the indices above
    ``max(u, v)`` shift down by one. Further copies of ``(u, v)`` become loops
    and every other edge is kept, so exactly one edge and one vertex vanish.
    """
    key = _norm(u, v)
    if u == v:
        raise LoopContraction(f"cannot contract loop at {u}")
    if key not in g.edge_counter():
        raise NotAnEdge(f"({u}, {v}) is not an edge")
    keep, gone = key
    relabel = []
    for w in range(g.vertex_count):
        if w == gone:
            relabel.append(keep if keep < gone else keep - 1)
        elif w > gone:
            relabel.append(w - 1)
        else:
            relabel.append(w)
    edges = list(g.edges)
    edges.remove(key)
    new_edges = [(relabel[a], relabel[b]) for a, b in edges]
    labels = None
    if g.labels is not None:
        labels = [g.labels[w] for w in range(g.vertex_count) if w != gone]
    return MultiGraph(g.vertex_count - 1, new_edges, labels), relabel


def contract_edges(g: MultiGraph, pairs: Iterable[Sequence[int]]) -> MultiGraph:
    """Contract a sequence of edges named by their original vertex indices.

    A pair whose endpoints have already been merged is skipped.
    """
    current = g
    where = list(range(g.vertex_count))
    for a, b in pairs:
        x, y = where[a], where[b]
        if x == y:
            continue
        current, relabel = contract_edge(current, x, y)
        where = [relabel[w] for w in where]
    return current


def _quote(s: str) -> str:
    return '"' + s.replace("\\", "\\\\").replace('"', '\\"') + '"'


def to_dot(g: MultiGraph, name: str = "") -> str:
    """DOT source with one vertex line per vertex and one line per edge copy."""
    head = f"graph {_quote(name)} {{" if name else "graph {"
    lines = [head]
    for v in range(g.vertex_count):
        lines.append(f"  {_quote(g.label(v))};")
    for a, b in g.edges:
        lines.append(f"  {_quote(g.label(a))} -- {_quote(g.label(b))};")
    lines.append("}")
    return "\n".join(lines) + "\n"
