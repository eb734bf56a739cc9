"""Isomorphism of small simple graphs by colour refinement plus backtracking."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .errors import SizeLimitExceeded
from .graph import MultiGraph, simple_underlying

MAX_VERTICES = 64


@dataclass(frozen=True)
class IsoCertificate:
    """Vertex bijection ``v -> mapping[v]`` from one graph onto another."""

    mapping: tuple[int, ...]

    def validate(self, g: MultiGraph, h: MultiGraph) -> bool:
        """True iff the mapping carries the simple edge set of g onto that of h."""
        gs, hs = simple_underlying(g), simple_underlying(h)
        n = gs.vertex_count
        if n != hs.vertex_count or sorted(self.mapping) != list(range(n)):
            return False
        return gs.relabel(self.mapping).edges == hs.edges


def _joint_refine(adj_g, adj_h):
    """Refine both graphs against a shared palette so colours are comparable."""
    n = len(adj_g)
    cg = [0] * n
    ch = [0] * n
    count = 1
    while True:
        sg = [(cg[v], tuple(sorted(cg[w] for w in adj_g[v]))) for v in range(n)]
        sh = [(ch[v], tuple(sorted(ch[w] for w in adj_h[v]))) for v in range(n)]
        palette = {s: i for i, s in enumerate(sorted(set(sg) | set(sh)))}
        cg = [palette[s] for s in sg]
        ch = [palette[s] for s in sh]
        if len(palette) == count:
            return cg, ch
        count = len(palette)


def are_isomorphic(g: MultiGraph, h: MultiGraph) -> Optional[IsoCertificate]:
    """Certificate mapping g onto h, or None when the graphs are not isomorphic.

    Both graphs are compared through their simple underlying graphs.
    """
    gs, hs = simple_underlying(g), simple_underlying(h)
    n = gs.vertex_count
    if n > MAX_VERTICES or hs.vertex_count > MAX_VERTICES:
        raise SizeLimitExceeded(f"isomorphism supported up to {MAX_VERTICES} vertices")
    if n != hs.vertex_count or gs.edge_count != hs.edge_count:
        return None
    if n == 0:
        return IsoCertificate(())
    adj_g, adj_h = gs.adjacency(), hs.adjacency()
    cg, ch = _joint_refine(adj_g, adj_h)
    if sorted(cg) != sorted(ch):
        return None

    # visit g's vertices rarest colour first, then by adjacency to visited ones
    freq: dict[int, int] = {}
    for c in cg:
        freq[c] = freq.get(c, 0) + 1
    order: list[int] = []
    placed = [False] * n
    while len(order) < n:
        start = min((v for v in range(n) if not placed[v]), key=lambda v: (freq[cg[v]], cg[v], v))
        frontier = [start]
        placed[start] = True
        while frontier:
            v = frontier.pop(0)
            order.append(v)
            for w in sorted(adj_g[v], key=lambda w: (freq[cg[w]], w)):
                if not placed[w]:
                    placed[w] = True
                    frontier.append(w)

    by_color: dict[int, list[int]] = {}
    for v in range(n):
        by_color.setdefault(ch[v], []).append(v)

    mapping = [-1] * n
    used = [False] * n

    def extend(k: int) -> bool:
        if k == n:
            return True
        v = order[k]
        mapped_nb = [mapping[w] for w in adj_g[v] if mapping[w] >= 0]
        if mapped_nb:
            cands = sorted(x for x in adj_h[mapped_nb[0]] if ch[x] == cg[v])
        else:
            cands = by_color[cg[v]]
        for x in cands:
            if used[x]:
                continue
            ok = True
            for w in order[:k]:
                if (w in adj_g[v]) != (mapping[w] in adj_h[x]):
                    ok = False
                    break
            if not ok:
                continue
            mapping[v] = x
            used[x] = True
            if extend(k + 1):
                return True
            mapping[v] = -1
            used[x] = False
        return False

    if not extend(0):
        return None
    cert = IsoCertificate(tuple(mapping))
    assert cert.validate(gs, hs)
    return cert
