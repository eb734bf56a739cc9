"""Brute-force planarity oracle for small graphs.

Searches exhaustively for a subdivision of K5 or K3,3 (Kuratowski's theorem).
Shares no code with the left-right test and is meant for graphs with at most
about ten vertices.
"""

from __future__ import annotations

from itertools import combinations

from .graph import MultiGraph, simple_underlying


def _link_all(adj, pairs, branch, used):
    """Route every pair through internally disjoint paths avoiding ``used``."""
    if not pairs:
        return True
    (a, b), rest = pairs[0], pairs[1:]

    def walk(v, path_used):
        for w in adj[v]:
            if w == b:
                if _link_all(adj, rest, branch, used | path_used):
                    return True
            elif w not in branch and w not in used and w not in path_used:
                if walk(w, path_used | {w}):
                    return True
        return False

    return walk(a, frozenset())


def _has_k5(adj, n):
    cands = [v for v in range(n) if len(adj[v]) >= 4]
    for branch in combinations(cands, 5):
        pairs = list(combinations(branch, 2))
        if _link_all(adj, pairs, frozenset(branch), frozenset()):
            return True
    return False


def _has_k33(adj, n):
    cands = [v for v in range(n) if len(adj[v]) >= 3]
    for six in combinations(cands, 6):
        first, others = six[0], six[1:]
        for pair in combinations(others, 2):
            side1 = (first,) + pair
            side2 = tuple(v for v in others if v not in pair)
            pairs = [(x, y) for x in side1 for y in side2]
            if _link_all(adj, pairs, frozenset(six), frozenset()):
                return True
    return False


def kuratowski_planar(g: MultiGraph) -> bool:
    """True iff g contains no subdivision of K5 or K3,3."""
    s = simple_underlying(g)
    adj = [sorted(nb) for nb in s.adjacency()]
    n = s.vertex_count
    return not (_has_k5(adj, n) or _has_k33(adj, n))
