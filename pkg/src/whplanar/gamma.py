"""The graphs Gamma_n(A, B, Q) on vertices v_0..v_{n-1}, v'_0..v'_{n-1}.

Vertex ``v_i`` has index ``i`` and ``v'_i`` has index ``n + i``. Edges are
``(v_i, v_{i+a})`` for a in A, ``(v'_i, v'_{i+b})`` for b in B and
``(v_i, v'_{i+q})`` for q in Q, subscripts mod n.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd
from typing import Iterable

from .circulant import circulant_edges, fold, gcd_all
from .errors import EmptyQ, ZeroStep
from .graph import MultiGraph, simple_underlying
from .planarity import is_planar


@dataclass(frozen=True)
class GammaSpec:
    """Step sets of Gamma_n(A, B, Q), stored as sorted tuples of residues."""

    n: int
    A: tuple[int, ...] = ()
    B: tuple[int, ...] = ()
    Q: tuple[int, ...] = ()

    def __post_init__(self):
        if self.n < 1:
            raise ValueError("n must be positive")
        for name in ("A", "B", "Q"):
            vals = tuple(sorted(set(int(x) for x in getattr(self, name))))
            for x in vals:
                if not 0 <= x < self.n:
                    raise ValueError(f"{name} element {x} outside 0..{self.n - 1}")
            object.__setattr__(self, name, vals)

    @property
    def is_canonical(self) -> bool:
        return all(a <= self.n - a for a in self.A) and all(b <= self.n - b for b in self.B)

    @property
    def is_strict(self) -> bool:
        return 0 not in self.A and 0 not in self.B

    def swapped(self) -> "GammaSpec":
        """Spec of the same graph with the two vertex orbits exchanged."""
        return GammaSpec(self.n, self.B, self.A, tuple((-q) % self.n for q in self.Q))

    def key(self) -> tuple:
        return (self.n, self.A, self.B, self.Q)

    def __str__(self) -> str:
        def fmt(xs):
            return "{" + ",".join(map(str, xs)) + "}" if xs else "{}"

        return f"Gamma_{self.n}({fmt(self.A)},{fmt(self.B)},{fmt(self.Q)})"


def _canonical(n: int, rawA, rawB, rawQ) -> GammaSpec:
    A = {fold(a, n) for a in rawA}
    B = {fold(b, n) for b in rawB}
    Q = {q % n for q in rawQ}
    return GammaSpec(n, tuple(A), tuple(B), tuple(Q))


def canonicalize_gamma(n: int, rawA: Iterable[int], rawB: Iterable[int], rawQ: Iterable[int]) -> GammaSpec:
    """Fold A and B under negation mod n; Q is kept as given.

    Raises ZeroStep if 0 occurs in A or B; use ``canonicalize_gamma_loose``
    for graphs with loops.
    """
    rawA, rawB = list(rawA), list(rawB)
    if any(a % n == 0 for a in rawA) or any(b % n == 0 for b in rawB):
        raise ZeroStep("0 is not allowed in A or B")
    return _canonical(n, rawA, rawB, rawQ)


def canonicalize_gamma_loose(n: int, rawA: Iterable[int], rawB: Iterable[int], rawQ: Iterable[int]) -> GammaSpec:
    return _canonical(n, rawA, rawB, rawQ)


def vertex_labels(n: int) -> list[str]:
    return [f"v{i}" for i in range(n)] + [f"v{i}'" for i in range(n)]


def build_gamma(spec: GammaSpec) -> MultiGraph:
    n = spec.n
    edges = circulant_edges(n, spec.A) + circulant_edges(n, spec.B, offset=n)
    edges += [(i, n + (i + q) % n) for q in spec.Q for i in range(n)]
    return MultiGraph(2 * n, edges, vertex_labels(n))


@dataclass(frozen=True)
class GammaDecomposition:
    d: int
    quotient: GammaSpec


def gamma_components(spec: GammaSpec) -> GammaDecomposition:
    """Component count and the spec each component is isomorphic to.

    With q0 = min Q, d = gcd(n, A, B, q - q0) and the components are copies of
    Gamma_{n/d}(A/d, B/d, {q0 + (q - q0)/d}).
    """
    if not spec.Q:
        raise EmptyQ("component formula needs Q non-empty; use the circulant halves")
    n = spec.n
    q0 = min(spec.Q)
    d = gcd_all(n, list(spec.A) + list(spec.B) + [q - q0 for q in spec.Q])
    m = n // d
    quotient = canonicalize_gamma_loose(
        m,
        [a // d for a in spec.A],
        [b // d for b in spec.B],
        [q0 + (q - q0) // d for q in spec.Q],
    )
    return GammaDecomposition(d, quotient)


def shift_permutation(n: int) -> list[int]:
    """The order-n rotation v_i -> v_{i+1}, v'_i -> v'_{i+1}."""
    return [(i + 1) % n for i in range(n)] + [n + (i + 1) % n for i in range(n)]


def edge_orbits(g: MultiGraph, perm: list[int]) -> list[int]:
    """Orbit lengths of the simple edge set under a vertex permutation."""
    remaining = set(simple_underlying(g).edges) | {e for e in g.edges if e[0] == e[1]}
    lengths = []
    while remaining:
        start = min(remaining)
        e, size = start, 0
        while True:
            remaining.discard(e)
            size += 1
            a, b = perm[e[0]], perm[e[1]]
            e = (min(a, b), max(a, b))
            if e == start:
                break
        lengths.append(size)
    return sorted(lengths)


def _cycle_lengths(perm: list[int]) -> list[int]:
    seen = [False] * len(perm)
    out = []
    for v in range(len(perm)):
        if not seen[v]:
            size, w = 0, v
            while not seen[w]:
                seen[w] = True
                w = perm[w]
                size += 1
            out.append(size)
    return sorted(out)


@dataclass(frozen=True)
class ConditionReport:
    c1_planar: bool
    c2prime_regularizable: bool
    c3a_loopless: bool
    c3b_simple: bool
    c4_vertexcount: bool
    c5_automorphism: bool
    c6_intra_orbit_edge: bool
    c7_inter_orbit_edge: bool
    c8_unit_steps: bool
    edge_orbit_lengths: tuple[int, ...]

    def all_hold(self) -> bool:
        return all(
            (
                self.c1_planar,
                self.c2prime_regularizable,
                self.c3a_loopless,
                self.c3b_simple,
                self.c4_vertexcount,
                self.c5_automorphism,
                self.c6_intra_orbit_edge,
                self.c7_inter_orbit_edge,
                self.c8_unit_steps,
            )
        )


def unit_step_condition(spec: GammaSpec) -> bool:
    """Condition (8): some a in A and some b in B are units mod n (vacuous if Q is empty)."""
    if not spec.Q:
        return True
    n = spec.n
    return any(gcd(a, n) == 1 for a in spec.A) and any(gcd(b, n) == 1 for b in spec.B)


def check_conditions(spec: GammaSpec) -> ConditionReport:
    g = build_gamma(spec)
    n = spec.n
    perm = shift_permutation(n)
    # the shift must map the edge multiset onto itself and act with two n-cycles
    is_auto = g.relabel(perm).edges == g.edges
    regular = _cycle_lengths(perm) == [n, n]
    return ConditionReport(
        c1_planar=is_planar(g),
        c2prime_regularizable=(not spec.A and not spec.B) or (bool(spec.A) and bool(spec.B)),
        c3a_loopless=spec.is_strict,
        c3b_simple=len(set(g.edges)) == len(g.edges),
        c4_vertexcount=g.vertex_count == 2 * n,
        c5_automorphism=is_auto and regular,
        c6_intra_orbit_edge=bool(spec.A) or bool(spec.B),
        c7_inter_orbit_edge=bool(spec.Q),
        c8_unit_steps=unit_step_condition(spec),
        edge_orbit_lengths=tuple(edge_orbits(g, perm)),
    )
