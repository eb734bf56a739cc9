"""Circulant graphs circ_n(S): construction, components and planarity."""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from math import gcd
from typing import Iterable, Optional

from .errors import NotCanonical
from .graph import MultiGraph


def fold(s: int, n: int) -> int:
    """Representative of ``{s, -s}`` mod n in ``0..n//2``."""
    s %= n
    return min(s, n - s)


def gcd_all(n: int, values: Iterable[int]) -> int:
    d = n
    for v in values:
        d = gcd(d, v)
    return d


@dataclass(frozen=True)
class CirculantSpec:
    n: int
    S: tuple[int, ...] = ()

    def __post_init__(self):
        if self.n < 1:
            raise ValueError("n must be positive")
        steps = tuple(sorted(set(int(s) for s in self.S)))
        for s in steps:
            if not 1 <= s <= self.n - 1:
                raise ValueError(f"step {s} outside 1..{self.n - 1}")
        object.__setattr__(self, "S", steps)

    @property
    def is_canonical(self) -> bool:
        return all(s <= self.n - s for s in self.S)


def canonicalize_circ(n: int, raw: Iterable[int]) -> CirculantSpec:
    steps = {fold(s, n) for s in raw}
    steps.discard(0)
    return CirculantSpec(n, tuple(steps))


def circulant_edges(n: int, steps: Iterable[int], offset: int = 0) -> list[tuple[int, int]]:
    """Edges ``(i, i+s)`` of circ_n(steps); an n/2 step gives n/2 edges, not n."""
    edges = set()
    for s in steps:
        for i in range(n):
            j = (i + s) % n
            edges.add((offset + min(i, j), offset + max(i, j)))
    return sorted(edges)


def build_circ(spec: CirculantSpec) -> MultiGraph:
    labels = [f"u{i}" for i in range(spec.n)]
    return MultiGraph(spec.n, circulant_edges(spec.n, spec.S), labels)


def circ_components(spec: CirculantSpec) -> tuple[int, CirculantSpec]:
    """Number of components d and the circulant each component is isomorphic to."""
    d = gcd_all(spec.n, spec.S)
    m = spec.n // d
    return d, canonicalize_circ(m, [s // d for s in spec.S])


class CircCase(str, Enum):
    EMPTY_OR_SINGLE = "EMPTY_OR_SINGLE"
    DOUBLE_STEP = "DOUBLE_STEP"
    HALF_STEP = "HALF_STEP"
    NONE = "NONE"


@dataclass(frozen=True)
class CircPlanarVerdict:
    planar: bool
    case: CircCase
    s: Optional[int]
    d: Optional[int]
    connected: bool


def classify_circ_planar(spec: CirculantSpec) -> CircPlanarVerdict:
    """Planarity of a canonical circulant from its step set alone.

    Planar exactly when S has at most one step, or S = {s, ±2s} with
    n/(n,s) even, or S = {s, n/2} with 2d | s and n/d = 2 mod 4 where
    d = (n/2, s). Anchors are tried in increasing order of s.
    """
    if not spec.is_canonical:
        raise NotCanonical(f"steps {spec.S} are not folded mod {spec.n}")
    n, S = spec.n, spec.S
    connected = circ_components(spec)[0] == 1
    if len(S) <= 1:
        s = S[0] if S else None
        return CircPlanarVerdict(True, CircCase.EMPTY_OR_SINGLE, s, gcd_all(n, S), connected)
    if len(S) == 2:
        for s in S:
            (other,) = [t for t in S if t != s]
            if other == fold(2 * s, n):
                d = gcd(n, s)
                if (n // d) % 2 == 0:
                    return CircPlanarVerdict(True, CircCase.DOUBLE_STEP, s, d, connected)
            if n % 2 == 0 and other == n // 2:
                d = gcd(n // 2, s)
                if s % (2 * d) == 0 and (n // d) % 4 == 2:
                    return CircPlanarVerdict(True, CircCase.HALF_STEP, s, d, connected)
    return CircPlanarVerdict(False, CircCase.NONE, None, None, connected)


def connected_circ_planar(spec: CirculantSpec) -> bool:
    """Planarity test valid only for connected canonical circulants.

    S = {s}; or S = {s, ±2s} with n even; or S = {s, n/2} with s even and
    n = 2 mod 4.
    """
    n, S = spec.n, spec.S
    if len(S) == 1:
        return True
    if len(S) != 2:
        return False
    for s in S:
        (other,) = [t for t in S if t != s]
        if n % 2 == 0 and other == fold(2 * s, n):
            return True
        if n % 4 == 2 and other == n // 2 and s % 2 == 0:
            return True
    return False
