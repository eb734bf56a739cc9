"""Table of the connected planar graphs Gamma_n(A, B, Q) and the classifier.

Each row is data: a class id, the class-wide constraint on (n, s), and three
generators producing the raw A, B and Q lists from (n, q, s). The classifier
instantiates every row at every (q, s) and looks the spec up in the result.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from math import gcd
from typing import Callable, NamedTuple

from .circulant import fold
from .errors import EmptyQ, NotCanonical
from .gamma import GammaSpec

Gen = Callable[[int, int, int], list[int]]


class Row(NamedTuple):
    class_id: str
    A: Gen
    B: Gen
    Q: Gen

    @property
    def family(self) -> str:
        return self.class_id.split(".")[0]


def _class_ok(family: str, n: int, s: int) -> bool:
    if family == "I":
        return gcd(n, s) == 1
    if family == "II":
        return n % 2 == 0 and gcd(n, s) == 1
    return n % 4 == 2 and gcd(n // 2, s) == 1 and s % 2 == 0


def _e(n, q, s):
    return []


def _s(n, q, s):
    return [s]


def _2s(n, q, s):
    return [2 * s]


def _s_2s(n, q, s):
    return [s, 2 * s]


def _h(n, q, s):
    return [n // 2]


def _s_h(n, q, s):
    return [s, n // 2]


def _q(n, q, s):
    return [q]


def _q_qs(n, q, s):
    return [q, q + s]


def _q_q2s(n, q, s):
    return [q, q + 2 * s]


def _q_qs_qms(n, q, s):
    return [q, q + s, q - s]


def _q_qh(n, q, s):
    return [q, q + n // 2]


# {A, B} is unordered in the table; the orientation written here is one choice.
ROWS: tuple[Row, ...] = (
    Row("I.1", _s, _s, _q_qs),
    Row("I.2", _e, _s, _q_qs),
    Row("I.3", _s, _s, _q),
    Row("I.4", _e, _s, _q),
    Row("I.5", _e, _e, _q_qs),
    Row("II.1", _s, _2s, _q_qs_qms),
    Row("II.2", _e, _s_2s, _q_qs_qms),
    Row("II.3", _e, _s, _q_qs_qms),
    Row("II.4", _e, _2s, _q_qs_qms),
    Row("II.5", _e, _s_2s, _q),
    Row("II.6", _e, _e, _q_qs_qms),
    Row("II.7", _s, _2s, _q_qs),
    Row("II.8", _e, _2s, _q_qs),
    Row("II.9", _e, _s, _q_q2s),
    Row("II.10", _e, _s_2s, _q_qs),
    Row("II.11", _s, _2s, _q),
    Row("II.12", _s_2s, _2s, _q_q2s),
    Row("II.13", _s_2s, _e, _q_q2s),
    Row("II.14", _s_2s, _2s, _q),
    Row("II.15", _s, _2s, _q_q2s),
    Row("III.1", _s_h, _h, _q_qh),
    Row("III.2", _s_h, _e, _q_qh),
    Row("III.3", _s, _e, _q_qh),
    Row("III.4", _s_h, _h, _q),
    Row("III.5", _s, _h, _q_qh),
    Row("III.6", _s, _h, _q),
    Row("III.7", _s_h, _s, _q_qs),
    Row("III.8", _s_h, _s, _q),
    Row("III.9", _s_h, _e, _q),
    Row("III.10", _h, _s, _q_qs),
    Row("III.11", _s_h, _h, _q_qs),
    Row("III.12", _s_h, _e, _q_qs),
    Row("III.13", _h, _h, _q_qs),
    Row("III.14", _h, _e, _q_qs),
)

ROW_BY_ID = {row.class_id: row for row in ROWS}
ROW_ORDER = {row.class_id: i for i, row in enumerate(ROWS)}


def _fold_steps(raw: list[int], n: int):
    folded = {fold(x, n) for x in raw}
    if 0 in folded or len(folded) != len(raw):
        return None
    return tuple(sorted(folded))


def _mod_set(raw: list[int], n: int):
    vals = {x % n for x in raw}
    if len(vals) != len(raw):
        return None
    return tuple(sorted(vals))


def generate(row: Row, n: int, q: int, s: int):
    """Canonical (A, B, Q) of a row instance, or None if it is degenerate.

    Degenerate means a generated set loses elements mod n or a step folds
    to 0. The class constraint on (n, s) is not checked here.
    """
    A = _fold_steps(row.A(n, q, s), n)
    B = _fold_steps(row.B(n, q, s), n)
    Q = _mod_set(row.Q(n, q, s), n)
    if A is None or B is None or Q is None:
        return None
    return A, B, Q


@dataclass(frozen=True)
class ClassMatch:
    class_id: str
    q: int
    s: int
    swapped: bool = False

    @property
    def family(self) -> str:
        return self.class_id.split(".")[0]

    def regenerate(self, n: int) -> GammaSpec:
        """Rebuild the spec this match describes; raises ValueError if invalid."""
        row = ROW_BY_ID[self.class_id]
        if not _class_ok(row.family, n, self.s):
            raise ValueError(f"s={self.s} violates the class {row.family} constraint at n={n}")
        sets = generate(row, n, self.q, self.s)
        if sets is None:
            raise ValueError(f"{self.class_id} degenerates at n={n}, q={self.q}, s={self.s}")
        spec = GammaSpec(n, *sets)
        return spec.swapped() if self.swapped else spec

    def to_json(self) -> dict:
        return {"class": self.class_id, "q": self.q, "s": self.s, "swapped": self.swapped}

    @classmethod
    def from_json(cls, data: dict) -> "ClassMatch":
        return cls(str(data["class"]), int(data["q"]), int(data["s"]), bool(data["swapped"]))


@lru_cache(maxsize=None)
def _index(n: int) -> dict[tuple, tuple[ClassMatch, ...]]:
    """Every row instance at this n, keyed by the (A, B, Q) it reproduces."""
    best: dict[tuple, dict[tuple, ClassMatch]] = {}
    for row in ROWS:
        for s in range(1, n):
            if not _class_ok(row.family, n, s):
                continue
            for q in range(n):
                sets = generate(row, n, q, s)
                if sets is None:
                    continue
                gen = GammaSpec(n, *sets)
                for swapped, target in ((False, gen), (True, gen.swapped())):
                    slot = best.setdefault(target.key(), {})
                    dedup = (row.class_id, gen.key())
                    cand = ClassMatch(row.class_id, q, s, swapped)
                    old = slot.get(dedup)
                    if old is None or (q, s, swapped) < (old.q, old.s, old.swapped):
                        slot[dedup] = cand
    index = {}
    for key, slot in best.items():
        matches = sorted(slot.values(), key=lambda m: (ROW_ORDER[m.class_id], m.swapped, m.q, m.s))
        index[key] = tuple(matches)
    return index


def _check_input(spec: GammaSpec) -> None:
    if not spec.Q:
        raise EmptyQ("the table classifies graphs with Q non-empty")
    if not spec.is_canonical or not spec.is_strict:
        raise NotCanonical(f"{spec} must have A, B folded into 1..n/2")


def classify_gamma(spec: GammaSpec) -> list[ClassMatch]:
    """All table rows reproducing the spec; empty iff not connected and planar."""
    _check_input(spec)
    return list(_index(spec.n).get(spec.key(), ()))


def classify_with_regularity(spec: GammaSpec) -> list[ClassMatch]:
    """As classify_gamma, restricted to specs with A, B both empty or both not."""
    matches = classify_gamma(spec)
    if bool(spec.A) != bool(spec.B):
        return []
    return matches


def instances(n: int, smallest_only: bool = True) -> list[tuple[str, ClassMatch, GammaSpec]]:
    """Valid (row, match, spec) instances at n, one per row when ``smallest_only``."""
    out = []
    for row in ROWS:
        for s in range(1, n):
            if not _class_ok(row.family, n, s):
                continue
            found = False
            for q in range(n):
                sets = generate(row, n, q, s)
                if sets is None:
                    continue
                m = ClassMatch(row.class_id, q, s)
                out.append((row.class_id, m, GammaSpec(n, *sets)))
                found = True
                if smallest_only:
                    break
            if found and smallest_only:
                break
    return out
