"""Exhaustive checks of the classification against the planarity oracle."""

from __future__ import annotations

import time
from dataclasses import dataclass, field
from itertools import combinations
from math import gcd
from typing import Callable, Iterator, Optional

from .gamma import GammaSpec, build_gamma, canonicalize_gamma, check_conditions, unit_step_condition
from .graph import components
from .isomorphism import are_isomorphic
from .planarity import is_planar
from .table import classify_gamma
from .whitehead import parse_word, reduced_whitehead_spec


@dataclass(frozen=True)
class EnumerationBounds:
    n_min: int = 2
    n_max: int = 10
    max_A: int = 3
    max_B: int = 3
    max_Q: int = 4

    def __post_init__(self):
        if self.n_min < 2:
            raise ValueError("n_min must be at least 2")
        if min(self.max_A, self.max_B, self.max_Q) < 0 or self.n_max < self.n_min:
            raise ValueError("bounds must be non-negative and n_max >= n_min")


@dataclass
class Disagreement:
    spec: GammaSpec
    oracle: bool
    classifier: bool
    note: str = ""


@dataclass
class VerificationReport:
    name: str
    specs_checked: int = 0
    disagreements: list[Disagreement] = field(default_factory=list)
    elapsed: float = 0.0
    details: dict = field(default_factory=dict)

    @property
    def verified(self) -> bool:
        return not self.disagreements

    def to_json(self) -> dict:
        from .serialize import gamma_spec_to_json

        return {
            "name": self.name,
            "verified": self.verified,
            "specs_checked": self.specs_checked,
            "disagreements": [
                {
                    "spec": gamma_spec_to_json(d.spec),
                    "oracle": d.oracle,
                    "classifier": d.classifier,
                    "note": d.note,
                }
                for d in self.disagreements
            ],
            "elapsed": round(self.elapsed, 3),
            "details": self.details,
        }


def _subsets(items: list[int], max_size: int, min_size: int = 0) -> list[tuple[int, ...]]:
    out = []
    for k in range(min_size, min(max_size, len(items)) + 1):
        out.extend(combinations(items, k))
    return sorted(out)


def enumerate_specs(bounds: EnumerationBounds) -> Iterator[GammaSpec]:
    """Every canonical loopless spec within bounds with Q non-empty, in lexicographic order."""
    for n in range(bounds.n_min, bounds.n_max + 1):
        half = list(range(1, n // 2 + 1))
        a_sets = _subsets(half, bounds.max_A)
        b_sets = _subsets(half, bounds.max_B)
        q_sets = _subsets(list(range(n)), bounds.max_Q, min_size=1)
        for A in a_sets:
            for B in b_sets:
                for Q in q_sets:
                    yield GammaSpec(n, A, B, Q)


def connected_and_planar(spec: GammaSpec) -> bool:
    """Oracle side: BFS connectivity plus the left-right test on the built graph."""
    g = build_gamma(spec)
    return len(components(g)) == 1 and is_planar(g)


def verify_theorem_A(bounds: EnumerationBounds = EnumerationBounds()) -> VerificationReport:
    """Compare non-emptiness of the classifier with the oracle on every spec in bounds."""
    report = VerificationReport("theorem")
    start = time.perf_counter()
    classes: dict[int, set[str]] = {}
    planar_counts: dict[int, int] = {}
    for spec in enumerate_specs(bounds):
        report.specs_checked += 1
        oracle = connected_and_planar(spec)
        matches = classify_gamma(spec)
        if oracle != bool(matches):
            report.disagreements.append(Disagreement(spec, oracle, bool(matches)))
        if matches:
            classes.setdefault(spec.n, set()).update(m.class_id for m in matches)
        if oracle:
            planar_counts[spec.n] = planar_counts.get(spec.n, 0) + 1
    report.elapsed = time.perf_counter() - start
    report.details = {
        "matched_classes": {str(n): sorted(c) for n, c in sorted(classes.items())},
        "connected_planar": {str(n): c for n, c in sorted(planar_counts.items())},
    }
    return report


def _prop31_families() -> list[tuple[str, Callable[[int], bool], Callable[[int], GammaSpec]]]:
    def spec(A, B, Q):
        return lambda n: canonicalize_gamma(n, A(n), B(n), Q(n))

    def const(xs):
        return lambda n: list(xs)

    none = const(())
    return [
        ("i", lambda n: n % 2 == 1, spec(none, none, lambda n: [0, 1, n - 1])),
        ("ii", lambda n: True, spec(const([1]), const([1]), lambda n: [0, 1, n - 1])),
        ("iii", lambda n: True, spec(const([1]), const([1]), const([0, 2]))),
        ("iv", lambda n: n % 2 == 0, spec(const([2]), const([2]), const([0, 1]))),
        ("v", lambda n: n % 2 == 0, spec(const([1, 2]), const([1]), const([0]))),
        ("vi", lambda n: n % 4 == 2, spec(const([2]), const([2]), lambda n: [0, n // 2])),
        ("vii", lambda n: n % 4 == 2, spec(lambda n: [2, n // 2], lambda n: [2, n // 2], const([0]))),
        ("viii", lambda n: n % 4 == 0, spec(none, none, lambda n: [0, n // 4, n // 2, 3 * n // 4])),
        ("ix", lambda n: n % 6 == 0, spec(none, none, lambda n: [0, n // 3, n // 2, 2 * n // 3])),
        ("x", lambda n: n % 6 == 0, spec(none, none, lambda n: [0, n // 6, n // 2, 5 * n // 6])),
    ]


def prop31_instances(n_max: int) -> list[tuple[str, GammaSpec]]:
    out = []
    for label, valid, make in _prop31_families():
        for n in range(4, n_max + 1):
            if valid(n):
                out.append((label, make(n)))
    return out


def verify_prop31(n_max: int = 16) -> VerificationReport:
    """Every listed family must be non-planar at every valid n in [4, n_max]."""
    if n_max < 4:
        raise ValueError("n_max must be at least 4")
    report = VerificationReport("prop31")
    start = time.perf_counter()
    coverage: dict[str, list[int]] = {}
    by_n: dict[tuple[str, int], GammaSpec] = {}
    for label, spec in prop31_instances(n_max):
        report.specs_checked += 1
        coverage.setdefault(label, []).append(spec.n)
        by_n[(label, spec.n)] = spec
        planar = is_planar(build_gamma(spec))
        if planar:
            report.disagreements.append(Disagreement(spec, True, False, f"family ({label}) planar"))
    # family (x) is isomorphic to family (ix)
    for (label, n), spec in sorted(by_n.items()):
        if label == "x" and are_isomorphic(build_gamma(spec), build_gamma(by_n[("ix", n)])) is None:
            report.disagreements.append(Disagreement(spec, False, True, "(x) not isomorphic to (ix)"))
    report.elapsed = time.perf_counter() - start
    report.details = {"coverage": coverage}
    return report


def fibonacci_word(n: int) -> GammaSpec:
    return reduced_whitehead_spec(parse_word(n, "x0 x1 x2^-1"))


def stretched_word(n: int, l: int) -> GammaSpec:
    return reduced_whitehead_spec(parse_word(n, "x1 " + " ".join(["x2^-1 x0"] * l)))


def condition_sets(n: int, bounds: Optional[EnumerationBounds] = None) -> tuple[set, set]:
    """Specs at n passing connectivity and conditions (1)-(8), and specs typed I.1 or I.3."""
    b = bounds or EnumerationBounds()
    b = EnumerationBounds(n, n, b.max_A, b.max_B, b.max_Q)
    passing, typed = set(), set()
    for spec in enumerate_specs(b):
        if any(m.class_id in ("I.1", "I.3") for m in classify_gamma(spec)):
            typed.add(spec)
        # cheap conditions (2'), (6), (7), (8) first; (1), (5) and connectivity after
        if not (spec.A and spec.B and spec.Q and unit_step_condition(spec)):
            continue
        g = build_gamma(spec)
        if len(components(g)) != 1 or not is_planar(g):
            continue
        if check_conditions(spec).all_hold():
            passing.add(spec)
    return passing, typed


def verify_named_claims(n_list: list[int], bounds: Optional[EnumerationBounds] = None) -> VerificationReport:
    """Conditions (1)-(8) against types I.1 and I.3, plus the word and isomorphism claims."""
    report = VerificationReport("claims")
    start = time.perf_counter()
    details: dict[str, dict] = {}
    for n in n_list:
        if n < 4 or n % 2:
            raise ValueError("claims are stated for even n >= 4")
        row: dict = {}
        # (a) conditions (1)-(8) plus connectivity single out I.1 and I.3
        passing, typed = condition_sets(n, bounds)
        for spec in sorted(passing ^ typed, key=GammaSpec.key):
            report.disagreements.append(
                Disagreement(spec, spec in passing, spec in typed, "(a) conditions vs I.1/I.3")
            )
        report.specs_checked += len(passing | typed)
        row["a_passing"] = len(passing)
        # (b) Fibonacci presentation
        fib = fibonacci_word(n)
        fib_classes = [m.class_id for m in classify_gamma(fib)]
        report.specs_checked += 1
        if "II.11" not in fib_classes:
            report.disagreements.append(Disagreement(fib, True, False, "(b) not II.11"))
        row["b"] = fib_classes
        # (c) x1 (x2^-1 x0)^l; l = 1 collapses to the Fibonacci type
        for l in (1, 2, 3):
            spec = stretched_word(n, l)
            got = [m.class_id for m in classify_gamma(spec)]
            want = "II.11" if l == 1 else "II.14"
            report.specs_checked += 1
            if want not in got:
                report.disagreements.append(Disagreement(spec, True, False, f"(c) l={l} not {want}"))
            row[f"c_l{l}"] = got
        # (d) Gamma_n({s},{s},{q}) isomorphic to Gamma_n({},{},{q,q+s,q-s})
        iso_found = 0
        for s in range(1, n):
            if gcd(n, s) != 1:
                continue
            for q in range(n):
                g = build_gamma(canonicalize_gamma(n, [s], [s], [q]))
                h = build_gamma(canonicalize_gamma(n, [], [], [q, q + s, q - s]))
                report.specs_checked += 1
                if are_isomorphic(g, h) is None:
                    report.disagreements.append(
                        Disagreement(canonicalize_gamma(n, [s], [s], [q]), False, True, "(d) no isomorphism")
                    )
                else:
                    iso_found += 1
        row["d_isomorphisms"] = iso_found
        details[str(n)] = row
    report.elapsed = time.perf_counter() - start
    report.details = details
    return report
