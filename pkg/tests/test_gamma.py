import random
from math import gcd

import pytest
from hypothesis import given, settings

from conftest import gamma_raw
from whplanar.errors import EmptyQ, NotCanonical, ZeroStep
from whplanar.gamma import (
    GammaSpec,
    build_gamma,
    canonicalize_gamma,
    canonicalize_gamma_loose,
    check_conditions,
    edge_orbits,
    gamma_components,
    shift_permutation,
)
from whplanar.graph import MultiGraph, components
from whplanar.isomorphism import are_isomorphic
from whplanar.planarity import is_planar
from whplanar.table import ClassMatch, classify_gamma, classify_with_regularity
from whplanar.verify import EnumerationBounds, enumerate_specs


def oracle(spec):
    g = build_gamma(spec)
    return len(components(g)) == 1 and is_planar(g)


class TestSpec:
    def test_sorted_dedup(self):
        s = GammaSpec(6, (2, 1, 1), (), (5, 0))
        assert s.A == (1, 2) and s.Q == (0, 5)

    def test_range(self):
        with pytest.raises(ValueError):
            GammaSpec(6, (6,), (), (0,))
        with pytest.raises(ValueError):
            GammaSpec(0)

    def test_str(self):
        assert str(GammaSpec(6, (1,), (), (0, 3))) == "Gamma_6({1},{},{0,3})"

    def test_swapped(self):
        assert GammaSpec(6, (1,), (2,), (0, 1)).swapped() == GammaSpec(6, (2,), (1,), (0, 5))


class TestCanonicalize:
    def test_examples(self):
        assert canonicalize_gamma(6, [5], [4], [0]) == GammaSpec(6, (1,), (2,), (0,))
        assert canonicalize_gamma(6, [1, 5], [], [3]) == GammaSpec(6, (1,), (), (3,))
        assert canonicalize_gamma(2, [1], [1], [0, 1]) == GammaSpec(2, (1,), (1,), (0, 1))

    def test_zero_step(self):
        with pytest.raises(ZeroStep):
            canonicalize_gamma(6, [0], [], [0])
        with pytest.raises(ZeroStep):
            canonicalize_gamma(6, [], [6], [0])
        assert canonicalize_gamma_loose(6, [0], [], [0]).A == (0,)

    @given(gamma_raw(loose=True))
    def test_edge_set_unchanged(self, raw):
        n, A, B, Q = raw
        spec = canonicalize_gamma_loose(n, A, B, Q)
        assert spec.is_canonical
        raw_spec = GammaSpec(n, tuple(a % n for a in A), tuple(b % n for b in B), tuple(Q))
        assert build_gamma(spec) == build_gamma(raw_spec)


class TestBuild:
    def test_gamma_2_is_four_cycle(self):
        g = build_gamma(GammaSpec(2, (), (), (0, 1)))
        # v0 - v0' - v1 - v1' - v0
        assert g.edges == ((0, 2), (0, 3), (1, 2), (1, 3))
        assert g.labels == ("v0", "v1", "v0'", "v1'")

    def test_edge_counts(self):
        assert build_gamma(canonicalize_gamma(6, [1], [2], [0])).edge_count == 18
        assert build_gamma(canonicalize_gamma(6, [3], [3], [0])).edge_count == 12

    @given(gamma_raw())
    def test_edge_count_formula(self, raw):
        spec = canonicalize_gamma(*raw)
        n = spec.n
        steps = sum(n // 2 if 2 * a == n else n for a in spec.A + spec.B)
        assert build_gamma(spec).edge_count == steps + n * len(spec.Q)


class TestComponents:
    def test_examples(self):
        dec = gamma_components(canonicalize_gamma(6, [2], [4], [1, 3]))
        assert dec.d == 2
        assert dec.quotient == GammaSpec(3, (1,), (1,), (1, 2))
        assert gamma_components(canonicalize_gamma(5, [1], [1], [0])).d == 1
        dec = gamma_components(canonicalize_gamma(4, [], [], [0, 2]))
        assert dec.d == 2 and dec.quotient == GammaSpec(2, (), (), (0, 1))
        comps = components(build_gamma(canonicalize_gamma(4, [], [], [0, 2])))
        assert len(comps) == 2
        for comp in comps:
            sub = build_gamma(canonicalize_gamma(4, [], [], [0, 2])).induced_subgraph(comp)
            assert are_isomorphic(sub, MultiGraph.cycle(4)) is not None

    def test_empty_q(self):
        with pytest.raises(EmptyQ):
            gamma_components(GammaSpec(4, (1,), (1,), ()))

    @settings(max_examples=150, deadline=None)
    @given(gamma_raw())
    def test_matches_bfs_with_certificates(self, raw):
        spec = canonicalize_gamma(*raw)
        dec = gamma_components(spec)
        g = build_gamma(spec)
        comps = components(g)
        assert len(comps) == dec.d
        h = build_gamma(dec.quotient)
        for comp in comps:
            sub = g.induced_subgraph(comp)
            cert = are_isomorphic(sub, h)
            assert cert is not None and cert.validate(sub, h)


class TestClassify:
    def test_examples(self):
        assert ClassMatch("I.1", 0, 1) in classify_gamma(canonicalize_gamma(6, [1], [1], [0, 1]))
        assert ClassMatch("II.11", 0, 1) in classify_gamma(canonicalize_gamma(6, [1], [2], [0]))
        assert classify_gamma(canonicalize_gamma(6, [2], [2], [0, 1])) == []
        assert ClassMatch("III.13", 0, 2) in classify_gamma(canonicalize_gamma(6, [3], [3], [0, 2]))

    def test_errors(self):
        with pytest.raises(EmptyQ):
            classify_gamma(GammaSpec(6, (1,), (1,), ()))
        with pytest.raises(NotCanonical):
            classify_gamma(GammaSpec(6, (5,), (1,), (0,)))
        with pytest.raises(NotCanonical):
            classify_gamma(GammaSpec(6, (0,), (1,), (0,)))

    def test_matches_regenerate(self):
        for spec in enumerate_specs(EnumerationBounds(2, 8, 2, 2, 3)):
            for m in classify_gamma(spec):
                assert m.regenerate(spec.n) == spec

    def test_swap_symmetry(self):
        for spec in enumerate_specs(EnumerationBounds(2, 8, 2, 2, 3)):
            a = {m.class_id for m in classify_gamma(spec)}
            b = {m.class_id for m in classify_gamma(spec.swapped())}
            assert a == b, spec

    def test_oracle_sample_beyond_default_bounds(self):
        # n = 11, 12 are too large to enumerate in a unit test; sample instead
        rng = random.Random(5)
        for _ in range(1500):
            n = rng.choice([11, 12])
            half = list(range(1, n // 2 + 1))
            A = rng.sample(half, rng.randint(0, 3))
            B = rng.sample(half, rng.randint(0, 3))
            Q = rng.sample(range(n), rng.randint(1, 4))
            spec = canonicalize_gamma(n, A, B, Q)
            assert bool(classify_gamma(spec)) == oracle(spec), spec

    def test_with_regularity(self):
        assert classify_with_regularity(canonicalize_gamma(6, [1], [], [0, 1])) == []
        assert classify_gamma(canonicalize_gamma(6, [1], [], [0, 1]))
        assert ClassMatch("I.5", 0, 1) in classify_with_regularity(canonicalize_gamma(6, [], [], [0, 1]))
        assert any(m.class_id == "I.3" for m in classify_with_regularity(canonicalize_gamma(6, [1], [1], [0])))


class TestConditions:
    def test_unit_step_failure(self):
        r = check_conditions(canonicalize_gamma(6, [3], [3], [0, 2]))
        assert all(
            [r.c1_planar, r.c2prime_regularizable, r.c3a_loopless, r.c3b_simple,
             r.c4_vertexcount, r.c5_automorphism, r.c6_intra_orbit_edge, r.c7_inter_orbit_edge]
        )
        assert not r.c8_unit_steps and not r.all_hold()
        assert r.edge_orbit_lengths == (3, 3, 6, 6)

    def test_all_hold(self):
        assert check_conditions(canonicalize_gamma(6, [1], [1], [0])).all_hold()

    def test_not_regularizable(self):
        assert not check_conditions(canonicalize_gamma(6, [1], [], [0])).c2prime_regularizable

    def test_loops(self):
        r = check_conditions(canonicalize_gamma_loose(4, [0], [1], [0]))
        assert not r.c3a_loopless and r.c5_automorphism

    @given(gamma_raw(loose=True))
    def test_invariant_formulas(self, raw):
        spec = canonicalize_gamma_loose(*raw)
        n = spec.n
        r = check_conditions(spec)
        assert r.c6_intra_orbit_edge == bool(spec.A or spec.B)
        assert r.c7_inter_orbit_edge == bool(spec.Q)
        assert r.c2prime_regularizable == (bool(spec.A) == bool(spec.B))
        units = any(gcd(a, n) == 1 for a in spec.A) and any(gcd(b, n) == 1 for b in spec.B)
        assert r.c8_unit_steps == (not spec.Q or units)
        assert r.c3a_loopless == (0 not in spec.A + spec.B)
        assert r.c3b_simple and r.c4_vertexcount and r.c5_automorphism
        assert r.c1_planar == is_planar(build_gamma(spec))

    @given(gamma_raw())
    def test_orbit_lengths(self, raw):
        spec = canonicalize_gamma(*raw)
        n = spec.n
        want = sorted([n // 2 if 2 * a == n else n for a in spec.A + spec.B] + [n] * len(spec.Q))
        assert list(check_conditions(spec).edge_orbit_lengths) == want

    def test_orbit_of_non_automorphism(self):
        g = MultiGraph(4, [(0, 1), (2, 3)])
        assert edge_orbits(g, [1, 0, 2, 3]) == [1, 1]
        assert shift_permutation(3) == [1, 2, 0, 4, 5, 3]


def test_i3_ii6_isomorphism():
    for n in (4, 6, 8, 10, 12):
        for s in range(1, n):
            if gcd(n, s) != 1:
                continue
            for q in range(n):
                g = build_gamma(canonicalize_gamma(n, [s], [s], [q]))
                h = build_gamma(canonicalize_gamma(n, [], [], [q, q + s, q - s]))
                cert = are_isomorphic(g, h)
                assert cert is not None and cert.validate(g, h), (n, s, q)
