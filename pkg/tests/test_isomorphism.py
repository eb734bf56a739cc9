import random

import pytest
from hypothesis import given
from hypothesis import strategies as st

from conftest import multigraphs, random_graph
from whplanar.errors import SizeLimitExceeded
from whplanar.gamma import build_gamma, canonicalize_gamma
from whplanar.graph import MultiGraph, simple_underlying
from whplanar.isomorphism import IsoCertificate, are_isomorphic


def test_identity():
    g = MultiGraph.complete_bipartite(2, 3)
    cert = are_isomorphic(g, g)
    assert cert is not None and cert.validate(g, g)


def test_c4_vs_k4():
    assert are_isomorphic(MultiGraph.cycle(4), MultiGraph.complete(4)) is None


def test_same_degrees_not_isomorphic():
    two_triangles = MultiGraph(6, [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5)])
    assert are_isomorphic(MultiGraph.cycle(6), two_triangles) is None
    outer = [(i, (i + 1) % 5) for i in range(5)]
    petersen = MultiGraph(10, outer + [(i, i + 5) for i in range(5)] + [(5 + i, 5 + (i + 2) % 5) for i in range(5)])
    prism = MultiGraph(10, outer + [(i, i + 5) for i in range(5)] + [(5 + i, 5 + (i + 1) % 5) for i in range(5)])
    assert are_isomorphic(petersen, prism) is None


def test_i3_and_ii6_graphs():
    g = build_gamma(canonicalize_gamma(6, [1], [1], [0]))
    h = build_gamma(canonicalize_gamma(6, [], [], [0, 1, 5]))
    cert = are_isomorphic(g, h)
    assert cert is not None and cert.validate(g, h)


def test_size_limit():
    big = MultiGraph.cycle(65)
    with pytest.raises(SizeLimitExceeded):
        are_isomorphic(big, big)


def test_multiedges_ignored():
    g = MultiGraph(3, [(0, 1), (0, 1), (1, 2), (2, 2)])
    h = MultiGraph(3, [(0, 2), (1, 2)])
    assert are_isomorphic(g, h) is not None


def test_certificate_rejects_wrong_mapping():
    g = MultiGraph(3, [(0, 1)])
    assert not IsoCertificate((0, 2, 1)).validate(g, g)
    assert not IsoCertificate((0, 0, 1)).validate(g, g)


@given(multigraphs(max_vertices=10, max_edges=25), st.randoms(use_true_random=False))
def test_relabelled_copy(g, r):
    perm = list(range(g.vertex_count))
    r.shuffle(perm)
    h = g.relabel(perm)
    cert = are_isomorphic(g, h)
    assert cert is not None
    assert cert.validate(g, h)


@given(multigraphs(max_vertices=7, max_edges=15), multigraphs(max_vertices=7, max_edges=15))
def test_symmetric(g, h):
    assert (are_isomorphic(g, h) is None) == (are_isomorphic(h, g) is None)


def test_agrees_with_networkx():
    nx = pytest.importorskip("networkx")
    rng = random.Random(11)
    agree = 0
    for _ in range(600):
        g, h = random_graph(rng, 7), random_graph(rng, 7)
        if g.vertex_count != h.vertex_count:
            continue
        ng, nh = nx.Graph(), nx.Graph()
        ng.add_nodes_from(range(g.vertex_count))
        nh.add_nodes_from(range(h.vertex_count))
        ng.add_edges_from(simple_underlying(g).edges)
        nh.add_edges_from(simple_underlying(h).edges)
        assert (are_isomorphic(g, h) is not None) == nx.is_isomorphic(ng, nh)
        agree += 1
    assert agree > 50


def test_vertex_transitive_graphs():
    # circulants with many automorphisms exercise the backtracking
    g = build_gamma(canonicalize_gamma(16, [1], [3], [0, 5]))
    r = random.Random(3)
    perm = list(range(32))
    r.shuffle(perm)
    h = g.relabel(perm)
    cert = are_isomorphic(g, h)
    assert cert is not None and cert.validate(g, h)
