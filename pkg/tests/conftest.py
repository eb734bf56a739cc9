import random

import pytest
from hypothesis import strategies as st

from whplanar.graph import MultiGraph


def random_graph(rng: random.Random, max_vertices: int = 8) -> MultiGraph:
    n = rng.randint(0, max_vertices)
    pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
    p = rng.random()
    return MultiGraph(n, [e for e in pairs if rng.random() < p])


@st.composite
def multigraphs(draw, max_vertices=8, max_edges=24, loops=True):
    n = draw(st.integers(1, max_vertices))
    vertex = st.integers(0, n - 1)
    edge = st.tuples(vertex, vertex)
    if not loops:
        edge = edge.filter(lambda e: e[0] != e[1])
    edges = draw(st.lists(edge, max_size=max_edges))
    return MultiGraph(n, edges)


@st.composite
def gamma_raw(draw, n_max=12, loose=False):
    n = draw(st.integers(2, n_max))
    lo = 0 if loose else 1
    step = st.integers(lo, n - 1)
    A = draw(st.lists(step, max_size=3))
    B = draw(st.lists(step, max_size=3))
    Q = draw(st.lists(st.integers(0, n - 1), min_size=1, max_size=4))
    return n, A, B, Q


@pytest.fixture
def rng():
    return random.Random(20240601)
