"""Shared fixtures and strategies for the test suite."""

from __future__ import annotations

import pytest
from hypothesis import strategies as st

from countkernel import MultiGraph
from countkernel.generators import random_multigraph


def seeded_corpus(count: int) -> list[MultiGraph]:
    """Deterministic multigraph corpus: n <= 14, m <= 18, multiplicities
    up to 3 (every seventh graph gets one multiplicity-3 edge to exercise
    the capping rule)."""
    graphs = []
    for i in range(count):
        n = 3 + (i * 7) % 12
        m = min((i * 5) % 19, n * (n - 1) // 2)
        g = random_multigraph(n, m, seed=1_000_003 + i, promote2=0.25 if i % 2 else 0.0)
        if i % 7 == 0 and g.edges():
            u, v, _ = g.edges()[0]
            bumped = [(a, b, 3 if (a, b) == (u, v) else mm) for a, b, mm in g.edges()]
            g = MultiGraph(g.vertices, bumped)
        graphs.append(g)
    return graphs


@pytest.fixture(scope="session")
def small_corpus() -> list[MultiGraph]:
    return seeded_corpus(60)


@st.composite
def multigraphs(draw, max_vertices: int = 9, max_mult: int = 3):
    n = draw(st.integers(min_value=0, max_value=max_vertices))
    vertices = list(range(1, n + 1))
    pairs = [(u, v) for u in vertices for v in vertices if u < v]
    edges = []
    if pairs:
        chosen = draw(
            st.lists(st.sampled_from(pairs), unique=True, max_size=min(len(pairs), 14))
        )
        for u, v in chosen:
            mult = draw(st.integers(min_value=1, max_value=max_mult))
            edges.append((u, v, mult))
    return MultiGraph(vertices, edges)
