from __future__ import annotations

import itertools

import pytest
from hypothesis import strategies as st

from strongchordal import Graph, HostTree, Subtree, TreeRepresentation
from strongchordal import fixtures


@pytest.fixture
def fig1():
    return fixtures.fig1_graph()


@pytest.fixture
def fig1_order():
    return fixtures.fig1_order()


@pytest.fixture
def fig3():
    return fixtures.fig3_representation()


@st.composite
def small_graphs(draw, max_n: int = 7) -> Graph:
    n = draw(st.integers(0, max_n))
    labels = [chr(ord("a") + i) for i in range(n)]
    pairs = list(itertools.combinations(labels, 2))
    keep = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    return Graph(labels, [p for p, k in zip(pairs, keep) if k])


@st.composite
def host_trees(draw, max_nodes: int = 12, max_weight: int = 4) -> HostTree:
    n = draw(st.integers(1, max_nodes))
    arcs = [("n0", None, 0)]
    for i in range(1, n):
        p = draw(st.integers(0, i - 1))
        arcs.append((f"n{i}", f"n{p}", draw(st.integers(1, max_weight))))
    return HostTree(arcs)


@st.composite
def subtrees(draw, t: HostTree) -> Subtree:
    """Connected node set grown from a random start node."""
    start = draw(st.sampled_from(t.nodes))
    members = {start}
    size = draw(st.integers(1, len(t)))
    while len(members) < size:
        frontier = sorted(
            {y for x in members for y in (t.parent[x], *t.children[x]) if y is not None} - members
        )
        if not frontier:
            break
        members.add(draw(st.sampled_from(frontier)))
    root = min(members, key=lambda x: (t.depth[x], x))
    return Subtree(frozenset(members), root)


@st.composite
def representations(draw, max_nodes: int = 12, max_vertices: int = 7) -> TreeRepresentation:
    t = draw(host_trees(max_nodes))
    k = draw(st.integers(1, max_vertices))
    return TreeRepresentation(t, {f"v{i}": draw(subtrees(t)) for i in range(1, k + 1)})
