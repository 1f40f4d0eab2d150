import itertools

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import small_graphs
from strongchordal import (
    Graph,
    GraphError,
    InvalidOrderError,
    VertexOrder,
    brute_force_seo,
    greedy_simplicial_elimination,
    intersection_graph,
    is_compatible_representation,
    is_perfect_elimination_order,
    is_strong_elimination_order,
    overshadows,
    peo_to_representation,
    seo_to_representation,
)


def brute_seo_violations(g, o):
    closed = {v: g.neighbors(v) | {v} for v in g.vertices}
    n = len(o)
    out = []
    for i, j, k, ell in itertools.product(range(1, n + 1), repeat=4):
        if i < j and k < ell:
            vi, vj, vk, vl = (o.at(p) for p in (i, j, k, ell))
            if vk in closed[vi] and vl in closed[vi] and vk in closed[vj] and vl not in closed[vj]:
                out.append((i, j, k, ell))
    return out


def brute_peo(g, o):
    for i, v in enumerate(o, 1):
        later = sorted(o.index[u] for u in g.neighbors(v) if o.index[u] > i)
        for p, q in itertools.combinations(later, 2):
            if not g.has_edge(o.at(p), o.at(q)):
                return False
    return True


def test_fig1_orders(fig1, fig1_order):
    assert is_strong_elimination_order(fig1, fig1_order) == (True, None)
    assert is_perfect_elimination_order(fig1, fig1_order) == (True, None)


def test_fig1_reversed_fails(fig1, fig1_order):
    rev = VertexOrder(reversed(fig1_order.sequence))
    ok, quad = is_strong_elimination_order(fig1, rev)
    assert not ok and quad == brute_seo_violations(fig1, rev)[0]
    ok, cert = is_perfect_elimination_order(fig1, rev)
    assert not ok
    i, (p, q) = cert
    assert not fig1.has_edge(rev.at(p), rev.at(q)) and i < p < q


def test_order_must_match_graph(fig1):
    with pytest.raises(GraphError):
        is_strong_elimination_order(fig1, VertexOrder("abc"))
    with pytest.raises(GraphError):
        is_perfect_elimination_order(fig1, VertexOrder("abcwxyq"))


def test_path_on_three():
    g = Graph("abc", [("a", "b"), ("b", "c")])
    assert is_strong_elimination_order(g, VertexOrder("abc"))[0]
    assert not is_perfect_elimination_order(g, VertexOrder("bac"))[0]
    r = seo_to_representation(g, VertexOrder("abc"))
    assert r.host.parent == {"c": None, "b": "c", "a": "b"}
    assert intersection_graph(r) == g


def test_triangle():
    g = Graph("abc", [("a", "b"), ("b", "c"), ("a", "c")])
    for perm in itertools.permutations("abc"):
        assert is_strong_elimination_order(g, VertexOrder(perm))[0]


def test_disjoint_edges_hang_under_last():
    g = Graph("abcd", [("a", "b"), ("c", "d")])
    o = VertexOrder("acbd")
    r = peo_to_representation(g, o)
    assert r.host.root == "d"
    assert r.host.parent == {"d": None, "b": "d", "c": "d", "a": "b"}
    assert set(r.host.weight.values()) == {1}
    assert intersection_graph(r) == g
    w = seo_to_representation(g, o)
    assert w.host.weight == {"b": 1, "c": 2, "a": 2}
    assert intersection_graph(w) == g


def test_edgeless_graph():
    g = Graph("pqrs")
    r = peo_to_representation(g, VertexOrder("pqrs"))
    assert r.host.root == "s"
    assert all(r.host.parent[x] == "s" for x in "pqr")
    assert all(r[v].members == {v} for v in "pqrs")
    assert intersection_graph(r) == g


def test_constructions_reject_bad_orders(fig1):
    o = VertexOrder("zyxwcba")
    with pytest.raises(InvalidOrderError) as info:
        seo_to_representation(fig1, o)
    assert info.value.certificate == is_strong_elimination_order(fig1, o)[1]
    with pytest.raises(InvalidOrderError):
        peo_to_representation(fig1, o)
    with pytest.raises(ValueError):
        seo_to_representation(Graph(()), VertexOrder(()))


def test_fig1_construction(fig1, fig1_order):
    r = seo_to_representation(fig1, fig1_order)
    assert r.host.weight == {"y": 1, "x": 1, "w": 1, "c": 2, "b": 2, "a": 3}
    assert r.host.parent == {"z": None, "y": "z", "x": "y", "w": "x", "c": "x", "b": "w", "a": "w"}
    assert r["x"].members == frozenset("xwcba")
    assert intersection_graph(r) == fig1
    assert is_compatible_representation(r)[0]
    for k, ell in itertools.combinations(range(1, 8), 2):
        assert overshadows(r.host, r[fig1_order.at(ell)], r[fig1_order.at(k)]).holds


@given(small_graphs())
def test_seo_checker_matches_definition(g):
    for o in itertools.islice(itertools.permutations(g.vertices), 6):
        o = VertexOrder(o)
        brute = brute_seo_violations(g, o)
        assert is_strong_elimination_order(g, o) == (not brute, brute[0] if brute else None)
        assert is_perfect_elimination_order(g, o)[0] == brute_peo(g, o)


@given(small_graphs())
def test_seo_is_peo(g):
    res = brute_force_seo(g)
    if res.found:
        assert is_perfect_elimination_order(g, res.order)[0]


@st.composite
def graph_with_seo(draw):
    g = draw(small_graphs())
    res = brute_force_seo(g)
    if not res.found:
        return g, None
    perm = draw(st.permutations(g.vertices))
    o = VertexOrder(perm)
    return g, (o if is_strong_elimination_order(g, o)[0] else res.order)


@settings(max_examples=150)
@given(graph_with_seo())
def test_weighted_construction_properties(case):
    g, o = case
    if o is None or not len(g):
        return
    r = seo_to_representation(g, o)
    n = len(o)
    assert all(r.host.depth[v] == n - j for j, v in enumerate(o, 1))
    assert intersection_graph(r) == g
    assert is_compatible_representation(r)[0]
    for k, ell in itertools.combinations(range(1, n + 1), 2):
        assert overshadows(r.host, r[o.at(ell)], r[o.at(k)]).holds


@given(small_graphs())
def test_unit_construction_properties(g):
    ok, o = greedy_simplicial_elimination(g)
    if not ok or not len(g):
        return
    r = peo_to_representation(g, o)
    assert intersection_graph(r) == g
    # positions strictly increase along every root path
    for x in r.host.nodes:
        p = r.host.parent[x]
        if p is not None:
            assert o.index[p] > o.index[x]
        assert r[x].root == x
