import pytest
from hypothesis import given

from conftest import representations
from strongchordal import (
    HostTree,
    RepresentationFormatError,
    TreeError,
    TreeRepresentation,
    bottom_up_order,
    intersection_graph,
    is_compatible_representation,
    is_rdv,
    overshadows,
    parse_representation,
    seo_to_representation,
    serialize_representation,
    subdivide_unit_weights,
)
from strongchordal.fixtures import fig3_graph
from strongchordal.representation import incompatible_pairs


def test_fig3_graph(fig3):
    g = intersection_graph(fig3)
    assert g == fig3_graph()
    assert g.edges() == [("i", "k"), ("i", "l"), ("j", "k"), ("k", "l")]


def test_fig3_properties(fig3):
    assert is_compatible_representation(fig3) == (True, None)
    assert not is_rdv(fig3)  # T(k) branches at r
    assert bottom_up_order(fig3) == tuple("ijkl")
    assert fig3.root_depth("i") == 2 and fig3.root_depth("k") == 0


def test_rdv_detects_branching():
    t = HostTree([("r", None, 0), ("a", "r", 1), ("b", "r", 1)])
    assert not is_rdv(TreeRepresentation.from_sets(t, {"v": {"r", "a", "b"}}))
    assert is_rdv(TreeRepresentation.from_sets(t, {"v": {"r", "a"}, "u": {"b"}}))


def test_incompatible_pair_reported():
    t = HostTree([("r", None, 0), ("a", "r", 1), ("b", "r", 1), ("c", "r", 1)])
    r = TreeRepresentation.from_sets(t, {"u": {"r", "a"}, "v": {"r", "b"}})
    assert is_compatible_representation(r) == (True, None)
    # common part reaches depth 1 and each side has its own depth-1 node
    r = TreeRepresentation.from_sets(t, {"u": {"r", "a", "b"}, "v": {"r", "a", "c"}, "w": {"c"}})
    assert is_compatible_representation(r) == (False, ("u", "v"))
    assert incompatible_pairs(r) == [("u", "v")]


def test_construction_rejects_bad_subtrees():
    t = HostTree([("r", None, 0), ("a", "r", 1), ("b", "r", 1)])
    with pytest.raises(TreeError):
        TreeRepresentation.from_sets(t, {"v": {"a", "b"}})
    with pytest.raises((TreeError, KeyError)):
        TreeRepresentation.from_sets(t, {"v": {"q"}})


def test_round_trip_fig3(fig3):
    text = serialize_representation(fig3)
    assert parse_representation(text) == fig3
    assert serialize_representation(parse_representation(text)) == text


@given(representations())
def test_round_trip_random(r):
    assert parse_representation(serialize_representation(r)) == r


@given(representations())
def test_intersection_graph_matches_brute_force(r):
    g = intersection_graph(r)
    labels = sorted(r.assignment)
    expected = {
        (u, v)
        for i, u in enumerate(labels)
        for v in labels[i + 1:]
        if r[u].members & r[v].members
    }
    assert set(g.edges()) == expected


@given(representations())
def test_bottom_up_order_is_by_root_depth(r):
    depths = [r.root_depth(v) for v in bottom_up_order(r)]
    assert depths == sorted(depths, reverse=True)


def test_empty_representation():
    r = parse_representation("t 1 0\nnode r - 0\n")
    assert len(r) == 0
    assert len(intersection_graph(r)) == 0
    assert is_compatible_representation(r) == (True, None)
    assert bottom_up_order(r) == ()


BASE = "t 2 1\nnode r - 0\nnode a r 1\n"


@pytest.mark.parametrize(
    "text, fragment",
    [
        ("t 2 1\nnode r - 0\nnode a r 0\nsub v a\n", "nonpositive weight"),
        ("t 2 1\nnode r - 0\nnode a q 1\nsub v a\n", "orphan node"),
        ("t 3 1\nnode r - 0\nnode b a 1\nnode a r 1\nsub v a\n", "declared after child"),
        ("t 3 1\nnode r - 0\nnode a r 1\nnode b r 1\nsub v a b\n", "not connected"),
        (BASE + "sub v a r\n", "listed 'a' first"),
        (BASE + "sub v q\n", "unknown node"),
        (BASE + "sub v a a\n", "listed twice"),
        (BASE + "sub v a\nsub v r\n", "duplicate vertex"),
        ("t 3 1\nnode r - 0\nnode a r 1\nsub v a\n", "declares 3 nodes"),
        (BASE + "sub v a\nsub u r\n", "declares 1"),
        ("t 2 1\nnode r - 0\nnode r r 1\n", "duplicate node"),
        ("t 2 1\nnode r - 0\nnode a - 0\n", "second root"),
        ("t 2 1\nnode r - 3\nnode a r 1\n", "root weight"),
        ("t x 1\n", "malformed header"),
        ("node r - 0\n", "missing header"),
        (BASE + "bogus\n", "unknown line type"),
        ("t 2 1\nnode r - 0\nnode a r one\n", "malformed weight"),
    ],
)
def test_parse_errors(text, fragment):
    with pytest.raises(RepresentationFormatError, match=fragment):
        parse_representation(text)


def test_subdivision_fig1(fig1, fig1_order):
    r = seo_to_representation(fig1, fig1_order)
    none = subdivide_unit_weights(r, "extend-none")
    assert none.graph_preserved and not none.compatible
    assert ("x", "y") in none.incompatible_pairs
    every = subdivide_unit_weights(r, "extend-all")
    assert every.graph_preserved and not every.compatible
    assert ("w", "z") in every.incompatible_pairs
    host = none.representation.host
    assert set(host.weight.values()) == {1}
    # weights 2, 2, 3 on c, b, a add 1 + 1 + 2 nodes
    assert len(host) == 7 + 4
    assert all(host.depth[x] == r.host.depth[x] for x in r.host.nodes)


def test_subdivision_unit_weights_is_identity(fig3):
    t = HostTree([("r", None, 0), ("a", "r", 1)])
    r = TreeRepresentation.from_sets(t, {"u": {"r", "a"}, "v": {"a"}})
    rep = subdivide_unit_weights(r)
    assert rep.representation == r and rep.compatible and rep.graph_preserved


def test_subdivision_rejects_unknown_policy(fig3):
    with pytest.raises(ValueError):
        subdivide_unit_weights(fig3, "extend-some")


def test_mutated_fig1_is_incompatible(fig1, fig1_order):
    r = seo_to_representation(fig1, fig1_order)
    sets = {v: set(r[v].members) for v in r.vertices}
    sets["y"].add("a")
    m = TreeRepresentation.from_sets(r.host, sets)
    assert is_compatible_representation(m) == (False, ("w", "y"))
    assert incompatible_pairs(m) == [("w", "y"), ("x", "y")]
    for u, v in incompatible_pairs(m):
        assert not overshadows(m.host, m[u], m[v]).holds
        assert not overshadows(m.host, m[v], m[u]).holds
