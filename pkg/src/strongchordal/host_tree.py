"""Rooted trees with positive integer arc weights, and subtrees of them."""
from __future__ import annotations

from collections.abc import Iterable
from dataclasses import dataclass


class TreeError(ValueError):
    pass


class HostTree:
    """Rooted tree; node ``x`` hangs under ``parent[x]`` via an arc of ``weight[x]``.

    Nodes must be supplied parents-first. Depths are weighted and computed
    once at construction.
    """

    __slots__ = ("nodes", "root", "parent", "weight", "depth", "children")

    def __init__(self, arcs: Iterable[tuple[str, str | None, int]]):
        nodes: list[str] = []
        parent: dict[str, str | None] = {}
        weight: dict[str, int] = {}
        depth: dict[str, int] = {}
        children: dict[str, list[str]] = {}
        root = None
        for node, par, w in arcs:
            if node in parent:
                raise TreeError(f"duplicate node {node!r}")
            if par is None:
                if root is not None:
                    raise TreeError(f"second root {node!r}")
                root = node
                depth[node] = 0
            else:
                if par not in parent:
                    raise TreeError(f"parent {par!r} of {node!r} not declared before it")
                if not isinstance(w, int) or w < 1:
                    raise TreeError(f"arc weight of {node!r} must be a positive integer, got {w!r}")
                weight[node] = w
                depth[node] = depth[par] + w
                children[par].append(node)
            nodes.append(node)
            parent[node] = par
            children[node] = []
        if root is None:
            raise TreeError("tree has no root")
        self.nodes: tuple[str, ...] = tuple(nodes)
        self.root: str = root
        self.parent = parent
        self.weight = weight
        self.depth = depth
        self.children = {x: tuple(c) for x, c in children.items()}

    def __len__(self) -> int:
        return len(self.nodes)

    def __contains__(self, x: object) -> bool:
        return x in self.parent

    def arcs(self) -> list[tuple[str, str | None, int]]:
        """``(node, parent, weight)`` triples in construction order; the root has weight 0."""
        return [(x, self.parent[x], self.weight.get(x, 0)) for x in self.nodes]

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, HostTree):
            return NotImplemented
        return self.parent == other.parent and self.weight == other.weight

    def __repr__(self) -> str:
        return f"HostTree(root={self.root!r}, nodes={len(self.nodes)})"


def node_depth(t: HostTree, x: str) -> int:
    try:
        return t.depth[x]
    except KeyError:
        raise KeyError(f"unknown node {x!r}") from None


@dataclass(frozen=True)
class Subtree:
    members: frozenset[str]
    root: str

    def __contains__(self, x: object) -> bool:
        return x in self.members

    def __len__(self) -> int:
        return len(self.members)


def is_valid_subtree(t: HostTree, s: Iterable[str]) -> tuple[bool, str | None]:
    """Whether ``s`` is a nonempty connected node set; also returns its root.

    A node set of a rooted tree is connected exactly when one member has
    its parent outside the set. That member is the root.
    """
    members = set(s)
    unknown = [x for x in members if x not in t.parent]
    if unknown:
        raise KeyError(f"unknown nodes {sorted(unknown)}")
    tops = [x for x in members if t.parent[x] not in members]
    if len(tops) != 1:
        return False, None
    return True, tops[0]


def make_subtree(t: HostTree, s: Iterable[str]) -> Subtree:
    members = frozenset(s)
    ok, root = is_valid_subtree(t, members)
    if not ok:
        raise TreeError(f"subtree not connected: {sorted(members)}")
    return Subtree(members, root)


def _check_subtree(t: HostTree, s: Subtree) -> None:
    ok, root = is_valid_subtree(t, s.members)
    if not ok or root != s.root:
        raise TreeError(f"invalid subtree rooted at {s.root!r}")


@dataclass(frozen=True)
class OvershadowVerdict:
    """Outcome of testing whether one subtree overshadows another.

    ``cutoff`` is the maximum depth over the intersection (absent for
    disjoint trees); ``witness`` is a node of the second tree, outside the
    first, whose depth does not exceed the cutoff.
    """

    holds: bool
    disjoint: bool
    cutoff: int | None = None
    witness: str | None = None

    def __bool__(self) -> bool:
        return self.holds


def overshadows(t: HostTree, t1: Subtree, t2: Subtree) -> OvershadowVerdict:
    """Test ``t1 ⊵ t2``: every node of ``t2 - t1`` lies strictly deeper than
    every node of ``t1 & t2``.

    The failure witness is the shallowest offending node, ties by node id.
    """
    _check_subtree(t, t1)
    _check_subtree(t, t2)
    return overshadow_verdict(t.depth, t1.members, t2.members)


def overshadow_verdict(depth: dict[str, int], m1: frozenset[str], m2: frozenset[str]) -> OvershadowVerdict:
    """:func:`overshadows` on raw member sets, without validating them."""
    common = m1 & m2
    if not common:
        return OvershadowVerdict(True, True)
    cutoff = max(depth[x] for x in common)
    witness = None
    for x in m2 - m1:
        if depth[x] <= cutoff and (witness is None or (depth[x], x) < (depth[witness], witness)):
            witness = x
    return OvershadowVerdict(witness is None, False, cutoff, witness)


def compatible_pair(t: HostTree, t1: Subtree, t2: Subtree) -> tuple[bool, bool]:
    """``(t1 ⊵ t2, t2 ⊵ t1)``; the pair is compatible when either holds."""
    return overshadows(t, t1, t2).holds, overshadows(t, t2, t1).holds
