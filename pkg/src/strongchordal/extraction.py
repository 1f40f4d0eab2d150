"""Reading a strong elimination order off a compatible tree representation.

For every edge (v, w) of the intersection graph the overshadow digraph has
an arc v -> w when T(v) does not overshadow T(w), meaning v must come first.
A topological order of that digraph is a strong elimination order; a
directed cycle proves the representation is not compatible.

Cost is O(n + m + sum of subtree sizes) for the digraph plus the per-edge
overshadow tests, and a heap factor for the deterministic tie-break. A
subtree whose root is strictly deeper can never overshadow the other one,
so for such edges only one direction is tested.
"""
from __future__ import annotations

import heapq
from collections.abc import Callable, Iterable
from dataclasses import dataclass

from .graph import Graph, VertexOrder
from .representation import TreeRepresentation, intersection_graph, is_compatible_representation


class IncompatibleRepresentation(ValueError):
    """The overshadow digraph has a directed cycle.

    ``cycle`` lists vertices v_0, ..., v_{k-1} such that T(v_i) does not
    overshadow T(v_{i+1}) (indices mod k).
    """

    def __init__(self, cycle: list[str]):
        self.cycle = cycle
        super().__init__("overshadow digraph has a cycle: " + " -> ".join([*cycle, cycle[0]]))


@dataclass(frozen=True)
class OvershadowDigraph:
    vertices: tuple[str, ...]
    successors: dict[str, tuple[str, ...]]

    def arcs(self) -> frozenset[tuple[str, str]]:
        return frozenset((v, w) for v, ws in self.successors.items() for w in ws)

    def __contains__(self, arc: object) -> bool:
        if not isinstance(arc, tuple) or len(arc) != 2:
            return False
        return arc[1] in self.successors.get(arc[0], ())


def _arcs(r: TreeRepresentation) -> tuple[list[str], list[int], list[int], list[int]]:
    """Overshadow arcs over vertex indices as parallel ``src``/``dst`` lists.

    Also returns labels and root depths. Arrays stay flat on purpose: this
    runs on 10^5-vertex inputs and per-vertex containers cost more than the
    arithmetic.
    """
    depth = r.host.depth
    labels = list(r.assignment)
    subs = list(r.assignment.values())
    members = [s.members for s in subs]
    rdepth = [depth[s.root] for s in subs]
    # node -> index of the single vertex rooted there, or a list when shared
    rooted: dict[str, int | list[int]] = {}
    for i, s in enumerate(subs):
        grp = rooted.get(s.root)
        if grp is None:
            rooted[s.root] = i
        elif type(grp) is int:
            rooted[s.root] = [grp, i]
        else:
            grp.append(i)
    dget = depth.__getitem__
    get = rooted.get
    src: list[int] = []
    dst: list[int] = []
    add_src, add_dst = src.append, dst.append
    for v, mv in enumerate(members):
        dv = rdepth[v]
        for x in mv:
            grp = get(x)
            if grp is None:
                continue
            for u in (grp,) if type(grp) is int else grp:
                if rdepth[u] > dv:
                    # deeper root: T(u) cannot overshadow T(v); test T(v) over T(u)
                    add_src(u)
                    add_dst(v)
                    mu = members[u]
                    if mu <= mv or max(map(dget, mu & mv)) < min(map(dget, mu - mv)):
                        continue
                    add_src(v)
                    add_dst(u)
                elif u > v:
                    # shared root, seen from both sides; handle once
                    mu = members[u]
                    if not (mu <= mv or max(map(dget, mu & mv)) < min(map(dget, mu - mv))):
                        add_src(v)
                        add_dst(u)
                    if not (mv <= mu or max(map(dget, mu & mv)) < min(map(dget, mv - mu))):
                        add_src(u)
                        add_dst(v)
    return labels, rdepth, src, dst


def build_overshadow_digraph(r: TreeRepresentation, g: Graph | None = None) -> OvershadowDigraph:
    """The overshadow digraph of ``r``; ``g``, if given, must be its intersection graph."""
    if g is not None and g != intersection_graph(r):
        raise ValueError("graph is not the intersection graph of the representation")
    labels, _, src, dst = _arcs(r)
    succ: dict[str, list[str]] = {v: [] for v in labels}
    for u, w in zip(src, dst):
        succ[labels[u]].append(labels[w])
    return OvershadowDigraph(tuple(labels), {v: tuple(ws) for v, ws in succ.items()})


def _topological(labels: list[str], src: list[int], dst: list[int], rank: list[int]) -> list[int]:
    """Kahn's algorithm, always emitting the available vertex of least ``rank``."""
    n = len(labels)
    start = [0] * (n + 1)
    indeg = [0] * n
    for u in src:
        start[u + 1] += 1
    for w in dst:
        indeg[w] += 1
    acc = 0
    for i in range(n + 1):
        acc += start[i]
        start[i] = acc
    fill = start[:]
    adj = [0] * len(src)
    for u, w in zip(src, dst):
        adj[fill[u]] = w
        fill[u] += 1
    by_rank = [0] * n
    for v, rk in enumerate(rank):
        by_rank[rk] = v
    heap = [rank[v] for v in range(n) if not indeg[v]]
    heapq.heapify(heap)
    out = []
    push, pop = heapq.heappush, heapq.heappop
    while heap:
        v = by_rank[pop(heap)]
        out.append(v)
        for i in range(start[v], start[v + 1]):
            w = adj[i]
            indeg[w] -= 1
            if not indeg[w]:
                push(heap, rank[w])
    if len(out) < n:
        cycle = _find_cycle(src, dst, indeg)
        raise IncompatibleRepresentation([labels[v] for v in cycle])
    return out


def _find_cycle(src: list[int], dst: list[int], indeg: list[int]) -> list[int]:
    # every vertex left with positive in-degree has a predecessor that is also left
    pred: dict[int, int] = {}
    for u, w in zip(src, dst):
        if indeg[u] and indeg[w]:
            pred[w] = u
    v = next(iter(pred))
    seen: dict[int, int] = {}
    walk = []
    while v not in seen:
        seen[v] = len(walk)
        walk.append(v)
        v = pred[v]
    cycle = walk[seen[v]:]
    cycle.reverse()
    return cycle


def extract_strong_elimination_order(r: TreeRepresentation) -> VertexOrder:
    """A strong elimination order of the intersection graph of ``r``.

    Among the vertices available at each step the one with the deepest
    subtree root goes first, then the smallest label, so the output is also
    a bottom-up enumeration order. Raises :class:`IncompatibleRepresentation`
    when the overshadow digraph has a cycle.
    """
    labels, rdepth, src, dst = _arcs(r)
    # two stable sorts: label, then decreasing root depth (tuple keys are far slower at scale)
    neg = [-d for d in rdepth]
    ranked = sorted(sorted(range(len(labels)), key=labels.__getitem__), key=neg.__getitem__)
    rank = [0] * len(labels)
    for rk, v in enumerate(ranked):
        rank[v] = rk
    return VertexOrder([labels[v] for v in _topological(labels, src, dst, rank)])


def order_from_verdicts(g: Graph, holds: Callable[[str, str], bool], priority: Iterable[str] | None = None) -> VertexOrder:
    """Order ``g`` from known overshadow verdicts.

    ``holds(v, w)`` says whether T(v) overshadows T(w) and is consulted
    once per direction of every edge. Ties among available vertices follow
    ``priority`` (default: label order).
    """
    labels = list(g.vertices)
    idx = {v: i for i, v in enumerate(labels)}
    src: list[int] = []
    dst: list[int] = []
    for v, w in g.edges():
        if not holds(v, w):
            src.append(idx[v])
            dst.append(idx[w])
        if not holds(w, v):
            src.append(idx[w])
            dst.append(idx[v])
    ordered = list(priority) if priority is not None else sorted(labels)
    if sorted(ordered) != sorted(labels):
        raise ValueError("priority must list every vertex exactly once")
    rank = [0] * len(labels)
    for rk, v in enumerate(ordered):
        rank[idx[v]] = rk
    return VertexOrder([labels[v] for v in _topological(labels, src, dst, rank)])


def deepest_root_vertex(r: TreeRepresentation, check: bool = False) -> str:
    """Vertex whose subtree root is deepest (ties by label).

    On a compatible representation this vertex is simple in the
    intersection graph. ``check=True`` verifies compatibility first.
    """
    if not r.assignment:
        raise ValueError("empty representation")
    if check:
        ok, pair = is_compatible_representation(r)
        if not ok:
            raise ValueError(f"representation is not compatible: {pair}")
    return min(r.assignment, key=lambda v: (-r.root_depth(v), v))
