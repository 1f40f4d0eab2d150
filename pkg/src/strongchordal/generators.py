"""Seeded instance generators.

All randomness comes from :class:`SplitMix64` so that a (parameters, seed)
pair pins the output bit for bit. Draw order is part of the contract:

* host tree: for node i = 2..N, its parent ``1 + below(i - 1)``; then, when
  ``max_weight > 1``, each arc weight ``1 + below(max_weight)`` in node order;
* then each subtree in vertex order, as documented per generator.

``below(k)`` maps one 64-bit draw x to ``(x * k) >> 64``; ``coin()`` is the
top bit of one draw.
"""
from __future__ import annotations

import os
from collections.abc import Iterable
from dataclasses import dataclass

from .graph import Graph, VertexOrder, serialize_graph
from .host_tree import HostTree, Subtree
from .recognition import greedy_simple_elimination
from .representation import (
    TreeRepresentation,
    bottom_up_order,
    intersection_graph,
    is_compatible_representation,
    serialize_representation,
)

MASK64 = (1 << 64) - 1


class SplitMix64:
    __slots__ = ("state",)

    def __init__(self, seed: int):
        self.state = seed & MASK64

    def next(self) -> int:
        self.state = (self.state + 0x9E3779B97F4A7C15) & MASK64
        z = self.state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & MASK64
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & MASK64
        return z ^ (z >> 31)

    def below(self, k: int) -> int:
        """Uniform integer in ``[0, k)``."""
        if k < 1:
            raise ValueError("below() needs a positive bound")
        return (self.next() * k) >> 64

    def coin(self) -> bool:
        return bool(self.next() >> 63)


def _random_host(rng: SplitMix64, num_nodes: int, max_weight: int) -> HostTree:
    parents = [None, None] + [1 + rng.below(i - 1) for i in range(2, num_nodes + 1)]
    weights = [0, 0] + [1 + rng.below(max_weight) for _ in range(2, num_nodes + 1)] if max_weight > 1 else None
    arcs = [("1", None, 0)]
    for i in range(2, num_nodes + 1):
        arcs.append((str(i), str(parents[i]), weights[i] if weights else 1))
    return HostTree(arcs)


def _check_params(num_nodes: int, num_vertices: int, max_weight: int = 1) -> None:
    if num_nodes < 1 or num_vertices < 0 or max_weight < 1:
        raise ValueError(
            f"invalid parameters: num_nodes={num_nodes}, num_vertices={num_vertices}, max_weight={max_weight}"
        )


def generate_rdv_representation(num_nodes: int, num_vertices: int, max_weight: int, seed: int) -> TreeRepresentation:
    """Random host tree with one downward path per vertex ``v1..vV``.

    Per path: start node ``1 + below(N)``; then while the current node has
    children and ``coin()`` comes up, step to child ``below(#children)``
    (children in creation order).
    """
    _check_params(num_nodes, num_vertices, max_weight)
    rng = SplitMix64(seed)
    host = _random_host(rng, num_nodes, max_weight)
    assignment = {}
    for v in range(1, num_vertices + 1):
        node = str(1 + rng.below(num_nodes))
        path = [node]
        while host.children[node] and rng.coin():
            kids = host.children[node]
            node = kids[rng.below(len(kids))]
            path.append(node)
        assignment[f"v{v}"] = Subtree(frozenset(path), path[0])
    return TreeRepresentation(host, assignment)


def generate_random_chordal_representation(num_nodes: int, num_vertices: int, seed: int) -> TreeRepresentation:
    """Unit-weight host tree with randomly grown subtrees.

    Per subtree: start node ``1 + below(N)``, target size ``1 + below(N)``;
    then repeatedly move frontier entry ``below(len(frontier))`` into the
    subtree, appending its unvisited tree neighbors (parent first, then
    children) to the frontier, until the target is reached or the frontier
    empties. The intersection graph is chordal, not necessarily strongly so.
    """
    _check_params(num_nodes, num_vertices)
    rng = SplitMix64(seed)
    host = _random_host(rng, num_nodes, 1)
    assignment = {}
    for v in range(1, num_vertices + 1):
        start = str(1 + rng.below(num_nodes))
        target = 1 + rng.below(num_nodes)
        members = {start}
        frontier = [y for y in (host.parent[start], *host.children[start]) if y is not None]
        seen = {start, *frontier}
        while len(members) < target and frontier:
            x = frontier.pop(rng.below(len(frontier)))
            members.add(x)
            for y in (host.parent[x], *host.children[x]):
                if y is not None and y not in seen:
                    seen.add(y)
                    frontier.append(y)
        root = min(members, key=host.depth.__getitem__)
        assignment[f"v{v}"] = Subtree(frozenset(members), root)
    return TreeRepresentation(host, assignment)


def generate_sun(k: int) -> Graph:
    """The k-sun: clique u1..uk plus rim vertex wi adjacent to ui and u(i mod k)+1."""
    if k < 3:
        raise ValueError("a sun needs k >= 3")
    us = [f"u{i}" for i in range(1, k + 1)]
    ws = [f"w{i}" for i in range(1, k + 1)]
    edges = [(us[a], us[b]) for a in range(k) for b in range(a + 1, k)]
    for i in range(k):
        edges.append((ws[i], us[i]))
        edges.append((ws[i], us[(i + 1) % k]))
    return Graph(us + ws, edges)


def generate_random_graph(n: int, seed: int, density_steps: int = 8) -> Graph:
    """Small random graph on ``1..n``.

    Draws a density ``d = 1 + below(density_steps)``, then keeps each pair
    (in lexicographic position order) when ``below(density_steps + 1) < d``.
    """
    rng = SplitMix64(seed)
    d = 1 + rng.below(density_steps)
    labels = [str(i) for i in range(1, n + 1)]
    edges = [
        (labels[a], labels[b])
        for a in range(n)
        for b in range(a + 1, n)
        if rng.below(density_steps + 1) < d
    ]
    return Graph(labels, edges)


def generate_strongly_chordal_graph(num_vertices: int, seed: int, window: int = 16) -> tuple[Graph, VertexOrder]:
    """Large strongly chordal graph with a known strong elimination order.

    Vertex ``vi`` owns host node i. For i >= 3, node i hangs under node
    i - 1 unless ``below(8) == 0``, in which case it hangs under
    ``i - 1 - below(min(window, i - 1))``; node 2 hangs under node 1. The
    subtree of ``vi`` is a downward path from node i that steps to child
    ``below(#children)`` while ``below(8) != 0``. Every root is distinct, so
    the bottom-up order is a strong elimination order. Mean degree is
    close to 8.
    """
    if num_vertices < 1 or window < 1:
        raise ValueError("need at least one vertex and a positive window")
    rng = SplitMix64(seed)
    arcs = [("v1", None, 0)]
    for i in range(2, num_vertices + 1):
        p = i - 1
        if i > 2 and rng.below(8) == 0:
            p = i - 1 - rng.below(min(window, i - 1))
        arcs.append((f"v{i}", f"v{p}", 1))
    host = HostTree(arcs)
    children = host.children
    assignment = {}
    edges = []
    for x in host.nodes:
        path = [x]
        node = x
        while children[node] and rng.below(8):
            kids = children[node]
            node = kids[rng.below(len(kids))]
            path.append(node)
            edges.append((x, node))
        assignment[x] = Subtree(frozenset(path), x)
    rep = TreeRepresentation(host, assignment)
    return Graph(host.nodes, edges), bottom_up_order(rep)


@dataclass(frozen=True)
class CorpusEntry:
    kind: str  # "rdv", "chordal" or "sun"
    params: tuple[int, ...]
    seed: int = 0


def _instance(entry: CorpusEntry) -> TreeRepresentation | Graph:
    if entry.kind == "rdv":
        return generate_rdv_representation(*entry.params, seed=entry.seed)
    if entry.kind == "chordal":
        return generate_random_chordal_representation(*entry.params, seed=entry.seed)
    if entry.kind == "sun":
        return generate_sun(*entry.params)
    raise ValueError(f"unknown corpus kind {entry.kind!r}")


def write_corpus(out_dir: str, entries: Iterable[CorpusEntry]) -> str:
    """Write each instance plus ``manifest.tsv`` into ``out_dir``.

    Manifest columns: kind, params, seed, file, compatible, strongly_chordal.
    ``compatible`` is ``-`` for bare graphs.
    """
    os.makedirs(out_dir, exist_ok=True)
    rows = ["kind\tparams\tseed\tfile\tcompatible\tstrongly_chordal"]
    for e in entries:
        inst = _instance(e)
        params = ",".join(map(str, e.params))
        stem = f"{e.kind}-{params.replace(',', '_')}-{e.seed}"
        if isinstance(inst, TreeRepresentation):
            fname, text = stem + ".rep", serialize_representation(inst)
            compatible = "yes" if is_compatible_representation(inst)[0] else "no"
            g = intersection_graph(inst)
        else:
            fname, text = stem + ".gr", serialize_graph(inst)
            compatible = "-"
            g = inst
        with open(os.path.join(out_dir, fname), "w") as fh:
            fh.write(text)
        strong = "yes" if greedy_simple_elimination(g)[0] else "no"
        rows.append(f"{e.kind}\t{params}\t{e.seed}\t{fname}\t{compatible}\t{strong}")
    path = os.path.join(out_dir, "manifest.tsv")
    with open(path, "w") as fh:
        fh.write("\n".join(rows) + "\n")
    return path
