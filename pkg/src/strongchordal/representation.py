"""Tree representations: a host tree plus one subtree per graph vertex."""
from __future__ import annotations

from collections.abc import Iterable, Mapping
from dataclasses import dataclass

from .graph import Graph, VertexOrder
from .host_tree import HostTree, Subtree, TreeError, is_valid_subtree, overshadow_verdict


class RepresentationFormatError(ValueError):
    def __init__(self, message: str, line: int | None = None):
        self.line = line
        if line is not None:
            message = f"{message} at line {line}"
        super().__init__(message)


class TreeRepresentation:
    """Host tree plus a subtree per vertex label (insertion order is kept)."""

    __slots__ = ("host", "assignment")

    def __init__(self, host: HostTree, assignment: Mapping[str, Subtree]):
        for label, sub in assignment.items():
            unknown = [x for x in sub.members if x not in host]
            if unknown:
                raise TreeError(f"subtree of {label!r} uses unknown nodes {sorted(unknown)}")
            ok, root = is_valid_subtree(host, sub.members)
            if not ok:
                raise TreeError(f"subtree of {label!r} is not connected")
            if root != sub.root:
                raise TreeError(f"subtree of {label!r} is rooted at {root!r}, not {sub.root!r}")
        self.host = host
        self.assignment: dict[str, Subtree] = dict(assignment)

    @classmethod
    def from_sets(cls, host: HostTree, sets: Mapping[str, Iterable[str]]) -> TreeRepresentation:
        """Build from plain node sets, deriving each subtree's root."""
        assignment = {}
        for label, nodes in sets.items():
            members = frozenset(nodes)
            ok, root = is_valid_subtree(host, members)
            if not ok:
                raise TreeError(f"subtree of {label!r} is not connected")
            assignment[label] = Subtree(members, root)
        return cls(host, assignment)

    @property
    def vertices(self) -> tuple[str, ...]:
        return tuple(self.assignment)

    def __getitem__(self, label: str) -> Subtree:
        return self.assignment[label]

    def __len__(self) -> int:
        return len(self.assignment)

    def root_depth(self, label: str) -> int:
        return self.host.depth[self.assignment[label].root]

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, TreeRepresentation):
            return NotImplemented
        return self.host == other.host and self.assignment == other.assignment

    def __repr__(self) -> str:
        return f"TreeRepresentation(nodes={len(self.host)}, vertices={len(self.assignment)})"


def _rooted_at(r: TreeRepresentation) -> dict[str, list[str]]:
    out: dict[str, list[str]] = {}
    for label, sub in r.assignment.items():
        out.setdefault(sub.root, []).append(label)
    return out


def intersection_graph(r: TreeRepresentation) -> Graph:
    """The graph with an edge wherever two subtrees share a node.

    Two subtrees meet exactly when the root of one lies in the other, so
    the scan costs the total subtree size plus the number of edges.
    """
    rooted = _rooted_at(r)
    adj: dict[str, set[str]] = {v: set() for v in r.assignment}
    for v, sub in r.assignment.items():
        for x in sub.members:
            for u in rooted.get(x, ()):
                if u != v:
                    adj[v].add(u)
                    adj[u].add(v)
    return Graph._from_adjacency(r.vertices, {v: frozenset(n) for v, n in adj.items()})


def incompatible_pairs(r: TreeRepresentation, g: Graph | None = None) -> list[tuple[str, str]]:
    """All pairs ``(u, v)``, ``u < v``, where neither subtree overshadows the other."""
    if g is None:
        g = intersection_graph(r)
    depth = r.host.depth
    out = []
    for u, v in g.edges():
        mu, mv = r.assignment[u].members, r.assignment[v].members
        if not overshadow_verdict(depth, mu, mv).holds and not overshadow_verdict(depth, mv, mu).holds:
            out.append((u, v))
    return out


def is_compatible_representation(r: TreeRepresentation) -> tuple[bool, tuple[str, str] | None]:
    """Whether every pair of subtrees is compatible.

    Disjoint subtrees are always compatible, so only intersecting pairs are
    examined. On failure the lexicographically least bad pair is returned.
    """
    depth = r.host.depth
    for u, v in intersection_graph(r).edges():
        mu, mv = r.assignment[u].members, r.assignment[v].members
        if not overshadow_verdict(depth, mu, mv).holds and not overshadow_verdict(depth, mv, mu).holds:
            return False, (u, v)
    return True, None


def is_rdv(r: TreeRepresentation) -> bool:
    """True when every subtree is a downward path in the host tree."""
    parent = r.host.parent
    for sub in r.assignment.values():
        seen = set()
        for x in sub.members:
            p = parent[x]
            if p in sub.members:
                if p in seen:
                    return False
                seen.add(p)
    return True


def bottom_up_order(r: TreeRepresentation) -> VertexOrder:
    """Vertices by decreasing root depth, ties by label."""
    return VertexOrder(sorted(r.assignment, key=lambda v: (-r.root_depth(v), v)))


@dataclass(frozen=True)
class SubdivisionReport:
    representation: TreeRepresentation
    graph_preserved: bool
    compatible: bool
    incompatible_pairs: tuple[tuple[str, str], ...]


SUBDIVISION_POLICIES = ("extend-none", "extend-all")


def subdivide_unit_weights(r: TreeRepresentation, policy: str = "extend-none") -> SubdivisionReport:
    """Replace every arc of weight k > 1 by k unit arcs through k - 1 new nodes.

    New nodes join every subtree holding both arc endpoints. Under
    ``extend-all`` they also join every subtree holding the upper endpoint.
    The result is re-checked for intersection graph equality and
    compatibility.
    """
    if policy not in SUBDIVISION_POLICIES:
        raise ValueError(f"unknown policy {policy!r}")
    host = r.host
    arcs: list[tuple[str, str | None, int]] = []
    fresh: dict[str, list[str]] = {}  # lower endpoint -> new nodes, top to bottom
    for x in host.nodes:
        p = host.parent[x]
        w = host.weight.get(x, 0)
        if p is None:
            arcs.append((x, None, 0))
            continue
        if w > 1:
            chain = [f"{p}-{x}-{i}" for i in range(1, w)]
            upper = p
            for node in chain:
                if node in host:
                    raise TreeError(f"subdivision node id {node!r} collides with an existing node")
                arcs.append((node, upper, 1))
                upper = node
            fresh[x] = chain
            arcs.append((x, upper, 1))
        else:
            arcs.append((x, p, w))
    new_host = HostTree(arcs)
    sets = {}
    for label, sub in r.assignment.items():
        members = set(sub.members)
        for lower, chain in fresh.items():
            upper = host.parent[lower]
            if upper in sub.members and (lower in sub.members or policy == "extend-all"):
                members.update(chain)
        sets[label] = frozenset(members)
    out = TreeRepresentation(
        new_host, {label: Subtree(m, r.assignment[label].root) for label, m in sets.items()}
    )
    g_new = intersection_graph(out)
    bad = incompatible_pairs(out, g_new)
    return SubdivisionReport(out, g_new == intersection_graph(r), not bad, tuple(bad))


def serialize_representation(r: TreeRepresentation) -> str:
    lines = [f"t {len(r.host)} {len(r.assignment)}"]
    for x, p, w in r.host.arcs():
        lines.append(f"node {x} {'-' if p is None else p} {w}")
    for label, sub in r.assignment.items():
        rest = sorted(sub.members - {sub.root})
        lines.append(" ".join(["sub", label, sub.root, *rest]))
    return "\n".join(lines) + "\n"


def parse_representation(text: str) -> TreeRepresentation:
    header = None
    node_lines: list[tuple[int, list[str]]] = []
    sub_lines: list[tuple[int, list[str]]] = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line == "c" or line.startswith("c "):
            continue
        parts = line.split()
        if parts[0] == "t":
            if header is not None:
                raise RepresentationFormatError("second header", lineno)
            try:
                if len(parts) != 3:
                    raise ValueError
                header = (int(parts[1]), int(parts[2]))
            except ValueError:
                raise RepresentationFormatError("malformed header", lineno) from None
        elif header is None:
            raise RepresentationFormatError("missing header before data", lineno)
        elif parts[0] == "node":
            if len(parts) != 4:
                raise RepresentationFormatError("malformed node line", lineno)
            node_lines.append((lineno, parts))
        elif parts[0] == "sub":
            if len(parts) < 3:
                raise RepresentationFormatError("malformed sub line", lineno)
            sub_lines.append((lineno, parts))
        else:
            raise RepresentationFormatError(f"unknown line type {parts[0]!r}", lineno)
    if header is None:
        raise RepresentationFormatError("missing header")

    all_ids = {parts[1] for _, parts in node_lines}
    arcs = []
    declared: set[str] = set()
    for lineno, (_, node, par, w) in node_lines:
        try:
            weight = int(w)
        except ValueError:
            raise RepresentationFormatError("malformed weight", lineno) from None
        if node in declared:
            raise RepresentationFormatError(f"duplicate node {node!r}", lineno)
        if par == "-":
            if weight != 0:
                raise RepresentationFormatError("root weight must be 0", lineno)
            if any(p is None for _, p, _ in arcs):
                raise RepresentationFormatError("second root", lineno)
            arcs.append((node, None, 0))
        else:
            if weight < 1:
                raise RepresentationFormatError("nonpositive weight", lineno)
            if par not in all_ids:
                raise RepresentationFormatError(f"orphan node {node!r}: parent {par!r} never declared", lineno)
            if par not in declared:
                raise RepresentationFormatError(f"parent {par!r} declared after child {node!r}", lineno)
            arcs.append((node, par, weight))
        declared.add(node)
    if len(arcs) != header[0]:
        raise RepresentationFormatError(f"header declares {header[0]} nodes but {len(arcs)} were listed")
    if not arcs:
        raise RepresentationFormatError("host tree has no nodes")
    try:
        host = HostTree(arcs)
    except TreeError as exc:
        raise RepresentationFormatError(str(exc)) from None

    assignment: dict[str, Subtree] = {}
    for lineno, parts in sub_lines:
        label, root, members = parts[1], parts[2], parts[2:]
        if label in assignment:
            raise RepresentationFormatError(f"duplicate vertex {label!r}", lineno)
        unknown = [x for x in members if x not in host]
        if unknown:
            raise RepresentationFormatError(f"unknown node {unknown[0]!r}", lineno)
        if len(set(members)) != len(members):
            raise RepresentationFormatError("node listed twice in subtree", lineno)
        ok, actual = is_valid_subtree(host, members)
        if not ok:
            raise RepresentationFormatError("subtree not connected", lineno)
        if actual != root:
            raise RepresentationFormatError(f"subtree root is {actual!r}, listed {root!r} first", lineno)
        assignment[label] = Subtree(frozenset(members), root)
    if len(assignment) != header[1]:
        raise RepresentationFormatError(
            f"header declares {header[1]} vertices but {len(assignment)} were listed"
        )
    return TreeRepresentation(host, assignment)
