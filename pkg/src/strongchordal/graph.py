"""Undirected simple graphs with labeled vertices, plus vertex orders.

Vertex labels are opaque strings. Wherever a deterministic choice is needed
(certificates, tie-breaks) the lexicographically smallest label wins.
"""
from __future__ import annotations

from collections.abc import Iterable, Iterator
from itertools import combinations


class GraphError(ValueError):
    pass


class GraphFormatError(GraphError):
    """Raised by :func:`parse_graph`; ``line`` is the 1-based offending line."""

    def __init__(self, message: str, line: int | None = None):
        self.line = line
        if line is not None:
            message = f"{message} at line {line}"
        super().__init__(message)


class Graph:
    """Immutable undirected simple graph.

    ``vertices`` keeps declaration order; equality ignores that order and
    compares vertex and edge sets only.
    """

    __slots__ = ("_vertices", "_adj", "_edge_count")

    def __init__(self, vertices: Iterable[str], edges: Iterable[tuple[str, str]] = ()):
        verts = tuple(vertices)
        adj: dict[str, set[str]] = {v: set() for v in verts}
        if len(adj) != len(verts):
            raise GraphError("duplicate vertex label")
        count = 0
        for u, v in edges:
            if u == v:
                raise GraphError(f"self-loop on {u!r}")
            if u not in adj or v not in adj:
                raise GraphError(f"edge ({u!r}, {v!r}) has an undeclared endpoint")
            if v in adj[u]:
                raise GraphError(f"duplicate edge ({u!r}, {v!r})")
            adj[u].add(v)
            adj[v].add(u)
            count += 1
        self._vertices = verts
        self._adj = {v: frozenset(nbrs) for v, nbrs in adj.items()}
        self._edge_count = count

    @classmethod
    def _from_adjacency(cls, vertices: tuple[str, ...], adj: dict[str, frozenset[str]]) -> Graph:
        # trusted constructor: adj must already be symmetric and loop-free
        g = cls.__new__(cls)
        g._vertices = vertices
        g._adj = adj
        g._edge_count = sum(len(n) for n in adj.values()) // 2
        return g

    @property
    def vertices(self) -> tuple[str, ...]:
        return self._vertices

    def __len__(self) -> int:
        return len(self._vertices)

    def __iter__(self) -> Iterator[str]:
        return iter(self._vertices)

    def __contains__(self, v: object) -> bool:
        return v in self._adj

    @property
    def num_edges(self) -> int:
        return self._edge_count

    def neighbors(self, v: str) -> frozenset[str]:
        """Open neighborhood of ``v``."""
        try:
            return self._adj[v]
        except KeyError:
            raise KeyError(f"unknown vertex {v!r}") from None

    def degree(self, v: str) -> int:
        return len(self.neighbors(v))

    def has_edge(self, u: str, v: str) -> bool:
        return v in self.neighbors(u)

    def edges(self) -> list[tuple[str, str]]:
        """All edges as ``(min-label, max-label)`` pairs, sorted."""
        out = [(u, v) for u, nbrs in self._adj.items() for v in nbrs if u < v]
        out.sort()
        return out

    def edge_set(self) -> frozenset[tuple[str, str]]:
        return frozenset(self.edges())

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self._adj == other._adj

    def __hash__(self) -> int:
        return hash((frozenset(self._vertices), self.edge_set()))

    def __repr__(self) -> str:
        return f"Graph(n={len(self)}, m={self.num_edges})"


class VertexOrder:
    """A permutation of vertex labels with 1-based position lookup."""

    __slots__ = ("sequence", "index")

    def __init__(self, sequence: Iterable[str]):
        self.sequence: tuple[str, ...] = tuple(sequence)
        self.index: dict[str, int] = {v: p for p, v in enumerate(self.sequence, 1)}
        if len(self.index) != len(self.sequence):
            raise GraphError("vertex order repeats a label")

    @classmethod
    def parse(cls, text: str) -> VertexOrder:
        """Parse the comma-separated form used on the command line."""
        text = text.strip()
        if not text:
            return cls(())
        return cls(label.strip() for label in text.split(","))

    def __len__(self) -> int:
        return len(self.sequence)

    def __iter__(self) -> Iterator[str]:
        return iter(self.sequence)

    def at(self, position: int) -> str:
        """Vertex at 1-based ``position``."""
        if not 1 <= position <= len(self.sequence):
            raise IndexError(position)
        return self.sequence[position - 1]

    def position(self, v: str) -> int:
        return self.index[v]

    def check_matches(self, g: Graph) -> None:
        if len(self.sequence) != len(g) or any(v not in g for v in self.sequence):
            raise GraphError("order is not a permutation of the graph's vertices")

    def __eq__(self, other: object) -> bool:
        if isinstance(other, VertexOrder):
            return self.sequence == other.sequence
        if isinstance(other, (tuple, list)):
            return self.sequence == tuple(other)
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self.sequence)

    def __str__(self) -> str:
        return ",".join(self.sequence)

    def __repr__(self) -> str:
        return f"VertexOrder({list(self.sequence)!r})"


def parse_graph(text: str) -> Graph:
    """Parse the line-oriented graph format.

    ``c`` lines are comments, ``p edge <n> <m>`` is the header, optional
    ``v <label>`` lines declare labels (otherwise ``1..n``), and exactly
    ``m`` lines ``e <u> <v>`` follow.
    """
    n = m = None
    declared: list[str] = []
    edge_lines: list[tuple[int, str, str]] = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line == "c" or line.startswith("c "):
            continue
        parts = line.split()
        kind = parts[0]
        if kind == "p":
            if n is not None:
                raise GraphFormatError("second header", lineno)
            if len(parts) != 4 or parts[1] != "edge":
                raise GraphFormatError("malformed header", lineno)
            try:
                n, m = int(parts[2]), int(parts[3])
            except ValueError:
                raise GraphFormatError("malformed header", lineno) from None
            if n < 0 or m < 0:
                raise GraphFormatError("malformed header", lineno)
        elif n is None:
            raise GraphFormatError("missing header before data", lineno)
        elif kind == "v":
            if len(parts) != 2:
                raise GraphFormatError("malformed vertex line", lineno)
            if edge_lines:
                raise GraphFormatError("vertex declared after edges", lineno)
            if parts[1] in declared:
                raise GraphFormatError(f"duplicate vertex {parts[1]!r}", lineno)
            declared.append(parts[1])
        elif kind == "e":
            if len(parts) != 3:
                raise GraphFormatError("malformed edge line", lineno)
            edge_lines.append((lineno, parts[1], parts[2]))
        else:
            raise GraphFormatError(f"unknown line type {kind!r}", lineno)
    if n is None:
        raise GraphFormatError("missing header")
    if declared and len(declared) != n:
        raise GraphFormatError(f"header declares {n} vertices but {len(declared)} were listed")
    labels = declared or [str(i) for i in range(1, n + 1)]
    known = set(labels)
    seen: set[frozenset[str]] = set()
    for lineno, u, v in edge_lines:
        if u == v:
            raise GraphFormatError("self-loop", lineno)
        if u not in known or v not in known:
            raise GraphFormatError("undeclared endpoint", lineno)
        key = frozenset((u, v))
        if key in seen:
            raise GraphFormatError("duplicate edge", lineno)
        seen.add(key)
    if len(edge_lines) != m:
        raise GraphFormatError(f"header declares {m} edges but {len(edge_lines)} were listed")
    return Graph(labels, ((u, v) for _, u, v in edge_lines))


def serialize_graph(g: Graph) -> str:
    lines = [f"p edge {len(g)} {g.num_edges}"]
    lines.extend(f"v {v}" for v in g.vertices)
    lines.extend(f"e {u} {v}" for u, v in g.edges())
    return "\n".join(lines) + "\n"


def closed_neighborhood(g: Graph, v: str) -> frozenset[str]:
    return g.neighbors(v) | {v}


def induced_subgraph(g: Graph, s: Iterable[str]) -> Graph:
    keep = set(s)
    missing = keep.difference(g.vertices)
    if missing:
        raise GraphError(f"not vertices of the graph: {sorted(missing)}")
    verts = tuple(v for v in g.vertices if v in keep)
    adj = {v: g.neighbors(v) & keep for v in verts}
    return Graph._from_adjacency(verts, adj)


def is_simplicial_vertex(g: Graph, v: str) -> tuple[bool, tuple[str, str] | None]:
    """Whether N[v] is a clique.

    On failure the lexicographically least non-adjacent pair of N[v] is
    returned alongside ``False``.
    """
    nbrs = sorted(g.neighbors(v))
    for a, b in combinations(nbrs, 2):
        if not g.has_edge(a, b):
            return False, (a, b)
    return True, None


def is_simple_vertex(g: Graph, v: str) -> tuple[bool, tuple[str, ...]]:
    """Whether the closed neighborhoods of N[v] form an inclusion chain.

    Returns ``(True, chain)`` where ``chain`` lists N[v] by increasing
    neighborhood size (ties by label), or ``(False, (p, q))`` for an
    incomparable pair p, q in N[v].
    """
    members = closed_neighborhood(g, v)
    hoods = {u: closed_neighborhood(g, u) for u in members}
    chain = sorted(members, key=lambda u: (len(hoods[u]), u))
    # the size-sorted sequence is a chain iff every pair is comparable
    for p, q in zip(chain, chain[1:]):
        if not hoods[p] <= hoods[q]:
            return False, (p, q)
    return True, tuple(chain)
