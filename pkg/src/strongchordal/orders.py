"""Elimination-order validators and order-to-representation constructions.

Positions in certificates are 1-based.
"""
from __future__ import annotations

from collections.abc import Mapping, Sequence

from .graph import Graph, VertexOrder
from .host_tree import HostTree, Subtree
from .representation import TreeRepresentation


class InvalidOrderError(ValueError):
    """A construction was handed an order that fails its precondition."""

    def __init__(self, message: str, certificate: tuple):
        super().__init__(message)
        self.certificate = certificate


def _closed_position_sets(g: Graph, index: Mapping[str, int]) -> list[frozenset[int]]:
    """Closed neighborhoods as position sets; entry 0 is unused padding."""
    out: list[frozenset[int]] = [frozenset()] * (len(index) + 1)
    for v, p in index.items():
        out[p] = frozenset([p, *(index[u] for u in g.neighbors(v))])
    return out


def seo_violation(closed: Sequence[frozenset[int]]) -> tuple[int, int, int, int] | None:
    """Least violating quadruple over closed neighborhoods given by position.

    The condition fails for ``(i, j)`` exactly when N[v_i] ∩ N[v_j] is not an
    upper segment of N[v_i]; the least ``k`` is then the smallest common
    position and ``l`` the next position of N[v_i] missing from N[v_j].
    """
    n = len(closed) - 1
    for i in range(1, n + 1):
        a = sorted(closed[i])
        size = len(a)
        count: dict[int, int] = {}
        first: dict[int, int] = {}
        for rank, k in enumerate(a):
            for j in closed[k]:
                if j > i:
                    if j in count:
                        count[j] += 1
                    else:
                        count[j] = 1
                        first[j] = rank
        bad = [j for j, c in count.items() if first[j] != size - c]
        if bad:
            j = min(bad)
            nj = closed[j]
            rank = first[j]
            k = a[rank]
            ell = next(x for x in a[rank + 1:] if x not in nj)
            return i, j, k, ell
    return None


def is_strong_elimination_order(g: Graph, o: VertexOrder) -> tuple[bool, tuple[int, int, int, int] | None]:
    """Check the strong elimination condition.

    For all i < j and k < l with v_k, v_l in N[v_i] and v_k in N[v_j], v_l
    must be in N[v_j]. Returns the lexicographically least violating
    position quadruple ``(i, j, k, l)`` on failure.
    """
    o.check_matches(g)
    quad = seo_violation(_closed_position_sets(g, o.index))
    return quad is None, quad


def is_perfect_elimination_order(
    g: Graph, o: VertexOrder
) -> tuple[bool, tuple[int, tuple[int, int]] | None]:
    """Check that each v_i is simplicial among v_i..v_n.

    The certificate is ``(i, (p, q))`` for the first failing position ``i``
    and the least non-adjacent pair of later neighbor positions.
    """
    o.check_matches(g)
    index = o.index
    later = [sorted(p for p in map(index.__getitem__, g.neighbors(v)) if p > index[v]) for v in o.sequence]
    nbrs = _closed_position_sets(g, index)
    # linear pass: later neighbors other than the first must be adjacent to it
    if all(not s or nbrs[s[0]].issuperset(s[1:]) for s in later):
        return True, None
    for i, succ in enumerate(later, 1):
        for x, p in enumerate(succ):
            for q in succ[x + 1:]:
                if q not in nbrs[p]:
                    return False, (i, (p, q))
    raise AssertionError("unreachable: parent test failed but every vertex is simplicial")


def _build(g: Graph, o: VertexOrder, unit: bool) -> TreeRepresentation:
    seq = o.sequence
    n = len(seq)
    if n == 0:
        raise ValueError("cannot build a host tree for an empty graph")
    index = o.index
    arcs: list[tuple[str, str | None, int]] = [(seq[-1], None, 0)]
    for j in range(n - 1, 0, -1):
        v = seq[j - 1]
        k = min((p for p in map(index.__getitem__, g.neighbors(v)) if p > j), default=n)
        arcs.append((v, seq[k - 1], 1 if unit else k - j))
    host = HostTree(arcs)
    assignment = {}
    for v in g.vertices:
        k = index[v]
        members = frozenset([v, *(u for u in g.neighbors(v) if index[u] < k)])
        assignment[v] = Subtree(members, v)
    return TreeRepresentation(host, assignment)


def seo_to_representation(g: Graph, o: VertexOrder, validate: bool = True) -> TreeRepresentation:
    """Weighted representation read off a strong elimination order.

    Each vertex is a host node hanging under its first later neighbor (or
    under v_n if it has none) with arc weight equal to the position gap, so
    v_j sits at depth n - j. The subtree of v_k consists of v_k and its
    earlier neighbors. Pass ``validate=False`` only for orders already known
    to be strong elimination orders.
    """
    o.check_matches(g)
    if validate:
        ok, quad = is_strong_elimination_order(g, o)
        if not ok:
            raise InvalidOrderError(f"not a strong elimination order: violating positions {quad}", quad)
    return _build(g, o, unit=False)


def peo_to_representation(g: Graph, o: VertexOrder, validate: bool = True) -> TreeRepresentation:
    """Unit-weight subtree representation from a perfect elimination order.

    Same parent rule as :func:`seo_to_representation`; the last vertex of
    each component other than v_n's hangs directly under v_n.
    """
    o.check_matches(g)
    if validate:
        ok, cert = is_perfect_elimination_order(g, o)
        if not ok:
            raise InvalidOrderError(f"not a perfect elimination order: {cert}", cert)
    return _build(g, o, unit=True)
