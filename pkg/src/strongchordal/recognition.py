"""Recognition procedures and exhaustive oracles for small graphs."""
from __future__ import annotations

from dataclasses import dataclass
from itertools import permutations

from .graph import Graph, VertexOrder, induced_subgraph, is_simple_vertex
from .orders import seo_violation


class SizeLimitExceeded(ValueError):
    pass


def greedy_simplicial_elimination(g: Graph) -> tuple[bool, VertexOrder | frozenset[str]]:
    """Peel off simplicial vertices, smallest label first.

    Returns ``(True, order)`` with a perfect elimination order, or
    ``(False, residual)`` with the vertex set left when no simplicial
    vertex remained.
    """
    alive = set(g.vertices)
    nbrs = {v: set(g.neighbors(v)) for v in g.vertices}
    out = []
    while alive:
        for v in sorted(alive):
            hood = sorted(nbrs[v])
            if all(b in nbrs[a] for i, a in enumerate(hood) for b in hood[i + 1:]):
                break
        else:
            return False, frozenset(alive)
        out.append(v)
        alive.remove(v)
        for u in nbrs.pop(v):
            nbrs[u].discard(v)
    return True, VertexOrder(out)


def greedy_simple_elimination(g: Graph) -> tuple[bool, tuple[str, ...] | frozenset[str]]:
    """Peel off simple vertices, smallest label first.

    Succeeds exactly on strongly chordal graphs. The returned sequence only
    certifies existence; it need not be a strong elimination order.
    """
    alive = set(g.vertices)
    out = []
    while alive:
        h = induced_subgraph(g, alive)
        v = next((v for v in sorted(alive) if is_simple_vertex(h, v)[0]), None)
        if v is None:
            return False, frozenset(alive)
        out.append(v)
        alive.remove(v)
    return True, tuple(out)


@dataclass(frozen=True)
class BruteForceResult:
    order: VertexOrder | None
    tried: int

    @property
    def found(self) -> bool:
        return self.order is not None


def brute_force_seo(g: Graph, limit: int = 8) -> BruteForceResult:
    """First strong elimination order in lexicographic permutation order.

    ``tried`` counts the permutations examined; when none works it equals n!.
    """
    n = len(g)
    if n > limit:
        raise SizeLimitExceeded(f"{n} vertices exceeds the brute-force limit of {limit}")
    labels = sorted(g.vertices)
    tried = 0
    for perm in permutations(labels):
        tried += 1
        index = {v: p for p, v in enumerate(perm, 1)}
        closed = [frozenset()] + [frozenset([p, *(index[u] for u in g.neighbors(v))]) for p, v in enumerate(perm, 1)]
        if seo_violation(closed) is None:
            return BruteForceResult(VertexOrder(perm), tried)
    return BruteForceResult(None, tried)


def _canonical_cycle(cycle: list[str]) -> tuple[str, ...]:
    i = cycle.index(min(cycle))
    rot = cycle[i:] + cycle[:i]
    if len(rot) > 2 and rot[-1] < rot[1]:
        rot = [rot[0], *reversed(rot[1:])]
    return tuple(rot)


def _chordless_cycle(g: Graph) -> tuple[str, ...] | None:
    """Some induced cycle of length at least 4, if any."""
    labels = sorted(g.vertices)
    for s in labels:
        path = [s]
        on_path = {s}

        def grow() -> list[str] | None:
            t = len(path)
            last = path[-1]
            for x in sorted(g.neighbors(last)):
                if x <= s or x in on_path:
                    continue
                touches = [a for a in range(t - 1) if x in g.neighbors(path[a])]
                if any(a > 0 for a in touches):
                    continue
                if touches:  # x closes the cycle back to s
                    if t >= 3:
                        return [*path, x]
                    continue
                path.append(x)
                on_path.add(x)
                found = grow()
                if found:
                    return found
                on_path.discard(path.pop())
            return None

        found = grow()
        if found:
            return _canonical_cycle(found)
    return None


def _even_cycle_without_odd_chord(g: Graph) -> tuple[str, ...] | None:
    """Some cycle of even length >= 6 all of whose chords join vertices at even distance.

    The cycle is grown as a path from its smallest label. Along an even
    cycle, two vertices are at odd distance exactly when their path indices
    differ by an odd amount, so such a chord kills every completion.
    """
    labels = sorted(g.vertices)
    for s in labels:
        path = [s]
        on_path = {s}

        def grow() -> list[str] | None:
            t = len(path)  # index the next vertex will take
            for x in sorted(g.neighbors(path[-1])):
                if x <= s or x in on_path:
                    continue
                nx = g.neighbors(x)
                if any((t - a) % 2 for a in range(1, t - 1) if path[a] in nx):
                    continue
                if s in nx and t >= 2:
                    if t % 2 and t >= 5 and path[1] < x:
                        return [*path, x]
                    if t % 2:
                        continue  # (s, x) would be an odd chord of any longer cycle
                path.append(x)
                on_path.add(x)
                found = grow()
                if found:
                    return found
                on_path.discard(path.pop())
            return None

        found = grow()
        if found:
            return _canonical_cycle(found)
    return None


def definitional_strongly_chordal(g: Graph, limit: int = 12) -> tuple[bool, tuple[str, ...] | None]:
    """Check strong chordality straight from the cycle definition.

    The graph must be chordal, and every even cycle of length at least 6
    must have a chord between vertices at odd distance along the cycle.
    Returns the offending cycle on failure: a chordless cycle for a
    non-chordal graph, otherwise an even cycle with only even chords.
    """
    n = len(g)
    if n > limit:
        raise SizeLimitExceeded(f"{n} vertices exceeds the definitional-check limit of {limit}")
    chordal, _ = greedy_simplicial_elimination(g)
    if not chordal:
        cycle = _chordless_cycle(g)
        assert cycle is not None
        return False, cycle
    cycle = _even_cycle_without_odd_chord(g)
    return cycle is None, cycle
