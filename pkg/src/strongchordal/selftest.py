"""Built-in example checks behind ``strongchordal selftest``."""
from __future__ import annotations

from collections.abc import Callable

from . import fixtures
from .extraction import extract_strong_elimination_order
from .generators import generate_sun
from .graph import VertexOrder
from .host_tree import overshadows
from .orders import is_perfect_elimination_order, is_strong_elimination_order, seo_to_representation
from .recognition import (
    brute_force_seo,
    definitional_strongly_chordal,
    greedy_simple_elimination,
    greedy_simplicial_elimination,
)
from .representation import bottom_up_order, intersection_graph, is_compatible_representation


def _fig1() -> bool:
    g, o = fixtures.fig1_graph(), fixtures.fig1_order()
    if not (is_strong_elimination_order(g, o)[0] and is_perfect_elimination_order(g, o)[0]):
        return False
    r = seo_to_representation(g, o)
    n = len(o)
    depths_ok = all(r.host.depth[v] == n - j for j, v in enumerate(o, 1))
    order = extract_strong_elimination_order(r)
    return (
        depths_ok
        and intersection_graph(r) == g
        and is_compatible_representation(r)[0]
        and is_strong_elimination_order(g, order)[0]
    )


def _fig2() -> bool:
    t, (t1, t2, t3) = fixtures.fig2a()
    a = overshadows(t, t1, t3)
    table_a = (
        overshadows(t, t1, t2).holds
        and overshadows(t, t2, t3).holds
        and not a.holds
        and a.witness == "R"
        and overshadows(t, t3, t1).holds
    )
    t, (t1, t2, t3) = fixtures.fig2b()
    cyc = [overshadows(t, p, q) for p, q in ((t1, t2), (t2, t3), (t3, t1))]
    return table_a and all(v.holds and v.cutoff == 0 for v in cyc)


def _fig3() -> bool:
    r, g = fixtures.fig3_representation(), fixtures.fig3_graph()
    bu = bottom_up_order(r)
    extracted = extract_strong_elimination_order(r)
    return (
        bu == VertexOrder("ijkl")
        and is_strong_elimination_order(g, bu) == (False, (1, 2, 3, 4))
        and is_strong_elimination_order(g, extracted)[0]
    )


def _sun3() -> bool:
    g = generate_sun(3)
    stuck_ok, residual = greedy_simple_elimination(g)
    bf = brute_force_seo(g)
    definitional, cycle = definitional_strongly_chordal(g)
    return (
        not stuck_ok
        and len(residual) == 6
        and not bf.found
        and bf.tried == 720
        and not definitional
        and cycle is not None
        and len(cycle) == 6
        and greedy_simplicial_elimination(g)[0]
    )


CHECKS: dict[str, Callable[[], bool]] = {
    "figure-1 round trip": _fig1,
    "figure-2 overshadow tables": _fig2,
    "figure-3 bottom-up vs extracted": _fig3,
    "3-sun oracles": _sun3,
}


def run_checks() -> list[tuple[str, bool]]:
    return [(name, bool(check())) for name, check in CHECKS.items()]
