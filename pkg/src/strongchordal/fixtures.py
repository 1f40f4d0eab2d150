"""Small hand-checkable instances used by ``selftest`` and the test suite.

* FIG1: a strongly chordal graph on a, b, c, w, x, y, z whose order
  a, b, c, w, x, y, z is a strong elimination order.
* FIG2A / FIG2B: three subtrees each, showing that overshadowing is neither
  transitive (2a) nor acyclic (2b).
* FIG3: a compatible representation whose bottom-up order i, j, k, l is
  not a strong elimination order. ``l`` stands for the vertex usually
  written with a script ell.
"""
from __future__ import annotations

from .graph import Graph, VertexOrder, parse_graph
from .host_tree import HostTree, Subtree, make_subtree
from .representation import TreeRepresentation, parse_representation

FIG1_GRAPH = """\
c strongly chordal example, 7 vertices
p edge 7 12
v a
v b
v c
v w
v x
v y
v z
e a w
e a x
e b w
e b x
e c x
e c y
e w x
e w y
e w z
e x y
e x z
e y z
"""

FIG1_ORDER = "a,b,c,w,x,y,z"

FIG3_REPRESENTATION = """\
c compatible, but the bottom-up order i,j,k,l is not a strong elimination order
t 3 4
node r - 0
node a r 2
node b r 1
sub i a
sub j b
sub k r a b
sub l r a
"""

FIG3_GRAPH = """\
p edge 4 4
v i
v j
v k
v l
e i k
e i l
e j k
e k l
"""


def fig1_graph() -> Graph:
    return parse_graph(FIG1_GRAPH)


def fig1_order() -> VertexOrder:
    return VertexOrder.parse(FIG1_ORDER)


def fig3_representation() -> TreeRepresentation:
    return parse_representation(FIG3_REPRESENTATION)


def fig3_graph() -> Graph:
    return parse_graph(FIG3_GRAPH)


def fig2a() -> tuple[HostTree, list[Subtree]]:
    """Root R with unit-weight children L, M; T1={L}, T2={M}, T3={R, L}."""
    t = HostTree([("R", None, 0), ("L", "R", 1), ("M", "R", 1)])
    return t, [make_subtree(t, s) for s in ({"L"}, {"M"}, {"R", "L"})]


def fig2b() -> tuple[HostTree, list[Subtree]]:
    """Root R with unit-weight children C1..C3; Ti = {R, Ci}."""
    t = HostTree([("R", None, 0), ("C1", "R", 1), ("C2", "R", 1), ("C3", "R", 1)])
    return t, [make_subtree(t, {"R", f"C{i}"}) for i in (1, 2, 3)]
