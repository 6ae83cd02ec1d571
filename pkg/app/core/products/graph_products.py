"""
Graph products with documented vertex numbering.

direct_product and cartesian_product number (x, y) as x*|V(Y)| + y;
double_cover numbers (v, i) as v + i*|V(X)|.
"""
import logging
from typing import List

from ..exceptions import UnsupportedFeatureError
from ..graphs.colored_graph import ColoredGraph

logger = logging.getLogger(__name__)


def _require_uncolored(X: ColoredGraph, operation: str) -> None:
    if not X.is_uncolored:
        raise UnsupportedFeatureError(f"{operation} is defined for uncoloured graphs, got {X.color_count} colours")


def direct_product(X: ColoredGraph, Y: ColoredGraph) -> ColoredGraph:
    """
    (x1, y1) ~ (x2, y2) iff x1 ~ x2 in X and y1 ~ y2 in Y.

    Args:
        X: Uncoloured graph
        Y: Uncoloured graph

    Returns:
        X x Y on |V(X)|*|V(Y)| vertices
    """
    _require_uncolored(X, "The direct product")
    _require_uncolored(Y, "The direct product")
    m = Y.vertex_count
    edges = []
    for x1, x2, _ in X.edges:
        for y1, y2, _ in Y.edges:
            edges.append((x1 * m + y1, x2 * m + y2))
            edges.append((x1 * m + y2, x2 * m + y1))
    return ColoredGraph(X.vertex_count * m, edges)


def double_cover(X: ColoredGraph) -> ColoredGraph:
    """
    Canonical bipartite double cover BX.

    (v, 0) ~ (w, 1) iff v ~ w in X, with the colour of vw; a loop at v
    becomes the edge (v, 0)-(v, 1).
    """
    n = X.vertex_count
    edges = []
    for v, w, color in X.edges:
        label = X.labels[color]
        edges.append((v, w + n, label))
        edges.append((w, v + n, label))
    return ColoredGraph(2 * n, edges)


def cartesian_product(X: ColoredGraph, Y: ColoredGraph) -> ColoredGraph:
    """(x1, y1) ~ (x2, y2) iff x1 = x2 and y1 ~ y2, or x1 ~ x2 and y1 = y2."""
    _require_uncolored(X, "The Cartesian product")
    _require_uncolored(Y, "The Cartesian product")
    m = Y.vertex_count
    edges = []
    for x in range(X.vertex_count):
        for y1, y2, _ in Y.edges:
            edges.append((x * m + y1, x * m + y2))
    for x1, x2, _ in X.edges:
        for y in range(m):
            edges.append((x1 * m + y, x2 * m + y))
    return ColoredGraph(X.vertex_count * m, edges)


def coordinate_swap(nx: int, ny: int) -> List[int]:
    """Images of x*ny + y under (x, y) -> (y, x), i.e. y*nx + x."""
    return [y * nx + x for x in range(nx) for y in range(ny)]
