"""
Brute-force automorphism enumeration, used as an oracle for small graphs.
"""
import logging
from typing import List, Optional, Sequence

from ...config.settings import settings
from ..exceptions import RefusalError
from ..graphs.colored_graph import ColoredGraph
from .permutation import Permutation

logger = logging.getLogger(__name__)


def naive_automorphisms(
    X: ColoredGraph,
    vertex_colors: Optional[Sequence[int]] = None,
    max_vertices: Optional[int] = None,
) -> List[Permutation]:
    """
    Enumerate every colour-preserving automorphism by backtracking over partial maps.

    Args:
        X: Graph with at most ``max_vertices`` vertices
        vertex_colors: Optional vertex colouring to preserve
        max_vertices: Override for settings.NAIVE_MAX_VERTICES

    Returns:
        All automorphisms in lexicographic order of their image tuples
    """
    limit = max_vertices if max_vertices is not None else settings.NAIVE_MAX_VERTICES
    n = X.vertex_count
    if n > limit:
        raise RefusalError(f"Brute-force enumeration is limited to {limit} vertices, got {n}")

    adjacency = [X.neighbor_map(v) for v in range(n)]
    images: List[int] = []
    used = [False] * n
    found: List[Permutation] = []

    def consistent(v: int, w: int) -> bool:
        if len(adjacency[v]) != len(adjacency[w]):
            return False
        if vertex_colors is not None and vertex_colors[v] != vertex_colors[w]:
            return False
        if adjacency[v].get(v) != adjacency[w].get(w):
            return False
        for u in range(v):
            if adjacency[v].get(u) != adjacency[w].get(images[u]):
                return False
        return True

    def extend(v: int) -> None:
        if v == n:
            found.append(Permutation(images))
            return
        for w in range(n):
            if used[w] or not consistent(v, w):
                continue
            used[w] = True
            images.append(w)
            extend(v + 1)
            images.pop()
            used[w] = False

    extend(0)
    logger.debug(f"Naive enumeration on {X!r} found {len(found)} automorphisms")
    return found
