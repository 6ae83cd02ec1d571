import logging
from typing import Dict, List, Optional, Tuple

from ..graphs.colored_graph import ColoredGraph
from .automorphism_search import automorphism_group
from .perm_group import PermGroup

logger = logging.getLogger(__name__)

EdgeKey = Tuple[int, int]


def edge_orbits(group: PermGroup, X: ColoredGraph) -> List[List[EdgeKey]]:
    """
    Orbits of the unordered edges of X under the generators of ``group``.

    Args:
        group: Aut(X) or a subgroup of it
        X: Graph whose edges are acted on

    Returns:
        Orbits as sorted lists of (u, v) with u <= v, ordered by their first edge
    """
    keys = [(u, v) for u, v, _ in X.edges]
    parent: Dict[EdgeKey, EdgeKey] = {key: key for key in keys}

    def find(key: EdgeKey) -> EdgeKey:
        while parent[key] != key:
            parent[key] = parent[parent[key]]
            key = parent[key]
        return key

    for g in group.generators:
        for u, v in keys:
            a, b = g(u), g(v)
            image = (a, b) if a <= b else (b, a)
            root_a, root_b = find((u, v)), find(image)
            if root_a != root_b:
                parent[max(root_a, root_b)] = min(root_a, root_b)

    orbits: Dict[EdgeKey, List[EdgeKey]] = {}
    for key in keys:
        orbits.setdefault(find(key), []).append(key)
    return sorted(sorted(orbit) for orbit in orbits.values())


def is_edge_transitive(X: ColoredGraph, group: Optional[PermGroup] = None) -> bool:
    """True iff the non-loop edges of X form exactly one orbit under Aut(X)."""
    group = group or automorphism_group(X)
    orbits = [orbit for orbit in edge_orbits(group, X) if orbit[0][0] != orbit[0][1]]
    return len(orbits) == 1
