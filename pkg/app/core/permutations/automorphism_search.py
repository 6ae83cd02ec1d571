"""
Automorphism groups of coloured graphs by individualization and refinement.

The search follows one "first path" of individualizations down to a discrete
partition. Working from the deepest level upwards, it then looks, for every
vertex of the level's target cell that is not yet known to lie in the orbit
of the first-path choice, for a leaf of the corresponding subtree that
matches the first leaf. Every matching leaf yields a candidate permutation
which is admitted only after an explicit edge-by-edge check.
"""
import logging
from typing import List, Optional, Sequence

from ..graphs.colored_graph import ColoredGraph
from ..exceptions import InvalidParameterError
from .perm_group import PermGroup
from .permutation import Permutation
from .refinement import (
    Adjacency,
    Certificate,
    Partition,
    adjacency_lists,
    certificate,
    individualize,
    initial_partition,
    is_discrete,
    refine,
    target_cell,
)

logger = logging.getLogger(__name__)


def is_automorphism(X: ColoredGraph, p: Permutation, vertex_colors: Optional[Sequence[int]] = None) -> bool:
    """
    Check that p preserves adjacency, edge colours and vertex colour classes.

    Args:
        X: Graph
        p: Candidate permutation of the vertices
        vertex_colors: Optional colour per vertex that must be preserved

    Returns:
        True iff p is a colour-preserving automorphism of X
    """
    if p.degree != X.vertex_count:
        return False
    return X.is_automorphism(p.images, vertex_colors)


def _orbit_of(point: int, generators: List[Permutation]) -> set:
    orbit = {point}
    frontier = [point]
    while frontier:
        a = frontier.pop()
        for g in generators:
            b = g(a)
            if b not in orbit:
                orbit.add(b)
                frontier.append(b)
    return orbit


class AutomorphismSearch:
    """
    One search for generators of Aut(X) fixing the given vertex colouring.

    Args:
        X: Graph to search
        vertex_colors: Optional vertex colouring to preserve
    """

    def __init__(self, X: ColoredGraph, vertex_colors: Optional[Sequence[int]] = None):
        if vertex_colors is not None and len(vertex_colors) != X.vertex_count:
            raise InvalidParameterError(
                f"vertex_colors has length {len(vertex_colors)}, the graph has {X.vertex_count} vertices"
            )
        self.X = X
        self.vertex_colors = list(vertex_colors) if vertex_colors is not None else None
        self.adjacency: Adjacency = adjacency_lists(X)
        self.nodes_visited = 0
        self.generators: List[Permutation] = []

        self._path: List[Partition] = []
        self._certificates: List[Certificate] = []
        self._targets: List[int] = []
        self._choices: List[int] = []
        self._first_leaf: List[int] = []

    def _refine(self, cells: Partition) -> Partition:
        self.nodes_visited += 1
        return refine(self.X, cells, self.adjacency)

    def _follow_first_path(self) -> None:
        cells = self._refine(initial_partition(self.X, self.vertex_colors))
        while True:
            self._path.append(cells)
            self._certificates.append(certificate(self.X, cells, self.adjacency))
            target = target_cell(cells)
            if target is None:
                break
            v = min(cells[target])
            self._targets.append(target)
            self._choices.append(v)
            cells = self._refine(individualize(cells, target, v))
        self._first_leaf = [cell[0] for cell in cells]

    def _leaf_permutation(self, leaf: Partition) -> Permutation:
        images = [0] * self.X.vertex_count
        for first, cell in zip(self._first_leaf, leaf):
            images[first] = cell[0]
        return Permutation(images)

    def _match_below(self, cells: Partition, depth: int) -> Optional[Permutation]:
        """Depth-first search under ``cells`` for a leaf equivalent to the first leaf."""
        if certificate(self.X, cells, self.adjacency) != self._certificates[depth]:
            return None
        if is_discrete(cells):
            candidate = self._leaf_permutation(cells)
            if is_automorphism(self.X, candidate, self.vertex_colors):
                return candidate
            return None
        target = self._targets[depth]
        for w in sorted(cells[target]):
            found = self._match_below(self._refine(individualize(cells, target, w)), depth + 1)
            if found is not None:
                return found
        return None

    def run(self) -> PermGroup:
        self._follow_first_path()
        for level in range(len(self._targets) - 1, -1, -1):
            cells = self._path[level]
            target = self._targets[level]
            choice = self._choices[level]
            orbit = _orbit_of(choice, self.generators)
            for w in sorted(cells[target]):
                if w in orbit:
                    continue
                found = self._match_below(self._refine(individualize(cells, target, w)), level + 1)
                if found is None:
                    continue
                logger.debug(f"Level {level}: {choice} -> {w} via {found.cycle_notation()}")
                self.generators.append(found)
                orbit = _orbit_of(choice, self.generators)

        group = PermGroup(self.X.vertex_count, self.generators)
        logger.debug(
            f"Automorphism search on {self.X!r}: {len(self.generators)} generators, "
            f"order {group.order}, {self.nodes_visited} refinements"
        )
        return group


def automorphism_group(X: ColoredGraph, vertex_colors: Optional[Sequence[int]] = None) -> PermGroup:
    """
    Compute the group of permutations preserving adjacency, edge colours and
    the vertex colouring.

    Args:
        X: Graph
        vertex_colors: Optional colour per vertex

    Returns:
        PermGroup with verified generators and exact order
    """
    return AutomorphismSearch(X, vertex_colors).run()
