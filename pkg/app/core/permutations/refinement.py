"""
Ordered partitions of the vertex set and equitable refinement.

Every function here is label-invariant: if a colour-preserving automorphism
maps one ordered partition onto another, it maps their refinements and
certificates onto each other as well.
"""
from collections import defaultdict
from typing import Dict, List, Optional, Sequence, Tuple

from ..graphs.colored_graph import ColoredGraph

Cell = List[int]
Partition = List[Cell]
Certificate = Tuple[Tuple[int, ...], Tuple[Tuple[Tuple[int, int], ...], ...]]


def initial_partition(X: ColoredGraph, vertex_colors: Optional[Sequence[int]] = None) -> Partition:
    """One cell per vertex colour, cells ordered by colour value."""
    if vertex_colors is None:
        return [list(range(X.vertex_count))]
    classes: Dict[int, Cell] = defaultdict(list)
    for v in range(X.vertex_count):
        classes[vertex_colors[v]].append(v)
    return [classes[color] for color in sorted(classes)]


def _cell_index(cells: Partition) -> List[int]:
    index = [0] * sum(len(cell) for cell in cells)
    for i, cell in enumerate(cells):
        for v in cell:
            index[v] = i
    return index


Adjacency = List[List[Tuple[int, int]]]


def adjacency_lists(X: ColoredGraph) -> Adjacency:
    return [X.neighbors(v) for v in range(X.vertex_count)]


def _signature(adjacency: Adjacency, v: int, cell_of: List[int]) -> Tuple[Tuple[int, int], ...]:
    return tuple(sorted((cell_of[w], color) for w, color in adjacency[v]))


def refine(X: ColoredGraph, cells: Partition, adjacency: Optional[Adjacency] = None) -> Partition:
    """
    Split cells by the multiset of (neighbour cell, edge colour) until no cell splits.

    Fragments of a cell are kept in place and ordered by signature.

    Args:
        X: Graph to refine against
        cells: Ordered partition of the vertices
        adjacency: Precomputed adjacency_lists(X)

    Returns:
        The coarsest equitable ordered partition finer than ``cells``
    """
    if adjacency is None:
        adjacency = adjacency_lists(X)
    while True:
        cell_of = _cell_index(cells)
        refined: Partition = []
        changed = False
        for cell in cells:
            if len(cell) == 1:
                refined.append(cell)
                continue
            groups: Dict[Tuple[Tuple[int, int], ...], Cell] = defaultdict(list)
            for v in cell:
                groups[_signature(adjacency, v, cell_of)].append(v)
            if len(groups) > 1:
                changed = True
            refined.extend(groups[signature] for signature in sorted(groups))
        cells = refined
        if not changed:
            return cells


def individualize(cells: Partition, target: int, v: int) -> Partition:
    cell = cells[target]
    return cells[:target] + [[v], [w for w in cell if w != v]] + cells[target + 1:]


def target_cell(cells: Partition) -> Optional[int]:
    """Index of the first smallest non-singleton cell, or None when the partition is discrete."""
    best = None
    for i, cell in enumerate(cells):
        if len(cell) > 1 and (best is None or len(cell) < len(cells[best])):
            best = i
    return best


def is_discrete(cells: Partition) -> bool:
    return all(len(cell) == 1 for cell in cells)


def certificate(X: ColoredGraph, cells: Partition, adjacency: Optional[Adjacency] = None) -> Certificate:
    """Cell sizes plus the quotient structure of an equitable partition."""
    cell_of = _cell_index(cells)
    sizes = tuple(len(cell) for cell in cells)
    if adjacency is None:
        adjacency = adjacency_lists(X)
    quotient = tuple(_signature(adjacency, cell[0], cell_of) for cell in cells)
    return sizes, quotient
