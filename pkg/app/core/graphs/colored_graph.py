import logging
from collections import defaultdict, deque
from typing import Any, Dict, FrozenSet, Iterable, List, NamedTuple, Optional, Sequence, Tuple

import numpy as np

from ..exceptions import InvalidGraphError, InvalidVertexError

logger = logging.getLogger(__name__)

Edge = Tuple[int, int, int]


class Bipartition(NamedTuple):
    """Two disjoint vertex sets covering the graph with no edge inside either."""
    part0: FrozenSet[int]
    part1: FrozenSet[int]

    def swapped(self) -> "Bipartition":
        return Bipartition(self.part1, self.part0)


def _label_key(label: Any) -> Tuple[int, Any]:
    if isinstance(label, bool):
        return (2, str(label))
    if isinstance(label, int):
        return (0, label)
    if isinstance(label, (frozenset, set)):
        return (1, tuple(sorted(label)))
    return (2, str(label))


class ColoredGraph:
    """
    Undirected graph on vertices 0..n-1 with optional loops and edge colours.

    Each unordered pair carries at most one edge; multiplicities and colour
    sets are encoded in the edge label. Labels may be any hashable value and
    are normalized to the colours 0..c-1 in sorted label order, the original
    label of colour i being ``labels[i]``.
    """

    def __init__(self, vertex_count: int, edges: Iterable[Sequence[Any]] = ()):
        n = int(vertex_count)
        if n < 1:
            raise InvalidGraphError(f"A graph needs at least one vertex, got {vertex_count}")

        labelled: Dict[Tuple[int, int], Any] = {}
        for edge in edges:
            if len(edge) == 2:
                u, v, label = edge[0], edge[1], 0
            elif len(edge) == 3:
                u, v, label = edge
            else:
                raise InvalidGraphError(f"Edge {edge!r} must be (u, v) or (u, v, colour)")
            u, v = int(u), int(v)
            for w in (u, v):
                if not 0 <= w < n:
                    raise InvalidGraphError(f"Edge endpoint {w} is outside 0..{n - 1}")
            key = (u, v) if u <= v else (v, u)
            if key in labelled and labelled[key] != label:
                raise InvalidGraphError(
                    f"Pair {key} given twice with colours {labelled[key]!r} and {label!r}"
                )
            labelled[key] = label

        self.labels: Tuple[Any, ...] = tuple(sorted(set(labelled.values()), key=_label_key))
        color_of = {label: i for i, label in enumerate(self.labels)}

        self.vertex_count = n
        self.edges: Tuple[Edge, ...] = tuple(
            sorted((u, v, color_of[label]) for (u, v), label in labelled.items())
        )
        self._adjacency: List[Dict[int, int]] = [dict() for _ in range(n)]
        for u, v, color in self.edges:
            self._adjacency[u][v] = color
            self._adjacency[v][u] = color

    # ------------------------------------------------------------------
    # Basic queries
    # ------------------------------------------------------------------
    @property
    def color_count(self) -> int:
        return len(self.labels)

    @property
    def edge_count(self) -> int:
        return len(self.edges)

    @property
    def loop_count(self) -> int:
        return sum(1 for u, v, _ in self.edges if u == v)

    @property
    def has_loops(self) -> bool:
        return self.loop_count > 0

    @property
    def is_uncolored(self) -> bool:
        return self.color_count <= 1

    @property
    def is_simple(self) -> bool:
        return self.is_uncolored and not self.has_loops

    def check_vertex(self, v: int) -> int:
        try:
            index = int(v)
        except (TypeError, ValueError):
            raise InvalidVertexError(f"{v!r} is not a vertex")
        if not 0 <= index < self.vertex_count:
            raise InvalidVertexError(f"Vertex {v} is outside 0..{self.vertex_count - 1}")
        return index

    def neighbors(self, v: int) -> List[Tuple[int, int]]:
        """
        Coloured neighbourhood of v; a loop at v contributes (v, colour).

        Args:
            v: Vertex index

        Returns:
            Sorted list of (neighbour, colour) pairs
        """
        v = self.check_vertex(v)
        return sorted(self._adjacency[v].items())

    def neighbor_map(self, v: int) -> Dict[int, int]:
        return dict(self._adjacency[self.check_vertex(v)])

    def has_edge(self, u: int, v: int) -> bool:
        return self.check_vertex(v) in self._adjacency[self.check_vertex(u)]

    def edge_color(self, u: int, v: int) -> Optional[int]:
        return self._adjacency[self.check_vertex(u)].get(self.check_vertex(v))

    def degree(self, v: int) -> int:
        return len(self._adjacency[self.check_vertex(v)])

    def ordered_adjacent_pairs(self) -> int:
        """Number of ordered pairs (u, v) with u adjacent to v; a loop counts once."""
        return sum(len(adj) for adj in self._adjacency)

    def adjacency_matrix(self, dtype: Any = np.int64) -> np.ndarray:
        matrix = np.zeros((self.vertex_count, self.vertex_count), dtype=dtype)
        for u, v, _ in self.edges:
            matrix[u, v] = 1
            matrix[v, u] = 1
        return matrix

    # ------------------------------------------------------------------
    # Structural predicates
    # ------------------------------------------------------------------
    def components(self) -> List[List[int]]:
        seen = [False] * self.vertex_count
        components = []
        for start in range(self.vertex_count):
            if seen[start]:
                continue
            seen[start] = True
            queue = deque([start])
            component = []
            while queue:
                v = queue.popleft()
                component.append(v)
                for w in self._adjacency[v]:
                    if not seen[w]:
                        seen[w] = True
                        queue.append(w)
            components.append(sorted(component))
        return components

    def is_connected(self) -> bool:
        return len(self.components()) == 1

    def bipartition(self) -> Optional[Bipartition]:
        """
        Two-colour the vertices, putting the smallest vertex of every component in part0.

        Returns:
            The bipartition, or None if the graph has a loop or an odd cycle
        """
        if self.has_loops:
            return None
        side = [-1] * self.vertex_count
        for start in range(self.vertex_count):
            if side[start] != -1:
                continue
            side[start] = 0
            queue = deque([start])
            while queue:
                v = queue.popleft()
                for w in self._adjacency[v]:
                    if side[w] == -1:
                        side[w] = 1 - side[v]
                        queue.append(w)
                    elif side[w] == side[v]:
                        return None
        part0 = frozenset(v for v in range(self.vertex_count) if side[v] == 0)
        part1 = frozenset(v for v in range(self.vertex_count) if side[v] == 1)
        return Bipartition(part0, part1)

    def is_bipartite(self) -> bool:
        return self.bipartition() is not None

    def twin_classes(self) -> List[List[int]]:
        """
        Classes of the relation "same coloured neighbourhood", singletons included.

        Neighbourhoods are compared literally, N(v) = N(w), without swapping v
        and w; a vertex belongs to its own neighbourhood only through a loop.
        """
        classes: Dict[FrozenSet[Tuple[int, int]], List[int]] = defaultdict(list)
        for v in range(self.vertex_count):
            classes[frozenset(self._adjacency[v].items())].append(v)
        return sorted(classes.values())

    def twins(self) -> List[Tuple[int, int]]:
        """
        All pairs v < w whose neighbourhoods agree as vertex -> colour maps.

        Two adjacent vertices are twins only if both carry loops whose colour
        equals the colour of the edge joining them.
        """
        pairs = []
        for cls in self.twin_classes():
            for i, v in enumerate(cls):
                for w in cls[i + 1:]:
                    pairs.append((v, w))
        return sorted(pairs)

    def is_twin_free(self) -> bool:
        return all(len(cls) == 1 for cls in self.twin_classes())

    # ------------------------------------------------------------------
    # Derived graphs
    # ------------------------------------------------------------------
    def relabel(self, images: Sequence[int]) -> "ColoredGraph":
        """Graph in which vertex v is renamed images[v]."""
        if sorted(images) != list(range(self.vertex_count)):
            raise InvalidGraphError("Relabelling must be a permutation of the vertices")
        return ColoredGraph(
            self.vertex_count,
            [(images[u], images[v], self.labels[c]) for u, v, c in self.edges],
        )

    def underlying_uncolored(self) -> "ColoredGraph":
        return ColoredGraph(self.vertex_count, [(u, v, 0) for u, v, _ in self.edges])

    def is_automorphism(self, images: Sequence[int], vertex_colors: Optional[Sequence[int]] = None) -> bool:
        """
        Check edge-by-edge that a vertex map preserves adjacency, edge colours
        and vertex colour classes.
        """
        n = self.vertex_count
        if len(images) != n or sorted(images) != list(range(n)):
            return False
        if vertex_colors is not None and any(vertex_colors[images[v]] != vertex_colors[v] for v in range(n)):
            return False
        for u, v, color in self.edges:
            if self._adjacency[images[u]].get(images[v]) != color:
                return False
        return True

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, ColoredGraph):
            return NotImplemented
        return self.vertex_count == other.vertex_count and self.edges == other.edges

    def __hash__(self) -> int:
        return hash((self.vertex_count, self.edges))

    def __repr__(self) -> str:
        return f"ColoredGraph(n={self.vertex_count}, edges={self.edge_count}, colors={self.color_count})"
