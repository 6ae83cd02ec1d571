import logging
from typing import Dict, FrozenSet, List, Tuple

from ..exceptions import InvalidConnectionSetError
from ..graphs.colored_graph import ColoredGraph
from ..groups.finite_group import FiniteGroup
from ..permutations.permutation import Permutation
from .connection_set import ConnectionSet

logger = logging.getLogger(__name__)


def cayley_graph(G: FiniteGroup, S: ConnectionSet) -> ColoredGraph:
    """
    Build Cay(G; S): vertices are the elements of G and g ~ h whenever g = s*h for some s in S.

    The edge label is the union of the colour sets of every s producing the
    pair, so colour multiplicity survives as part of the label. The identity
    in S puts a loop at every vertex.

    Args:
        G: Group
        S: Connection set over G

    Returns:
        The coloured Cayley graph; edge labels are frozensets of colours
    """
    if S.group is not G:
        raise InvalidConnectionSetError(f"Connection set over {S.group.name} used with {G.name}")

    labels: Dict[Tuple[int, int], FrozenSet[int]] = {}
    for h in G.elements:
        for s in S.sorted_members:
            g = int(G.table[s, h])
            key = (g, h) if g <= h else (h, g)
            labels[key] = labels.get(key, frozenset()) | S.colors[s]

    X = ColoredGraph(G.order, [(u, v, label) for (u, v), label in labels.items()])
    logger.debug(f"Built Cay({G.name}; {S.names()}) with {X.edge_count} edges and {X.color_count} colours")
    return X


def translations(G: FiniteGroup) -> List[Permutation]:
    """The right translations v -> v*g, one per element g, each an automorphism of every Cay(G; S)."""
    return [Permutation([int(G.table[v, g]) for v in G.elements]) for g in G.elements]
