"""
Text formats for graphs: graph6 for simple graphs and a JSON document for
graphs with loops or edge colours.
"""
import logging
from typing import List

import networkx as nx
from pydantic import BaseModel, Field, ValidationError

from ...config.settings import settings
from ..exceptions import GraphParseError, InvalidGraphError, UnsupportedFeatureError
from .colored_graph import ColoredGraph

logger = logging.getLogger(__name__)

GRAPH6_HEADER = ">>graph6<<"


class GraphDocument(BaseModel):
    """JSON form of a coloured graph."""
    n: int = Field(..., ge=1, description="Number of vertices")
    edges: List[List[int]] = Field(default_factory=list, description="Edges as [u, v] or [u, v, colour]")


def strip_graph6_header(text: str) -> str:
    s = (text or "").strip()
    if s.startswith(GRAPH6_HEADER):
        s = s[len(GRAPH6_HEADER):].strip()
    return s


def graph6_read(text: str) -> ColoredGraph:
    """
    Parse a graph6 string into an uncoloured ColoredGraph.

    Args:
        text: graph6 text, optionally with the ">>graph6<<" header and trailing newline

    Returns:
        The decoded simple graph
    """
    s = strip_graph6_header(text)
    if not s:
        raise GraphParseError("Empty graph6 string")
    try:
        G = nx.from_graph6_bytes(s.encode("ascii"))
    except (nx.NetworkXError, ValueError, UnicodeEncodeError) as e:
        raise GraphParseError(f"Malformed graph6 string {s!r}: {e}")

    n = G.number_of_nodes()
    if n < 1:
        raise GraphParseError("graph6 string encodes the empty graph on zero vertices")
    if n > settings.GRAPH6_MAX_VERTICES:
        raise GraphParseError(f"graph6 graphs are limited to {settings.GRAPH6_MAX_VERTICES} vertices, got {n}")
    return ColoredGraph(n, [(u, v, 0) for u, v in G.edges()])


def to_networkx(X: ColoredGraph) -> nx.Graph:
    G = nx.Graph()
    G.add_nodes_from(range(X.vertex_count))
    for u, v, color in X.edges:
        G.add_edge(u, v, color=color)
    return G


def graph6_write(X: ColoredGraph) -> str:
    """
    Encode a simple graph as graph6 (no header, no newline).

    Raises:
        UnsupportedFeatureError: the graph has loops or more than one edge colour
    """
    if X.has_loops:
        raise UnsupportedFeatureError("graph6 cannot encode loops")
    if not X.is_uncolored:
        raise UnsupportedFeatureError(f"graph6 cannot encode {X.color_count} edge colours")
    if X.vertex_count > settings.GRAPH6_MAX_VERTICES:
        raise UnsupportedFeatureError(
            f"graph6 output is limited to {settings.GRAPH6_MAX_VERTICES} vertices, got {X.vertex_count}"
        )
    data = nx.to_graph6_bytes(to_networkx(X), header=False)
    return data.decode("ascii").strip()


def graph_json_read(text: str) -> ColoredGraph:
    try:
        document = GraphDocument.model_validate_json(text)
    except ValidationError as e:
        raise GraphParseError(f"Malformed JSON graph: {e.error_count()} validation error(s)")
    for edge in document.edges:
        if len(edge) not in (2, 3) or any(value < 0 for value in edge):
            raise GraphParseError(f"Edge {edge} must be [u, v] or [u, v, colour] with non-negative entries")
    try:
        return ColoredGraph(document.n, [tuple(edge) for edge in document.edges])
    except InvalidGraphError as e:
        raise GraphParseError(str(e))


def graph_json_write(X: ColoredGraph) -> str:
    document = GraphDocument(n=X.vertex_count, edges=[[u, v, c] for u, v, c in X.edges])
    return document.model_dump_json()
