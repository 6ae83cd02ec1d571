"""
Small named graph families and the graph specifier accepted by the CLI:
C5, P4, K7, K2,3, S3, E4, g6:<graph6>.
"""
import logging
import re
from typing import List, Tuple

from ..exceptions import GraphParseError, InvalidParameterError
from .colored_graph import ColoredGraph
from .graph_formats import graph6_read

logger = logging.getLogger(__name__)

_SPEC_RE = re.compile(r"([cpkse])(\d+)(?:,(\d+))?")


def cycle(n: int) -> ColoredGraph:
    if n < 3:
        raise InvalidParameterError(f"A cycle needs at least 3 vertices, got {n}")
    return ColoredGraph(n, [(i, (i + 1) % n) for i in range(n)])


def path(n: int) -> ColoredGraph:
    """Path 0 - 1 - ... - (n-1)."""
    if n < 1:
        raise InvalidParameterError(f"A path needs at least 1 vertex, got {n}")
    return ColoredGraph(n, [(i, i + 1) for i in range(n - 1)])


def complete(n: int) -> ColoredGraph:
    if n < 1:
        raise InvalidParameterError(f"A complete graph needs at least 1 vertex, got {n}")
    return ColoredGraph(n, [(i, j) for i in range(n) for j in range(i + 1, n)])


def complete_bipartite(a: int, b: int) -> ColoredGraph:
    """Parts {0..a-1} and {a..a+b-1}."""
    if a < 1 or b < 1:
        raise InvalidParameterError(f"Both parts of K{a},{b} need at least one vertex")
    return ColoredGraph(a + b, [(i, a + j) for i in range(a) for j in range(b)])


def star(k: int) -> ColoredGraph:
    """Centre 0 with leaves 1..k."""
    return complete_bipartite(1, k)


def empty(n: int) -> ColoredGraph:
    if n < 1:
        raise InvalidParameterError(f"A graph needs at least 1 vertex, got {n}")
    return ColoredGraph(n, [])


def parse_graph_spec(text: str) -> ColoredGraph:
    """
    Build a graph from a short specifier.

    Args:
        text: One of Cn, Pn, Kn, Ka,b, Sk, En or g6:<graph6>

    Returns:
        The graph
    """
    raw = (text or "").strip()
    if raw.lower().startswith("g6:"):
        return graph6_read(raw[3:])

    spec = re.sub(r"\s+", "", raw).lower()
    match = _SPEC_RE.fullmatch(spec)
    if match is None:
        raise GraphParseError(f"Unknown graph specifier {text!r}")
    family, first, second = match.group(1), int(match.group(2)), match.group(3)
    if second is not None and family != "k":
        raise GraphParseError(f"Only K accepts two sizes, got {text!r}")

    if family == "c":
        return cycle(first)
    if family == "p":
        return path(first)
    if family == "k":
        return complete_bipartite(first, int(second)) if second is not None else complete(first)
    if family == "s":
        return star(first)
    return empty(first)


def _alternating_cycle(n: int) -> ColoredGraph:
    return ColoredGraph(n, [(i, (i + 1) % n, i % 2) for i in range(n)])


def _with_loops(X: ColoredGraph, vertices) -> ColoredGraph:
    return ColoredGraph(X.vertex_count, list(X.edges) + [(v, v, 0) for v in vertices])


def oracle_corpus() -> List[Tuple[str, ColoredGraph]]:
    """
    Thirty small graphs (at most 8 vertices) on which the search engine is
    compared with exhaustive enumeration: paths, cycles, stars, coloured
    cycles and graphs with loops.
    """
    corpus: List[Tuple[str, ColoredGraph]] = []
    corpus += [(f"P{n}", path(n)) for n in range(1, 9)]
    corpus += [(f"C{n}", cycle(n)) for n in range(3, 9)]
    corpus += [(f"S{k}", star(k)) for k in range(1, 8)]
    corpus += [(f"C{n}-alternating", _alternating_cycle(n)) for n in (4, 6, 8)]
    corpus.append(("C5-one-colored-edge", ColoredGraph(5, [(0, 1, 1), (1, 2, 0), (2, 3, 0), (3, 4, 0), (4, 0, 0)])))
    corpus.append(("C3-loop", _with_loops(cycle(3), [0])))
    corpus.append(("P3-end-loops", _with_loops(path(3), [0, 2])))
    corpus.append(("C4-all-loops", _with_loops(cycle(4), range(4))))
    corpus.append(("K4-loop", _with_loops(complete(4), [0])))
    corpus.append(("C5-two-loops", _with_loops(cycle(5), [0, 2])))
    return corpus
