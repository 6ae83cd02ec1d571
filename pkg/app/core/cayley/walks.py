"""
Exact walk counting and the walk-count congruence behind the scaling lemma.
"""
import logging
from collections import Counter

import numpy as np
from sympy import isprime

from ..exceptions import InvalidParameterError, PreconditionError
from ..graphs.colored_graph import ColoredGraph
from ..groups.finite_group import FiniteGroup
from ..reports import WalkModReport
from .cayley_graph import cayley_graph
from .connection_set import ConnectionSet

logger = logging.getLogger(__name__)


def walk_count_matrix(X: ColoredGraph, length: int) -> np.ndarray:
    """
    A^length over Python integers, so no count overflows.

    Colours are ignored and a loop contributes one step.
    """
    if int(length) < 1:
        raise InvalidParameterError(f"Walk length must be at least 1, got {length}")
    A = X.adjacency_matrix(dtype=object)
    return np.linalg.matrix_power(A, int(length))


def walk_count(X: ColoredGraph, v: int, w: int, length: int) -> int:
    """
    Number of walks of the given length from v to w.

    Args:
        X: Graph
        v: Start vertex
        w: End vertex
        length: Positive walk length

    Returns:
        Exact count
    """
    v, w = X.check_vertex(v), X.check_vertex(w)
    return int(walk_count_matrix(X, length)[v, w])


def power_map_injective(S: ConnectionSet, k: int) -> bool:
    images = [S.group.power(s, k) for s in S.members]
    return len(set(images)) == len(images)


def prime_multiplicity_condition(S: ConnectionSet, p: int) -> bool:
    """For every s in S, |{t in S : ps = pt}| is not divisible by p."""
    fibres = Counter(S.group.power(s, p) for s in S.members)
    return all(size % p != 0 for size in fibres.values())


def walk_count_mod_check(G: FiniteGroup, S1: ConnectionSet, p: int) -> WalkModReport:
    """
    Compare "number of walks of length p is nonzero mod p" with adjacency in Cay(G; pS1)
    for every ordered vertex pair.

    Args:
        G: Abelian group
        S1: Connection set where no fibre of s -> ps has size divisible by p
        p: Prime

    Returns:
        Report listing every disagreeing pair
    """
    p = int(p)
    if not isprime(p):
        raise InvalidParameterError(f"Walk length {p} is not prime")
    if not G.is_abelian:
        raise PreconditionError(f"{G.name} is not abelian")
    if not prime_multiplicity_condition(S1, p):
        raise PreconditionError(f"A fibre of s -> {p}s on {S1.names()} has size divisible by {p}")

    X = cayley_graph(G, S1)
    Y = cayley_graph(G, S1.scaled(p))
    counts = walk_count_matrix(X, p)

    violations = []
    for v in range(G.order):
        for w in range(G.order):
            if (counts[v, w] % p != 0) != Y.has_edge(v, w):
                violations.append([v, w])

    passed = not violations
    if passed:
        logger.debug(f"Walk congruence holds on all {G.order ** 2} pairs of Cay({G.name}; {S1.names()}), p={p}")
    else:
        logger.error(f"Walk congruence fails on {len(violations)} pairs of Cay({G.name}; {S1.names()}), p={p}")
    return WalkModReport(
        group=G.name,
        connection_set=S1.names(),
        p=p,
        scaled_set=S1.scaled(p).names(),
        pairs_checked=G.order ** 2,
        violations=violations,
        passed=passed,
    )
