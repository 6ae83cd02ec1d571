"""
Edge-transitivity of Cayley graphs on Z_p compared with the multiplicative coset criterion.
"""
import logging
from typing import FrozenSet, List

from sympy import isprime

from ...config.settings import settings
from ..cayley.cayley_graph import cayley_graph
from ..cayley.connection_set import ConnectionSet
from ..exceptions import InvalidParameterError
from ..groups.finite_group import make_abelian
from ..permutations.automorphism_search import automorphism_group
from ..permutations.edge_orbits import edge_orbits, is_edge_transitive
from ..reports import ChaoInstance, ChaoReport

logger = logging.getLogger(__name__)


def is_multiplicative_coset(S: FrozenSet[int], p: int) -> bool:
    """
    Whether S is a coset zH of a subgroup H of the units mod p.

    With z = min(S), this holds iff S z^-1 is closed under multiplication.
    """
    if not S or 0 in S:
        return False
    z_inv = pow(min(S), -1, p)
    H = {s * z_inv % p for s in S}
    return all(a * b % p in H for a in H for b in H)


def symmetric_sets(p: int) -> List[FrozenSet[int]]:
    """Every non-empty symmetric subset of Z_p minus 0, in bitmask order over the pairs {s, p - s}."""
    pairs = [(s, p - s) for s in range(1, (p - 1) // 2 + 1)]
    sets = []
    for mask in range(1, 1 << len(pairs)):
        sets.append(frozenset(x for i, pair in enumerate(pairs) if mask >> i & 1 for x in pair))
    return sets


def chao_check(p: int) -> ChaoReport:
    """
    For every non-empty symmetric S in Z_p, compare edge-transitivity of
    Cay(Z_p; S) with S being a coset of a multiplicative subgroup.

    Args:
        p: Odd prime, at most settings.CHAO_MAX_PRIME

    Returns:
        ChaoReport; ``passed`` iff the two predicates agree on every S
    """
    p = int(p)
    if p < 3 or not isprime(p):
        raise InvalidParameterError(f"p must be an odd prime, got {p}")
    if p > settings.CHAO_MAX_PRIME:
        raise InvalidParameterError(f"p = {p} exceeds CHAO_MAX_PRIME={settings.CHAO_MAX_PRIME}")

    G = make_abelian([p])
    instances = []
    for members in symmetric_sets(p):
        X = cayley_graph(G, ConnectionSet(G, members))
        group = automorphism_group(X)
        transitive = is_edge_transitive(X, group)
        coset = is_multiplicative_coset(members, p)
        instances.append(
            ChaoInstance(
                connection_set=sorted(members),
                edge_transitive=transitive,
                coset=coset,
                edge_orbits=len(edge_orbits(group, X)),
                agree=transitive == coset,
            )
        )

    disagreements = [instance for instance in instances if not instance.agree]
    for instance in disagreements:
        logger.error(f"Z_{p}, S = {instance.connection_set}: edge-transitive={instance.edge_transitive}, coset={instance.coset}")
    logger.info(f"Edge-transitivity classification on Z_{p}: {len(instances)} sets, {len(disagreements)} disagreements")
    return ChaoReport(
        p=p,
        total=len(instances),
        edge_transitive=sum(instance.edge_transitive for instance in instances),
        cosets=sum(instance.coset for instance in instances),
        disagreements=disagreements,
        instances=instances,
        passed=not disagreements,
    )
