"""
Scaling a connection set by an integer k and the checks built around it:
the injectivity hypotheses, the generator-by-generator lemma check, the
double-cover instance with k = |G| + 1, and the prime-by-prime chain.
"""
import logging
import math
from typing import List, Tuple

from sympy import factorint, isprime

from ..exceptions import InvalidConnectionSetError, InvalidParameterError, PreconditionError
from ..groups.finite_group import FiniteGroup, direct_product_group, make_abelian
from ..permutations.automorphism_search import automorphism_group, is_automorphism
from ..reports import (
    GeneratorCheck,
    PermutationModel,
    ScalingChainReport,
    ScalingHypothesisReport,
    ScalingLemmaReport,
)
from .cayley_graph import cayley_graph
from .connection_set import ConnectionSet
from .walks import power_map_injective, prime_multiplicity_condition, walk_count_mod_check

logger = logging.getLogger(__name__)


def scaled_set(S: ConnectionSet, k: int) -> ConnectionSet:
    """
    Compute kS = {s^k : s in S}.

    Args:
        S: Connection set
        k: Any integer

    Returns:
        kS with colour(t) the union of the colour sets of every preimage of t
    """
    return S.scaled(int(k))


def _collisions(S: ConnectionSet, k: int) -> List[Tuple[int, int]]:
    pairs = set()
    for members in S.color_classes().values():
        for i, s in enumerate(members):
            for t in members[i + 1:]:
                if S.group.power(s, k) == S.group.power(t, k):
                    pairs.add((s, t))
    return sorted(pairs)


def scaling_hypothesis(S: ConnectionSet, k: int) -> ScalingHypothesisReport:
    """
    Evaluate every injectivity condition on s -> ks.

    The colourwise condition decides ``holds``; the gcd condition is the
    sufficient test for all S and the prime-multiplicity condition is
    reported for prime k without being used.
    """
    k = int(k)
    G = S.group
    collisions = _collisions(S, k)
    prime_multiplicity = prime_multiplicity_condition(S, k) if k > 1 and isprime(k) else None
    return ScalingHypothesisReport(
        k=k,
        group_order=G.order,
        gcd_condition=math.gcd(k, G.order) == 1,
        injective=power_map_injective(S, k),
        colorwise_injective=not collisions,
        prime_multiplicity=prime_multiplicity,
        collisions=[[G.name_of(s), G.name_of(t)] for s, t in collisions],
        holds=not collisions,
    )


def scaling_hypothesis_holds(S: ConnectionSet, k: int) -> bool:
    return scaling_hypothesis(S, k).holds


def verify_scaling_lemma(G: FiniteGroup, S: ConnectionSet, k: int) -> ScalingLemmaReport:
    """
    Check that every generator of Aut Cay(G; S) is an automorphism of Cay(G; kS).

    Args:
        G: Abelian group
        S: Connection set satisfying the colourwise hypothesis for k
        k: Scaling factor

    Returns:
        Per-generator report
    """
    if S.group is not G:
        raise InvalidConnectionSetError(f"Connection set over {S.group.name} used with {G.name}")
    if not G.is_abelian:
        raise PreconditionError(f"The scaling lemma needs an abelian group, {G.name} is not")
    hypothesis = scaling_hypothesis(S, k)
    if not hypothesis.holds:
        raise PreconditionError(f"s -> {k}s is not injective on a colour class of S: {hypothesis.collisions}")

    kS = scaled_set(S, k)
    X = cayley_graph(G, S)
    Y = cayley_graph(G, kS)
    group = automorphism_group(X)

    checks = [
        GeneratorCheck(generator=PermutationModel.from_permutation(g), preserved=is_automorphism(Y, g))
        for g in group.generators
    ]
    passed = all(check.preserved for check in checks)
    if passed:
        logger.info(f"Scaling by {k} on Cay({G.name}; {S.names()}): all {len(checks)} generators preserved")
    else:
        logger.error(f"Scaling by {k} on Cay({G.name}; {S.names()}): a generator is not preserved")
    return ScalingLemmaReport(
        group=G.name,
        connection_set=S.names(),
        k=int(k),
        scaled_set=kS.names(),
        hypothesis=hypothesis,
        aut_order=group.order,
        generators=checks,
        passed=passed,
    )


def double_cover_scaling_instance(G: FiniteGroup, S: ConnectionSet) -> Tuple[FiniteGroup, ConnectionSet, int]:
    """
    The set-up turning the double cover into a Cayley graph.

    Returns (G x Z2, S x {1}, |G| + 1). Element (g, i) of G x Z2 has index
    2g + i, and Cay(G x Z2; S x {1}) is the double cover of Cay(G; S) under
    (g, i) -> g + i|G|. For odd |G| the scaled set is S x {0}.
    """
    if S.group is not G:
        raise InvalidConnectionSetError(f"Connection set over {S.group.name} used with {G.name}")
    doubled = direct_product_group(G, make_abelian([2]))
    members = [2 * s + 1 for s in S.sorted_members]
    colors = {2 * s + 1: S.colors[s] for s in S.sorted_members}
    return doubled, ConnectionSet(doubled, members, colors), G.order + 1


def double_cover_vertex_map(order: int) -> List[int]:
    """Images of (g, i) = 2g + i under (g, i) -> g + i*order."""
    return [g + i * order for g in range(order) for i in range(2)]


def verify_scaling_chain(G: FiniteGroup, S: ConnectionSet, k: int) -> ScalingChainReport:
    """
    Walk the prime factorisation k = p1...pr: check the walk-count congruence on
    p1...p(i-1) S at every prime, and that scaling in stages agrees with scaling by k.

    Args:
        G: Abelian group
        S: Connection set on which s -> ks is injective
        k: Integer >= 2

    Returns:
        Per-stage report
    """
    k = int(k)
    if k < 2:
        raise InvalidParameterError(f"The chain needs k >= 2, got {k}")
    if not G.is_abelian:
        raise PreconditionError(f"The scaling chain needs an abelian group, {G.name} is not")
    if not power_map_injective(S, k):
        raise PreconditionError(f"s -> {k}s is not injective on {S.names()}")

    primes = sorted(p for p, e in factorint(k).items() for _ in range(e))
    stages = []
    current = S
    for p in primes:
        stages.append(walk_count_mod_check(G, current, p))
        current = scaled_set(current, p)

    consistent = current == scaled_set(S, k)
    passed = consistent and all(stage.passed for stage in stages)
    logger.info(f"Scaling chain for k={k} over primes {primes} on {G.name}: passed={passed}")
    return ScalingChainReport(
        group=G.name,
        connection_set=S.names(),
        k=k,
        primes=primes,
        stages=stages,
        composition_consistent=consistent,
        passed=passed,
    )
