import logging
from typing import List, Optional

from ..graphs.colored_graph import ColoredGraph
from ..permutations.automorphism_search import automorphism_group, is_automorphism
from ..permutations.perm_group import PermGroup
from ..permutations.permutation import Permutation
from ..products.graph_products import double_cover
from ..reports import StabilityReport

logger = logging.getLogger(__name__)


def lifted_subgroup(aut_x: PermGroup) -> PermGroup:
    """
    Aut X x S2 acting on the double cover: (v, i) -> (phi(v), i) for every
    generator phi, plus the swap (v, i) -> (v, 1 - i).
    """
    n = aut_x.degree
    generators = [Permutation(list(g.images) + [image + n for image in g.images]) for g in aut_x.generators]
    generators.append(Permutation([v + n for v in range(n)] + list(range(n))))
    return PermGroup(2 * n, generators)


def find_witness(aut_bx: PermGroup, subgroup: PermGroup) -> Optional[Permutation]:
    """First generator of Aut BX that does not sift through the chain of Aut X x S2."""
    for g in aut_bx.generators:
        if not subgroup.is_member(g):
            return g
    return None


def stability_check(
    X: ColoredGraph,
    group: Optional[str] = None,
    connection_set: Optional[List[str]] = None,
) -> StabilityReport:
    """
    Decide whether Aut BX = Aut X x S2.

    Both orders are always computed. A connected twin-free X is stable iff
    |Aut BX| = 2|Aut X|; otherwise the reason is recorded and stable is false.
    When the orders differ, a witness outside Aut X x S2 is found by sifting.

    Args:
        X: Graph, colours and loops allowed
        group: Optional group label for the report
        connection_set: Optional connection-set names for the report

    Returns:
        StabilityReport
    """
    connected = X.is_connected()
    twin_free = X.is_twin_free()

    aut_x = automorphism_group(X)
    aut_bx = automorphism_group(double_cover(X))
    expected = 2 * aut_x.order

    witness = None
    if aut_bx.order != expected:
        witness = find_witness(aut_bx, lifted_subgroup(aut_x))

    reason = None
    if not connected:
        reason = "disconnected"
    elif not twin_free:
        reason = "has twins"

    stable = connected and twin_free and aut_bx.order == expected
    report = StabilityReport(
        group=group,
        connection_set=connection_set,
        vertex_count=X.vertex_count,
        connected=connected,
        twin_free=twin_free,
        aut_x_order=aut_x.order,
        aut_bx_order=aut_bx.order,
        divides=aut_bx.order % expected == 0,
        stable=stable,
        witness=list(witness.images) if witness is not None else None,
        witness_cycles=witness.cycle_notation() if witness is not None else None,
        reason=reason,
    )
    logger.debug(
        f"Stability of {X!r}: |Aut X|={aut_x.order}, |Aut BX|={aut_bx.order}, stable={stable}, reason={reason}"
    )
    return report


def witness_is_valid(X: ColoredGraph, report: StabilityReport) -> bool:
    """The witness is an automorphism of BX lying outside Aut X x S2."""
    if report.witness is None:
        return False
    witness = Permutation(report.witness)
    return is_automorphism(double_cover(X), witness) and not lifted_subgroup(automorphism_group(X)).is_member(witness)
