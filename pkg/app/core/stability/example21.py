"""
The unstable twin-free connected Cayley graph on the nonabelian group of order 21.
"""
import logging
from typing import Tuple

from ..cayley.cayley_graph import cayley_graph
from ..cayley.connection_set import ConnectionSet
from ..graphs.colored_graph import ColoredGraph
from ..groups.finite_group import make_semidirect
from ..reports import Example21Report
from .stability_check import stability_check, witness_is_valid

logger = logging.getLogger(__name__)

EXPECTED_AUT_X = 42
EXPECTED_AUT_BX = 252


def example21_graph() -> Tuple[ColoredGraph, ConnectionSet]:
    """
    Cay(G; {a^+-1, x^+-1, (ax)^+-1}) for G = <a, x | a^3 = x^7 = 1, a^-1 x a = x^2>.
    """
    G = make_semidirect(7, 3, 2)
    a = 1
    x = G.tag["m"]
    ax = G.mul(a, x)
    S = ConnectionSet(G, {a, G.inv(a), x, G.inv(x), ax, G.inv(ax)})
    return cayley_graph(G, S), S


def reproduce_example_21() -> Example21Report:
    """
    Build the order-21 example and check |Aut X| = 42, |Aut BX| = 252, twin-freeness,
    connectivity, instability and the sifted witness.
    """
    X, S = example21_graph()
    report = stability_check(X, group=S.group.name, connection_set=S.names())
    witness_verified = witness_is_valid(X, report)
    passed = (
        report.aut_x_order == EXPECTED_AUT_X
        and report.aut_bx_order == EXPECTED_AUT_BX
        and report.connected
        and report.twin_free
        and not report.stable
        and witness_verified
    )
    if passed:
        logger.info(f"Order-21 example reproduced: |Aut X| = {report.aut_x_order}, |Aut BX| = {report.aut_bx_order}")
    else:
        logger.error(f"Order-21 example not reproduced: {report.model_dump()}")
    return Example21Report(
        **report.model_dump(),
        expected_aut_x=EXPECTED_AUT_X,
        expected_aut_bx=EXPECTED_AUT_BX,
        witness_verified=witness_verified,
        passed=passed,
    )
