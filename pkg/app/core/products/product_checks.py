"""
Checkers for the product-automorphism theorems.

Hypotheses are evaluated, never assumed. When all of them hold the order
equation |Aut(X x Y)| = |Aut X| |Aut Y| is asserted; otherwise the report
is marked not applicable and nothing is computed on the product.
"""
import logging
import math
from typing import Dict, Optional

from ..exceptions import InvalidParameterError, PreconditionError
from ..graphs.colored_graph import ColoredGraph
from ..groups.finite_group import FiniteGroup
from ..permutations.automorphism_search import automorphism_group
from ..reports import ProductCheckReport
from ..stability.stability_check import stability_check
from .graph_products import direct_product

logger = logging.getLogger(__name__)

BIP_ROUTES = ("stable-factor", "odd-abelian")


def _order_check(
    check: str,
    route: Optional[str],
    X: ColoredGraph,
    Y: ColoredGraph,
    hypotheses: Dict[str, bool],
) -> ProductCheckReport:
    applicable = all(hypotheses.values())
    if not applicable:
        failed = next(name for name, ok in hypotheses.items() if not ok)
        logger.warning(f"{check}: not applicable, hypothesis '{failed}' fails")
        return ProductCheckReport(
            check=check, route=route, hypotheses=hypotheses, applicable=False, reason=failed, passed=True
        )

    aut_x = automorphism_group(X).order
    aut_y = automorphism_group(Y).order
    aut_xy = automorphism_group(direct_product(X, Y)).order
    holds = aut_xy == aut_x * aut_y
    if holds:
        logger.info(f"{check}: |Aut(X x Y)| = {aut_xy} = {aut_x} * {aut_y}")
    else:
        logger.error(f"{check}: |Aut(X x Y)| = {aut_xy} but |Aut X| |Aut Y| = {aut_x * aut_y}")
    return ProductCheckReport(
        check=check,
        route=route,
        hypotheses=hypotheses,
        applicable=True,
        aut_x_order=aut_x,
        aut_y_order=aut_y,
        aut_product_order=aut_xy,
        holds=holds,
        passed=holds,
    )


def dorfler_check(X: ColoredGraph, Y: ColoredGraph) -> ProductCheckReport:
    """
    Twin-free, connected, non-bipartite factors of coprime order have
    Aut(X x Y) = Aut X x Aut Y.
    """
    hypotheses = {
        "x_twin_free": X.is_twin_free(),
        "x_connected": X.is_connected(),
        "x_non_bipartite": not X.is_bipartite(),
        "y_twin_free": Y.is_twin_free(),
        "y_connected": Y.is_connected(),
        "y_non_bipartite": not Y.is_bipartite(),
        "coprime_orders": math.gcd(X.vertex_count, Y.vertex_count) == 1,
    }
    return _order_check("dorfler", None, X, Y, hypotheses)


def has_part_swapping_automorphism(Y: ColoredGraph) -> bool:
    """
    Whether some automorphism of a connected bipartite Y exchanges the two parts.

    Part-preserving automorphisms form a subgroup, so it is enough to look
    for a generator that moves a vertex of part0 into part1.

    Raises:
        PreconditionError: Y is disconnected or not bipartite
    """
    bipartition = Y.bipartition()
    if bipartition is None or not Y.is_connected():
        raise PreconditionError("A part swap is only defined for connected bipartite graphs")
    anchor = min(bipartition.part0)
    return any(g(anchor) in bipartition.part1 for g in automorphism_group(Y).generators)


def _declared_odd_abelian(X: ColoredGraph, group: Optional[FiniteGroup]) -> bool:
    return group is not None and group.is_abelian and group.order % 2 == 1 and group.order == X.vertex_count


def _bipartite_factor_hypotheses(X: ColoredGraph, Y: ColoredGraph) -> Dict[str, bool]:
    bipartition = Y.bipartition()
    connected = Y.is_connected()
    hypotheses = {
        "y_twin_free": Y.is_twin_free(),
        "y_connected": connected,
        "y_bipartite": bipartition is not None,
    }
    if bipartition is None:
        hypotheses["parts_coprime"] = False
        hypotheses["parts_unequal_or_swappable"] = False
    else:
        y0, y1 = len(bipartition.part0), len(bipartition.part1)
        n = X.vertex_count
        hypotheses["parts_coprime"] = math.gcd(y0, n) == 1 and math.gcd(y1, n) == 1
        hypotheses["parts_unequal_or_swappable"] = y0 != y1 or (
            connected and has_part_swapping_automorphism(Y)
        )
    hypotheses["nontrivial_factors"] = X.vertex_count > 1 and Y.vertex_count > 1
    return hypotheses


def bip_product_check(
    X: ColoredGraph,
    Y: ColoredGraph,
    route: str = "stable-factor",
    group: Optional[FiniteGroup] = None,
) -> ProductCheckReport:
    """
    Aut(X x Y) = Aut X x Aut Y for bipartite Y.

    Args:
        X: First factor
        Y: Bipartite second factor
        route: "stable-factor" asks for X twin-free, connected, non-bipartite and
            stable with both factors having an edge; "odd-abelian" asks for X to be a
            twin-free connected Cayley graph on the declared odd-order abelian group
        group: Declared group for the "odd-abelian" route

    Returns:
        ProductCheckReport
    """
    if route not in BIP_ROUTES:
        raise InvalidParameterError(f"Unknown route {route!r}; expected one of {BIP_ROUTES}")

    hypotheses = {
        "x_twin_free": X.is_twin_free(),
        "x_connected": X.is_connected(),
    }
    if route == "stable-factor":
        hypotheses["x_non_bipartite"] = not X.is_bipartite()
        hypotheses["x_has_edge"] = X.edge_count > 0
        hypotheses["y_has_edge"] = Y.edge_count > 0
        if all(hypotheses.values()):
            hypotheses["x_stable"] = stability_check(X).stable
        else:
            hypotheses["x_stable"] = False
    else:
        hypotheses["x_odd_abelian_cayley"] = _declared_odd_abelian(X, group)
    hypotheses.update(_bipartite_factor_hypotheses(X, Y))
    return _order_check("bip-product", route, X, Y, hypotheses)


def cayley_product_check(X: ColoredGraph, Y: ColoredGraph, group: Optional[FiniteGroup]) -> ProductCheckReport:
    """
    X a twin-free connected Cayley graph on an odd-order abelian group, Y
    twin-free and connected: either Y is non-bipartite of order coprime to
    |V(X)|, or Y is bipartite and the "odd-abelian" route applies.
    """
    if Y.is_bipartite():
        report = bip_product_check(X, Y, route="odd-abelian", group=group)
        report.check = "cayley-product"
        return report

    hypotheses = {
        "x_twin_free": X.is_twin_free(),
        "x_connected": X.is_connected(),
        "x_odd_abelian_cayley": _declared_odd_abelian(X, group),
        "y_twin_free": Y.is_twin_free(),
        "y_connected": Y.is_connected(),
        "coprime_orders": math.gcd(X.vertex_count, Y.vertex_count) == 1,
        "nontrivial_factors": X.vertex_count > 1 and Y.vertex_count > 1,
    }
    return _order_check("cayley-product", "nonbipartite", X, Y, hypotheses)
