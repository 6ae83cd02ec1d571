import logging
from typing import Optional

from ..core.cayley.cayley_graph import cayley_graph
from ..core.cayley.connection_set import ConnectionSet, parse_connection_set
from ..core.cayley.scaling import (
    double_cover_scaling_instance,
    verify_scaling_chain,
    verify_scaling_lemma,
)
from ..core.cayley.walks import walk_count_mod_check
from ..core.exceptions import InvalidParameterError, TheoremViolationError
from ..core.graphs.colored_graph import ColoredGraph
from ..core.graphs.graph_formats import graph6_read, graph6_write, graph_json_read, graph_json_write
from ..core.graphs.named_graphs import parse_graph_spec
from ..core.groups.finite_group import FiniteGroup
from ..core.groups.group_spec import parse_group_spec
from ..core.permutations.automorphism_search import automorphism_group
from ..core.permutations.edge_orbits import edge_orbits, is_edge_transitive
from ..core.products.graph_products import cartesian_product, direct_product, double_cover
from ..core.products.product_checks import bip_product_check, cayley_product_check, dorfler_check
from ..core.reports import (
    AutomorphismGroupReport,
    CayleyGraphReport,
    ChaoReport,
    Example21Report,
    GraphSummary,
    PermutationModel,
    ProductCheckReport,
    ProductGraphReport,
    ScalingChainReport,
    ScalingLemmaReport,
    StabilityReport,
    SweepSummary,
    WalkModReport,
)
from ..core.stability.chao import chao_check
from ..core.stability.example21 import reproduce_example_21
from ..core.stability.stability_check import stability_check
from ..core.stability.theorem_sweep import theorem_sweep

logger = logging.getLogger(__name__)

PRODUCT_KINDS = ("direct", "cartesian", "doublecover")


class CayleyInstance:
    """A graph together with the group and connection set it was built from, when it is a Cayley graph."""

    def __init__(self, graph: ColoredGraph, group: Optional[FiniteGroup] = None, connection_set: Optional[ConnectionSet] = None):
        self.graph = graph
        self.group = group
        self.connection_set = connection_set

    @property
    def group_name(self) -> Optional[str]:
        return self.group.name if self.group is not None else None

    @property
    def names(self):
        return self.connection_set.names() if self.connection_set is not None else None


class VerificationService:
    """
    Orchestrates parsing, construction and checking for the CLI and the HTTP API.
    """

    # ------------------------------------------------------------------
    # Input resolution
    # ------------------------------------------------------------------
    def cayley_instance(self, group_spec: str, set_spec: str) -> CayleyInstance:
        group = parse_group_spec(group_spec)
        S = parse_connection_set(group, set_spec)
        return CayleyInstance(cayley_graph(group, S), group, S)

    def resolve_graph(
        self,
        group_spec: Optional[str] = None,
        set_spec: Optional[str] = None,
        graph6: Optional[str] = None,
        json_text: Optional[str] = None,
        graph_spec: Optional[str] = None,
    ) -> CayleyInstance:
        """
        Build the graph named by exactly one source: a group with a connection
        set, a graph6 string, a JSON document or a graph specifier.
        """
        sources = [group_spec is not None, graph6 is not None, json_text is not None, graph_spec is not None]
        if sum(sources) != 1:
            raise InvalidParameterError("Give exactly one of: group (with connection set), graph6, JSON graph, graph spec")
        if group_spec is not None:
            if set_spec is None:
                raise InvalidParameterError("A group needs a connection set")
            return self.cayley_instance(group_spec, set_spec)
        if graph6 is not None:
            return CayleyInstance(graph6_read(graph6))
        if json_text is not None:
            return CayleyInstance(graph_json_read(json_text))
        return CayleyInstance(parse_graph_spec(graph_spec))

    # ------------------------------------------------------------------
    # Descriptions
    # ------------------------------------------------------------------
    @staticmethod
    def _summary_fields(X: ColoredGraph) -> dict:
        return {
            "vertex_count": X.vertex_count,
            "edge_count": X.edge_count,
            "loop_count": X.loop_count,
            "color_count": X.color_count,
            "connected": X.is_connected(),
            "bipartite": X.is_bipartite(),
            "twin_free": X.is_twin_free(),
            "graph6": graph6_write(X) if X.is_simple else None,
            "json_graph": None if X.is_simple else graph_json_write(X),
        }

    def describe_graph(self, X: ColoredGraph) -> GraphSummary:
        return GraphSummary(**self._summary_fields(X))

    def describe_cayley(self, group_spec: str, set_spec: str) -> CayleyGraphReport:
        instance = self.cayley_instance(group_spec, set_spec)
        X = instance.graph
        return CayleyGraphReport(
            **self._summary_fields(X),
            group=instance.group_name,
            connection_set=instance.names,
            degrees=sorted({X.degree(v) for v in range(X.vertex_count)}),
        )

    def automorphisms(self, X: ColoredGraph) -> AutomorphismGroupReport:
        group = automorphism_group(X)
        logger.info(f"|Aut| = {group.order} for {X!r}")
        return AutomorphismGroupReport(
            vertex_count=X.vertex_count,
            order=group.order,
            generators=[PermutationModel.from_permutation(g) for g in group.generators],
            base=group.base,
            orbit_lengths=group.orbit_lengths(),
            vertex_orbits=group.vertex_orbits(),
            edge_orbit_count=len(edge_orbits(group, X)),
            edge_transitive=is_edge_transitive(X, group),
        )

    def product(self, X: ColoredGraph, Y: Optional[ColoredGraph], kind: str) -> ProductGraphReport:
        if kind not in PRODUCT_KINDS:
            raise InvalidParameterError(f"Unknown product kind {kind!r}; expected one of {PRODUCT_KINDS}")
        if kind == "doublecover":
            Z = double_cover(X)
        else:
            if Y is None:
                raise InvalidParameterError(f"The {kind} product needs a second graph")
            Z = direct_product(X, Y) if kind == "direct" else cartesian_product(X, Y)
        return ProductGraphReport(**self._summary_fields(Z), kind=kind)

    # ------------------------------------------------------------------
    # Checks
    # ------------------------------------------------------------------
    def stability(self, instance: CayleyInstance) -> StabilityReport:
        return stability_check(instance.graph, group=instance.group_name, connection_set=instance.names)

    @staticmethod
    def stability_violated(instance: CayleyInstance, report: StabilityReport) -> bool:
        """
        Whether an unstable report contradicts the stability theorem: X is a
        connected twin-free Cayley graph on a declared abelian group of odd order.
        """
        G = instance.group
        if G is None or not G.is_abelian or G.order % 2 == 0:
            return False
        return report.connected and report.twin_free and not report.stable

    def sweep(self, group_spec: str, loops: bool = False, colored: bool = False, jobs: Optional[int] = None) -> SweepSummary:
        return theorem_sweep(group_spec, loops=loops, colored=colored, jobs=jobs)

    def lemma_check(self, group_spec: str, set_spec: str, k: Optional[int], double_cover_instance: bool = False) -> ScalingLemmaReport:
        instance = self.cayley_instance(group_spec, set_spec)
        G, S = instance.group, instance.connection_set
        if double_cover_instance:
            G, S, k = double_cover_scaling_instance(G, S)
        if k is None:
            raise InvalidParameterError("A scaling factor k is required")
        return verify_scaling_lemma(G, S, k)

    def scaling_chain(self, group_spec: str, set_spec: str, k: int) -> ScalingChainReport:
        instance = self.cayley_instance(group_spec, set_spec)
        return verify_scaling_chain(instance.group, instance.connection_set, k)

    def walkmod_check(self, group_spec: str, set_spec: str, p: int) -> WalkModReport:
        instance = self.cayley_instance(group_spec, set_spec)
        return walk_count_mod_check(instance.group, instance.connection_set, p)

    def chao(self, p: int) -> ChaoReport:
        return chao_check(p)

    def dorfler(self, X: ColoredGraph, Y: ColoredGraph) -> ProductCheckReport:
        return dorfler_check(X, Y)

    def bip_product(self, X: CayleyInstance, Y: ColoredGraph, route: str = "stable-factor") -> ProductCheckReport:
        return bip_product_check(X.graph, Y, route=route, group=X.group)

    def cayley_product(self, X: CayleyInstance, Y: ColoredGraph) -> ProductCheckReport:
        return cayley_product_check(X.graph, Y, X.group)

    def example21(self) -> Example21Report:
        return reproduce_example_21()

    @staticmethod
    def ensure_passed(report) -> None:
        """
        Raise when a report that carries a ``passed`` flag failed.

        Raises:
            TheoremViolationError: the checked statement failed on an applicable instance
        """
        if getattr(report, "passed", True) is False:
            raise TheoremViolationError(f"{type(report).__name__} failed")
