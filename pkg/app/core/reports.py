"""
Report models returned by every checker.

Group orders are Python integers internally and decimal strings in JSON.
"""
from typing import Annotated, Dict, List, Optional

from pydantic import BaseModel, ConfigDict, Field, PlainSerializer

from .permutations.permutation import Permutation

Order = Annotated[int, PlainSerializer(lambda v: str(v), return_type=str, when_used="json")]

# ==================== Shared Models ====================

class PermutationModel(BaseModel):
    """
    Model for a permutation in a report
    """
    images: List[int] = Field(..., description="Image of each point, in point order")
    cycles: str = Field(..., description="Cycle notation, '()' for the identity")

    @classmethod
    def from_permutation(cls, p: Permutation) -> "PermutationModel":
        return cls(images=list(p.images), cycles=p.cycle_notation())

# ==================== Graph Models ====================

class GraphSummary(BaseModel):
    """
    Model for the structural description of a graph
    """
    vertex_count: int = Field(..., description="Number of vertices")
    edge_count: int = Field(..., description="Number of edges, loops included")
    loop_count: int = Field(0, description="Number of loops")
    color_count: int = Field(..., description="Number of distinct edge labels")
    connected: bool = Field(..., description="Whether the graph is connected")
    bipartite: bool = Field(..., description="Whether the graph is bipartite")
    twin_free: bool = Field(..., description="Whether no two vertices share a coloured neighbourhood")
    graph6: Optional[str] = Field(None, description="graph6 encoding when the graph is simple")
    json_graph: Optional[str] = Field(None, alias="json", description="JSON encoding when the graph has loops or colours")

    model_config = ConfigDict(populate_by_name=True)

class CayleyGraphReport(GraphSummary):
    """
    Model for a constructed Cayley graph
    """
    group: str = Field(..., description="Group specification")
    connection_set: List[str] = Field(..., alias="S", description="Connection set members")
    degrees: List[int] = Field(..., description="Distinct vertex degrees")

class AutomorphismGroupReport(BaseModel):
    """
    Model for an automorphism group computation
    """
    vertex_count: int = Field(..., description="Number of vertices")
    order: Order = Field(..., description="Exact group order")
    generators: List[PermutationModel] = Field(..., description="Verified generators")
    base: List[int] = Field(..., description="Base of the stabilizer chain")
    orbit_lengths: List[int] = Field(..., description="Basic orbit lengths along the chain")
    vertex_orbits: List[List[int]] = Field(..., description="Orbits on vertices")
    edge_orbit_count: int = Field(..., description="Number of orbits on edges")
    edge_transitive: bool = Field(..., description="Whether the non-loop edges form a single orbit")

class ProductGraphReport(GraphSummary):
    """
    Model for a constructed product graph
    """
    kind: str = Field(..., description="direct, cartesian or doublecover")

# ==================== Scaling Models ====================

class ScalingHypothesisReport(BaseModel):
    """
    Model for the hypotheses of the connection-set scaling lemma
    """
    k: int = Field(..., description="Scaling factor")
    group_order: int = Field(..., description="Order of the group")
    gcd_condition: bool = Field(..., description="gcd(k, |G|) = 1, sufficient for every S")
    injective: bool = Field(..., description="s -> ks is injective on S")
    colorwise_injective: bool = Field(..., description="s -> ks is injective on every colour class of S")
    prime_multiplicity: Optional[bool] = Field(
        None, description="For prime k: no fibre of s -> ks inside S has size divisible by k (recorded only)"
    )
    collisions: List[List[str]] = Field([], description="Pairs s != t in a common colour class with ks = kt")
    holds: bool = Field(..., description="Whether the colourwise hypothesis holds")

class GeneratorCheck(BaseModel):
    """
    Model for one generator tested against a second graph
    """
    generator: PermutationModel = Field(..., description="Generator of Aut Cay(G; S)")
    preserved: bool = Field(..., description="Whether it is an automorphism of Cay(G; kS)")

class ScalingLemmaReport(BaseModel):
    """
    Model for a run of the scaling lemma
    """
    group: str = Field(..., description="Group specification")
    connection_set: List[str] = Field(..., alias="S", description="Connection set S")
    k: int = Field(..., description="Scaling factor")
    scaled_set: List[str] = Field(..., alias="kS", description="Scaled connection set kS")
    hypothesis: ScalingHypothesisReport = Field(..., description="Hypothesis evaluation")
    aut_order: Order = Field(..., description="|Aut Cay(G; S)|")
    generators: List[GeneratorCheck] = Field(..., description="Per-generator results")
    passed: bool = Field(..., description="Whether every generator preserves Cay(G; kS)")

    model_config = ConfigDict(populate_by_name=True)

class WalkModReport(BaseModel):
    """
    Model for the walk-count congruence check at one prime
    """
    group: str = Field(..., description="Group specification")
    connection_set: List[str] = Field(..., alias="S", description="Connection set S1")
    p: int = Field(..., description="Prime walk length")
    scaled_set: List[str] = Field(..., alias="pS", description="Scaled connection set pS1")
    pairs_checked: int = Field(..., description="Number of ordered vertex pairs compared")
    violations: List[List[int]] = Field([], description="Pairs where the congruence and adjacency disagree")
    passed: bool = Field(..., description="Whether no pair disagrees")

    model_config = ConfigDict(populate_by_name=True)

class ScalingChainReport(BaseModel):
    """
    Model for the prime-by-prime scaling argument
    """
    group: str = Field(..., description="Group specification")
    connection_set: List[str] = Field(..., alias="S", description="Connection set S")
    k: int = Field(..., description="Scaling factor")
    primes: List[int] = Field(..., description="Prime factors of k with multiplicity, ascending")
    stages: List[WalkModReport] = Field(..., description="Walk-count check at every stage")
    composition_consistent: bool = Field(..., description="Stage-by-stage scaling equals scaling by k")
    passed: bool = Field(..., description="Whether every stage and the composition check pass")

    model_config = ConfigDict(populate_by_name=True)

# ==================== Stability Models ====================

class StabilityReport(BaseModel):
    """
    Model for the stability verdict of one graph
    """
    group: Optional[str] = Field(None, description="Group specification when X is a Cayley graph")
    connection_set: Optional[List[str]] = Field(None, alias="S", description="Connection set when X is a Cayley graph")
    vertex_count: int = Field(..., description="Number of vertices of X")
    connected: bool = Field(..., description="Whether X is connected")
    twin_free: bool = Field(..., description="Whether X is twin-free")
    aut_x_order: Order = Field(..., alias="autX", description="|Aut X|")
    aut_bx_order: Order = Field(..., alias="autBX", description="|Aut BX|")
    divides: bool = Field(..., description="Whether 2|Aut X| divides |Aut BX|")
    stable: bool = Field(..., description="Whether Aut BX = Aut X x S2 and X is connected and twin-free")
    witness: Optional[List[int]] = Field(None, description="Automorphism of BX outside Aut X x S2, as images")
    witness_cycles: Optional[str] = Field(None, description="Cycle notation of the witness")
    reason: Optional[str] = Field(None, description="Why X cannot be stable, when a hypothesis fails")

    model_config = ConfigDict(populate_by_name=True)

class Example21Report(StabilityReport):
    """
    Model for the reproduction of the unstable order-21 example
    """
    expected_aut_x: Order = Field(..., description="Expected |Aut X|")
    expected_aut_bx: Order = Field(..., description="Expected |Aut BX|")
    witness_verified: bool = Field(..., description="Witness is an automorphism of BX and not in Aut X x S2")
    passed: bool = Field(..., description="Whether every expectation holds")

class SweepInstance(BaseModel):
    """
    Model for one connection set of a sweep
    """
    encoding: int = Field(..., description="Position of the connection set in the enumeration")
    connection_set: List[str] = Field(..., alias="S", description="Connection set members")
    status: str = Field(..., description="disconnected, has_twins, stable or unstable")
    aut_x_order: Optional[Order] = Field(None, alias="autX", description="|Aut X| for checked instances")
    aut_bx_order: Optional[Order] = Field(None, alias="autBX", description="|Aut BX| for checked instances")
    divides: Optional[bool] = Field(None, description="Whether 2|Aut X| divides |Aut BX|")
    shadow_divides: Optional[bool] = Field(None, description="Coloured mode: |Aut X| divides |Aut| of the uncoloured shadow")

    model_config = ConfigDict(populate_by_name=True)

class SweepSummary(BaseModel):
    """
    Model for an exhaustive sweep over the connection sets of a group
    """
    group: str = Field(..., description="Group specification")
    loops: bool = Field(..., description="Whether the identity was allowed in S")
    colored: bool = Field(..., description="Whether inverse pairs were 2-coloured")
    total: int = Field(..., description="Number of connection sets enumerated")
    disconnected: int = Field(..., description="Instances with disconnected X")
    has_twins: int = Field(..., description="Connected instances with twins")
    checked: int = Field(..., description="Connected twin-free instances")
    stable: int = Field(..., description="Checked instances that are stable")
    unstable: int = Field(..., description="Checked instances that are unstable")
    shadow_failures: int = Field(0, description="Coloured instances whose order does not divide the shadow's")
    unstable_instances: List[SweepInstance] = Field([], description="Every unstable instance")
    instances: List[SweepInstance] = Field([], description="Every instance, ordered by encoding")
    passed: bool = Field(..., description="Whether no instance is unstable and every divisibility holds")

class ChaoInstance(BaseModel):
    """
    Model for one connection set of the prime-order classification
    """
    connection_set: List[int] = Field(..., alias="S", description="Connection set members")
    edge_transitive: bool = Field(..., description="Edge-orbit predicate")
    coset: bool = Field(..., description="Whether S is a coset of a subgroup of the multiplicative group")
    edge_orbits: int = Field(..., description="Number of edge orbits")
    agree: bool = Field(..., description="Whether both predicates agree")

    model_config = ConfigDict(populate_by_name=True)

class ChaoReport(BaseModel):
    """
    Model for the edge-transitivity classification on Z_p
    """
    p: int = Field(..., description="Odd prime")
    total: int = Field(..., description="Number of connection sets")
    edge_transitive: int = Field(..., description="Edge-transitive instances")
    cosets: int = Field(..., description="Instances that are cosets")
    disagreements: List[ChaoInstance] = Field([], description="Instances where the predicates differ")
    instances: List[ChaoInstance] = Field([], description="Every instance")
    passed: bool = Field(..., description="Whether both predicates agree everywhere")

# ==================== Product Models ====================

class ProductCheckReport(BaseModel):
    """
    Model for a product-automorphism theorem check
    """
    check: str = Field(..., description="dorfler, bip-product or cayley-product")
    route: Optional[str] = Field(None, description="Hypothesis route that was evaluated")
    hypotheses: Dict[str, bool] = Field(..., description="Result of every hypothesis")
    applicable: bool = Field(..., description="Whether every hypothesis holds")
    aut_x_order: Optional[Order] = Field(None, alias="autX", description="|Aut X|")
    aut_y_order: Optional[Order] = Field(None, alias="autY", description="|Aut Y|")
    aut_product_order: Optional[Order] = Field(None, alias="autXY", description="|Aut (X x Y)|")
    holds: Optional[bool] = Field(None, description="|Aut(X x Y)| = |Aut X| |Aut Y|, when applicable")
    reason: Optional[str] = Field(None, description="First failing hypothesis")
    passed: bool = Field(..., description="Not applicable, or applicable and the equation holds")

    model_config = ConfigDict(populate_by_name=True)
