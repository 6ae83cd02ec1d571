from pydantic import BaseModel, Field
from typing import Optional

# ==================== Graph Source Models ====================

class GraphSourceRequest(BaseModel):
    """
    Model for a graph given by exactly one source
    """
    group: Optional[str] = Field(None, description="Group specification, e.g. Z9, Z3xZ3, SD(7,3,2)")
    connection_set: Optional[str] = Field(None, description="Connection set over the group, e.g. '1,-1@0,2,-2@1'")
    graph6: Optional[str] = Field(None, description="Graph in graph6 format")
    json_graph: Optional[str] = Field(None, description="JSON graph document {\"n\": ..., \"edges\": [...]}")
    graph: Optional[str] = Field(None, description="Graph specifier: C5, P4, K7, K2,3, S3, E4 or g6:<graph6>")

class AutomorphismRequest(GraphSourceRequest):
    """
    Model for an automorphism group request
    """

class StabilityRequest(GraphSourceRequest):
    """
    Model for a stability request
    """

# ==================== Checker Models ====================

class SweepRequest(BaseModel):
    """
    Model for a stability sweep request
    """
    group: str = Field(..., description="Abelian group of odd order")
    loops: bool = Field(False, description="Allow the identity in the connection set")
    colored: bool = Field(False, description="2-colour the inverse pairs")
    jobs: Optional[int] = Field(None, ge=1, description="Worker processes")

class LemmaCheckRequest(BaseModel):
    """
    Model for a scaling lemma request
    """
    group: str = Field(..., description="Abelian group")
    connection_set: str = Field(..., description="Connection set")
    k: Optional[int] = Field(None, description="Scaling factor")
    chain: bool = Field(False, description="Check every prime stage of k with walk counts")
    double_cover: bool = Field(False, description="Check the instance G x Z2, S x {1}, k = |G| + 1")

class WalkModRequest(BaseModel):
    """
    Model for a walk-count congruence request
    """
    group: str = Field(..., description="Abelian group")
    connection_set: str = Field(..., description="Connection set")
    p: int = Field(..., description="Prime walk length")

class ProductCheckRequest(GraphSourceRequest):
    """
    Model for a product-automorphism theorem request; the graph source is the first factor
    """
    y: str = Field(..., description="Second factor (graph specifier)")
    check: str = Field("dorfler", description="dorfler, bip-product or cayley-product")
    route: str = Field("stable-factor", description="Hypothesis route for bip-product: stable-factor or odd-abelian")
