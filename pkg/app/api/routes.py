from fastapi import APIRouter, Depends, HTTPException
from fastapi.concurrency import run_in_threadpool
from pydantic import BaseModel
from typing import Callable
import logging

from ..core.exceptions import TheoremViolationError, VerificationError
from ..core.graphs.named_graphs import parse_graph_spec
from ..core.reports import (
    AutomorphismGroupReport,
    ChaoReport,
    Example21Report,
    ProductCheckReport,
    StabilityReport,
    SweepSummary,
    WalkModReport,
)
from ..services.verification_service import CayleyInstance, VerificationService
from .models import (
    AutomorphismRequest,
    GraphSourceRequest,
    LemmaCheckRequest,
    ProductCheckRequest,
    StabilityRequest,
    SweepRequest,
    WalkModRequest,
)
from .dependencies import get_verification_service

router = APIRouter()
logger = logging.getLogger(__name__)

PRODUCT_CHECKS = ("dorfler", "bip-product", "cayley-product")


async def _run(work: Callable[[], BaseModel]) -> BaseModel:
    """
    Run a CPU-bound check in the threadpool and map errors to HTTP status codes.
    """
    try:
        report = await run_in_threadpool(work)
    except TheoremViolationError as e:
        logger.error(f"Theorem violation: {str(e)}")
        raise HTTPException(status_code=409, detail=str(e))
    except VerificationError as e:
        logger.warning(f"Rejected request: {type(e).__name__}: {str(e)}")
        raise HTTPException(status_code=400, detail=str(e))
    if getattr(report, "passed", True) is False:
        logger.error(f"{type(report).__name__} failed")
        raise HTTPException(status_code=409, detail=report.model_dump(by_alias=True, mode="json"))
    return report


def _resolve(service: VerificationService, request: GraphSourceRequest) -> CayleyInstance:
    return service.resolve_graph(
        group_spec=request.group,
        set_spec=request.connection_set,
        graph6=request.graph6,
        json_text=request.json_graph,
        graph_spec=request.graph,
    )

# ==================== Graph Endpoints ====================

@router.post("/autgrp", response_model=AutomorphismGroupReport)
async def automorphism_group(
    request: AutomorphismRequest,
    verification_service: VerificationService = Depends(get_verification_service)
):
    """
    Compute the automorphism group of a graph

    Args:
        request: Graph source

    Returns:
        Exact order, verified generators and orbits
    """
    return await _run(lambda: verification_service.automorphisms(_resolve(verification_service, request).graph))

@router.post("/stability", response_model=StabilityReport)
async def stability(
    request: StabilityRequest,
    verification_service: VerificationService = Depends(get_verification_service)
):
    """
    Compare Aut BX with Aut X x S2

    Args:
        request: Graph source

    Returns:
        Stability report with a witness when X is unstable
    """
    def work() -> StabilityReport:
        instance = _resolve(verification_service, request)
        report = verification_service.stability(instance)
        if verification_service.stability_violated(instance, report):
            raise TheoremViolationError(f"Unstable connected twin-free Cayley graph on {instance.group_name}")
        return report

    return await _run(work)

# ==================== Theorem Endpoints ====================

@router.post("/sweep", response_model=SweepSummary)
async def sweep(
    request: SweepRequest,
    verification_service: VerificationService = Depends(get_verification_service)
):
    """
    Check stability of every connected twin-free Cayley graph of an odd-order abelian group

    Args:
        request: Group and enumeration options

    Returns:
        Sweep summary with every instance
    """
    return await _run(
        lambda: verification_service.sweep(request.group, loops=request.loops, colored=request.colored, jobs=request.jobs)
    )

@router.post("/lemma-check")
async def lemma_check(
    request: LemmaCheckRequest,
    verification_service: VerificationService = Depends(get_verification_service)
):
    """
    Check that Aut Cay(G; S) preserves Cay(G; kS)

    Args:
        request: Group, connection set and scaling factor

    Returns:
        Scaling lemma report, or the per-prime chain report when ``chain`` is set
    """
    def work() -> BaseModel:
        if request.chain:
            if request.k is None:
                raise VerificationError("chain needs k")
            return verification_service.scaling_chain(request.group, request.connection_set, request.k)
        return verification_service.lemma_check(
            request.group, request.connection_set, request.k, double_cover_instance=request.double_cover
        )

    report = await _run(work)
    return report.model_dump(by_alias=True, mode="json")

@router.post("/walkmod-check", response_model=WalkModReport)
async def walkmod_check(
    request: WalkModRequest,
    verification_service: VerificationService = Depends(get_verification_service)
):
    """
    Compare walk counts of length p modulo p with adjacency in Cay(G; pS)

    Args:
        request: Group, connection set and prime

    Returns:
        Walk-count report
    """
    return await _run(lambda: verification_service.walkmod_check(request.group, request.connection_set, request.p))

@router.post("/product-check", response_model=ProductCheckReport)
async def product_check(
    request: ProductCheckRequest,
    verification_service: VerificationService = Depends(get_verification_service)
):
    """
    Evaluate the hypotheses of a product-automorphism theorem and check its order equation

    Args:
        request: First factor, second factor, check and route

    Returns:
        Product check report
    """
    if request.check not in PRODUCT_CHECKS:
        raise HTTPException(status_code=400, detail=f"Unknown check {request.check!r}; expected one of {PRODUCT_CHECKS}")

    def work() -> ProductCheckReport:
        instance = _resolve(verification_service, request)
        Y = parse_graph_spec(request.y)
        if request.check == "dorfler":
            return verification_service.dorfler(instance.graph, Y)
        if request.check == "cayley-product":
            return verification_service.cayley_product(instance, Y)
        return verification_service.bip_product(instance, Y, route=request.route)

    return await _run(work)

@router.get("/chao/{p}", response_model=ChaoReport)
async def chao(
    p: int,
    verification_service: VerificationService = Depends(get_verification_service)
):
    """
    Compare edge-transitivity with the multiplicative coset criterion on Z_p

    Args:
        p: Odd prime

    Returns:
        Classification report
    """
    return await _run(lambda: verification_service.chao(p))

@router.get("/example21", response_model=Example21Report)
async def example21(
    verification_service: VerificationService = Depends(get_verification_service)
):
    """
    Reproduce the unstable twin-free connected Cayley graph on the group of order 21

    Returns:
        Stability report with the expected orders
    """
    return await _run(verification_service.example21)
