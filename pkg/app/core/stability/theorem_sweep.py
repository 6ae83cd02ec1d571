"""
Exhaustive stability sweeps over all connection sets of an abelian group of odd order.
"""
import logging
from concurrent.futures import ProcessPoolExecutor
from itertools import product
from typing import Dict, List, Optional, Sequence, Tuple

from ...config.settings import settings
from ..cayley.cayley_graph import cayley_graph
from ..cayley.connection_set import ConnectionSet
from ..exceptions import PreconditionError, RefusalError
from ..groups.finite_group import FiniteGroup
from ..groups.group_spec import parse_group_spec
from ..permutations.automorphism_search import automorphism_group
from ..reports import SweepInstance, SweepSummary
from .stability_check import stability_check

logger = logging.getLogger(__name__)

# (group spec, encoding, inverse classes, colour per class with None for "absent")
Task = Tuple[str, int, Tuple[Tuple[int, ...], ...], Tuple[Optional[int], ...]]

NONABELIAN_HINT = (
    "the stability theorem needs an abelian group of odd order; SD(7,3,2) has order 21 "
    "and an unstable twin-free connected Cayley graph (run 'example21')"
)


def inverse_classes(G: FiniteGroup, loops: bool = False) -> List[Tuple[int, ...]]:
    """Inverse pairs {s, s^-1} of non-identity elements, plus {identity} when loops are allowed."""
    classes = sorted({tuple(sorted({s, G.inv(s)})) for s in G.elements if s != G.identity})
    if loops:
        classes.append((G.identity,))
    return classes


def enumerate_assignments(class_count: int, colored: bool) -> List[Tuple[Optional[int], ...]]:
    """
    Every assignment of a colour (or None for "absent") to each class.

    The position in the returned list is the instance encoding: the bitmask of
    present classes in plain mode, the base-3 digit string (0 absent, 1 colour 0,
    2 colour 1) in coloured mode. Class 0 is the least significant digit.
    """
    options: Sequence[Optional[int]] = (None, 0, 1) if colored else (None, 0)
    return [tuple(reversed(digits)) for digits in product(options, repeat=class_count)]


def _build(G: FiniteGroup, classes: Sequence[Tuple[int, ...]], assignment: Sequence[Optional[int]]) -> ConnectionSet:
    members: List[int] = []
    colors: Dict[int, int] = {}
    for cls, color in zip(classes, assignment):
        if color is None:
            continue
        for s in cls:
            members.append(s)
            colors[s] = color
    return ConnectionSet(G, members, colors)


def sweep_instance(task: Task) -> SweepInstance:
    """Classify one connection set; runs in worker processes, so the group is rebuilt from its spec."""
    spec, encoding, classes, assignment = task
    G = parse_group_spec(spec)
    S = _build(G, classes, assignment)
    X = cayley_graph(G, S)

    if not X.is_connected():
        return SweepInstance(encoding=encoding, connection_set=S.names(), status="disconnected")
    if not X.is_twin_free():
        return SweepInstance(encoding=encoding, connection_set=S.names(), status="has_twins")

    report = stability_check(X, group=G.name, connection_set=S.names())
    shadow_divides = None
    if not S.is_uncolored:
        shadow = automorphism_group(X.underlying_uncolored()).order
        shadow_divides = shadow % report.aut_x_order == 0
    return SweepInstance(
        encoding=encoding,
        connection_set=S.names(),
        status="stable" if report.stable else "unstable",
        aut_x_order=report.aut_x_order,
        aut_bx_order=report.aut_bx_order,
        divides=report.divides,
        shadow_divides=shadow_divides,
    )


def theorem_sweep(
    group_spec: str,
    loops: bool = False,
    colored: bool = False,
    jobs: Optional[int] = None,
) -> SweepSummary:
    """
    Run the stability check on every connected twin-free Cayley graph of the group.

    Args:
        group_spec: Abelian group of odd order, e.g. "Z15" or "Z3xZ3"
        loops: Also enumerate connection sets containing the identity
        colored: Give every inverse pair colour 0 or colour 1
        jobs: Worker processes; defaults to settings.SWEEP_JOBS

    Returns:
        SweepSummary with instances ordered by encoding
    """
    G = parse_group_spec(group_spec)
    if not G.is_abelian or G.order % 2 == 0:
        raise PreconditionError(f"Refusing to sweep {G.name} (order {G.order}): {NONABELIAN_HINT}")

    classes = inverse_classes(G, loops)
    if len(classes) > settings.SWEEP_MAX_CLASSES:
        raise RefusalError(
            f"{G.name} has {len(classes)} inverse classes; sweeps are limited to {settings.SWEEP_MAX_CLASSES}"
        )

    assignments = enumerate_assignments(len(classes), colored)
    tasks: List[Task] = [(group_spec, i, tuple(classes), a) for i, a in enumerate(assignments)]
    jobs = jobs or settings.SWEEP_JOBS
    logger.info(f"Sweeping {len(tasks)} connection sets of {G.name} (loops={loops}, colored={colored}, jobs={jobs})")

    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as executor:
            instances = list(executor.map(sweep_instance, tasks, chunksize=max(1, len(tasks) // (4 * jobs))))
    else:
        instances = [sweep_instance(task) for task in tasks]

    counts = {status: 0 for status in ("disconnected", "has_twins", "stable", "unstable")}
    for instance in instances:
        counts[instance.status] += 1
    unstable = [instance for instance in instances if instance.status == "unstable"]
    shadow_failures = sum(1 for instance in instances if instance.shadow_divides is False)
    divisibility_ok = all(instance.divides is not False for instance in instances)

    for instance in unstable:
        logger.error(f"Unstable instance {instance.encoding} of {G.name}: S = {instance.connection_set}")
    summary = SweepSummary(
        group=G.name,
        loops=loops,
        colored=colored,
        total=len(instances),
        disconnected=counts["disconnected"],
        has_twins=counts["has_twins"],
        checked=counts["stable"] + counts["unstable"],
        stable=counts["stable"],
        unstable=counts["unstable"],
        shadow_failures=shadow_failures,
        unstable_instances=unstable,
        instances=instances,
        passed=not unstable and shadow_failures == 0 and divisibility_ok,
    )
    logger.info(
        f"Sweep of {G.name}: {summary.total} sets, {summary.disconnected} disconnected, "
        f"{summary.has_twins} with twins, {summary.stable} stable, {summary.unstable} unstable"
    )
    return summary
