import argparse
import logging
import math
import os
import random
import sys
import time
from typing import Callable, Dict, List

# Add parent directory to path to import app modules
sys.path.append(os.path.dirname(os.path.dirname(os.path.abspath(__file__))))

from app.config.settings import settings
from app.core.cayley.cayley_graph import cayley_graph
from app.core.cayley.connection_set import ConnectionSet, parse_connection_set
from app.core.cayley.scaling import double_cover_scaling_instance, verify_scaling_lemma
from app.core.cayley.walks import walk_count_mod_check
from app.core.graphs.graph_formats import graph6_read, graph6_write
from app.core.graphs.named_graphs import cycle, oracle_corpus, path
from app.core.groups.group_spec import parse_group_spec
from app.core.permutations.automorphism_search import automorphism_group
from app.core.permutations.naive import naive_automorphisms
from app.core.products.product_checks import bip_product_check, dorfler_check
from app.core.stability.chao import chao_check
from app.core.stability.example21 import reproduce_example_21
from app.core.stability.theorem_sweep import inverse_classes, theorem_sweep

logging.basicConfig(
    level=logging.INFO,
    format="%(asctime)s - %(name)s - %(levelname)s - %(message)s",
    handlers=[logging.StreamHandler()]
)

logger = logging.getLogger(__name__)

SWEEP_GROUPS = ["Z3", "Z5", "Z7", "Z9", "Z11", "Z13", "Z15", "Z3xZ3", "Z21"]
LEMMA_GROUPS = ["Z3", "Z5", "Z7", "Z9", "Z11", "Z13", "Z15", "Z3xZ3", "Z21", "Z5xZ3"]
WALK_CASES = [("Z7", "1,-1", 3), ("Z5", "1,-1", 5), ("Z9", "1,-1,2,-2", 5)]
CHAO_PRIMES = [3, 5, 7, 11, 13]
LEMMA_INSTANCES = 200


def criterion_example21(jobs: int) -> bool:
    report = reproduce_example_21()
    logger.info(f"autX={report.aut_x_order}, autBX={report.aut_bx_order}, stable={report.stable}")
    return report.passed


def criterion_sweep(jobs: int) -> bool:
    passed = True
    for spec in SWEEP_GROUPS:
        summary = theorem_sweep(spec, jobs=jobs)
        passed &= summary.passed and summary.unstable == 0
    colored = theorem_sweep("Z3xZ3", colored=True, jobs=jobs)
    return passed and colored.passed


def criterion_lemma(jobs: int) -> bool:
    rng = random.Random(settings.RANDOM_SEED)
    passed = True
    for _ in range(LEMMA_INSTANCES):
        G = parse_group_spec(rng.choice(LEMMA_GROUPS))
        classes = inverse_classes(G)
        chosen = [cls for cls in classes if rng.random() < 0.5] or [rng.choice(classes)]
        S = ConnectionSet(G, [s for cls in chosen for s in cls])
        k = rng.choice([k for k in range(2, 3 * G.order) if math.gcd(k, G.order) == 1])
        passed &= verify_scaling_lemma(G, S, k).passed
    for spec in SWEEP_GROUPS:
        G = parse_group_spec(spec)
        S = ConnectionSet(G, [s for cls in inverse_classes(G) for s in cls])
        passed &= verify_scaling_lemma(*double_cover_scaling_instance(G, S)).passed
    return passed


def criterion_walks(jobs: int) -> bool:
    passed = True
    for spec, members, p in WALK_CASES:
        G = parse_group_spec(spec)
        passed &= walk_count_mod_check(G, parse_connection_set(G, members), p).passed
    return passed


def criterion_chao(jobs: int) -> bool:
    return all(chao_check(p).passed for p in CHAO_PRIMES)


def criterion_dorfler(jobs: int) -> bool:
    first = dorfler_check(cycle(5), cycle(7))
    second = dorfler_check(cycle(3), cycle(5))
    return (
        first.applicable and first.aut_product_order == 140
        and second.applicable and second.aut_product_order == 60
    )


def criterion_bipartite(jobs: int) -> bool:
    G = parse_group_spec("Z5")
    X = cayley_graph(G, parse_connection_set(G, "1,-1"))
    report = bip_product_check(X, path(4), route="odd-abelian", group=G)
    with_k2 = bip_product_check(cycle(7), path(2), route="stable-factor")
    return report.applicable and report.aut_product_order == 20 and with_k2.applicable and with_k2.holds


def criterion_oracle(jobs: int) -> bool:
    passed = True
    for name, X in oracle_corpus():
        engine = automorphism_group(X).order
        naive = len(naive_automorphisms(X))
        if engine != naive:
            logger.error(f"{name}: engine order {engine}, enumeration {naive}")
            passed = False
    return passed


def criterion_graph6(jobs: int) -> bool:
    passed = True
    for name, X in oracle_corpus():
        if not X.is_simple:
            continue
        text = graph6_write(X)
        if graph6_read(text) != X or graph6_write(graph6_read(text)) != text:
            logger.error(f"{name}: graph6 round trip failed on {text!r}")
            passed = False
    return passed


CRITERIA: Dict[int, Callable[[int], bool]] = {
    1: criterion_example21,
    2: criterion_sweep,
    3: criterion_lemma,
    4: criterion_walks,
    5: criterion_chao,
    6: criterion_dorfler,
    7: criterion_bipartite,
    8: criterion_oracle,
    9: criterion_graph6,
}


def run_acceptance(selected: List[int], jobs: int) -> bool:
    """
    Run the selected acceptance criteria

    Args:
        selected: Criterion numbers
        jobs: Worker processes for the sweeps

    Returns:
        Whether every selected criterion passed
    """
    all_passed = True
    for number in selected:
        start = time.perf_counter()
        try:
            passed = CRITERIA[number](jobs)
        except Exception as e:
            logger.error(f"Criterion {number} raised {type(e).__name__}: {str(e)}")
            passed = False
        elapsed = time.perf_counter() - start
        logger.info(f"Criterion {number} ({CRITERIA[number].__name__}): {'PASS' if passed else 'FAIL'} in {elapsed:.1f}s")
        all_passed &= passed
    return all_passed


def main():
    parser = argparse.ArgumentParser(description=f"Acceptance suite for {settings.PROJECT_NAME}")
    parser.add_argument("criteria", nargs="*", type=int, choices=sorted(CRITERIA), help="Criteria to run (default: all)")
    parser.add_argument("--jobs", type=int, default=settings.SWEEP_JOBS, help="Worker processes for the sweeps")
    args = parser.parse_args()

    passed = run_acceptance(args.criteria or sorted(CRITERIA), args.jobs)
    sys.exit(0 if passed else 1)

if __name__ == "__main__":
    main()
