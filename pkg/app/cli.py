"""
Command-line front end binding every checker.

Reports go to stdout (JSON by default), logs to stderr. Exit codes:
0 when every assertion passed, 1 on a theorem violation, 2 on usage or
precondition errors.
"""
import argparse
import json
import logging
import sys
from pathlib import Path
from typing import List, Optional

import pandas as pd
from pydantic import BaseModel

from .config.settings import settings
from .core.exceptions import TheoremViolationError, VerificationError
from .core.graphs.named_graphs import parse_graph_spec
from .services.verification_service import PRODUCT_KINDS, VerificationService

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_VIOLATION = 1
EXIT_USAGE = 2


def _add_graph_source(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--group", help="Group specification, e.g. Z9, Z3xZ3, SD(7,3,2)")
    parser.add_argument("--set", dest="set_spec", help="Connection set, e.g. '1,-1@0,2,-2@1'")
    parser.add_argument("--graph6", help="Graph in graph6 format")
    parser.add_argument("--json", dest="json_file", help="File holding a JSON graph {\"n\": ..., \"edges\": [...]}")
    parser.add_argument("--graph", "--x", dest="graph", help="Graph specifier: C5, P4, K7, K2,3, S3, E4 or g6:<graph6>")


def _add_output(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--output", choices=["json", "text"], default="json", help="Output format")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="cayley-stability", description=settings.PROJECT_NAME)
    subparsers = parser.add_subparsers(dest="command", help="Command to execute")
    subparsers.required = True

    cayley_parser = subparsers.add_parser("cayley", help="Build and describe a Cayley graph")
    cayley_parser.add_argument("--group", required=True, help="Group specification")
    cayley_parser.add_argument("--set", dest="set_spec", required=True, help="Connection set")
    _add_output(cayley_parser)

    autgrp_parser = subparsers.add_parser("autgrp", help="Automorphism group order and generators")
    _add_graph_source(autgrp_parser)
    _add_output(autgrp_parser)

    stability_parser = subparsers.add_parser("stability", help="Compare Aut BX with Aut X x S2")
    _add_graph_source(stability_parser)
    _add_output(stability_parser)

    sweep_parser = subparsers.add_parser("sweep", help="Stability of every Cayley graph of an odd-order abelian group")
    sweep_parser.add_argument("--group", required=True, help="Abelian group of odd order")
    sweep_parser.add_argument("--loops", action="store_true", help="Allow the identity in S")
    sweep_parser.add_argument("--colors", action="store_true", help="2-colour the inverse pairs")
    sweep_parser.add_argument("--jobs", type=int, default=None, help="Worker processes")
    _add_output(sweep_parser)

    lemma_parser = subparsers.add_parser("lemma-check", help="Aut Cay(G;S) <= Aut Cay(G;kS)")
    lemma_parser.add_argument("--group", required=True, help="Abelian group")
    lemma_parser.add_argument("--set", dest="set_spec", required=True, help="Connection set")
    lemma_parser.add_argument("--k", type=int, default=None, help="Scaling factor")
    lemma_parser.add_argument("--chain", action="store_true", help="Check every prime stage of k with walk counts")
    lemma_parser.add_argument(
        "--double-cover", dest="double_cover", action="store_true",
        help="Check the instance G x Z2, S x {1}, k = |G| + 1",
    )
    _add_output(lemma_parser)

    walkmod_parser = subparsers.add_parser("walkmod-check", help="Walk counts of length p modulo p")
    walkmod_parser.add_argument("--group", required=True, help="Abelian group")
    walkmod_parser.add_argument("--set", dest="set_spec", required=True, help="Connection set")
    walkmod_parser.add_argument("--p", type=int, required=True, help="Prime walk length")
    _add_output(walkmod_parser)

    chao_parser = subparsers.add_parser("chao", help="Edge-transitive Cayley graphs on Z_p")
    chao_parser.add_argument("--p", type=int, required=True, help="Odd prime")
    _add_output(chao_parser)

    product_parser = subparsers.add_parser("product", help="Build a graph product")
    _add_graph_source(product_parser)
    product_parser.add_argument("--y", help="Second factor (graph specifier)")
    product_parser.add_argument("--kind", choices=list(PRODUCT_KINDS), default="direct", help="Product kind")
    _add_output(product_parser)

    dorfler_parser = subparsers.add_parser("dorfler", help="Aut(X x Y) for non-bipartite coprime factors")
    _add_graph_source(dorfler_parser)
    dorfler_parser.add_argument("--y", required=True, help="Second factor (graph specifier)")
    _add_output(dorfler_parser)

    bip_parser = subparsers.add_parser("bip-product", help="Aut(X x Y) for bipartite Y")
    _add_graph_source(bip_parser)
    bip_parser.add_argument("--y", required=True, help="Bipartite second factor (graph specifier)")
    bip_parser.add_argument("--route", choices=["stable-factor", "odd-abelian", "cayley"], default="stable-factor", help="Hypothesis route")
    _add_output(bip_parser)

    example_parser = subparsers.add_parser("example21", help="The unstable Cayley graph on the group of order 21")
    _add_output(example_parser)

    return parser


def _resolve(service: VerificationService, args: argparse.Namespace):
    json_text = Path(args.json_file).read_text() if args.json_file else None
    return service.resolve_graph(
        group_spec=args.group,
        set_spec=args.set_spec,
        graph6=args.graph6,
        json_text=json_text,
        graph_spec=args.graph,
    )


def _render_text(report: BaseModel) -> str:
    data = report.model_dump(by_alias=True, mode="json")
    rows = data.pop("instances", None)
    lines = []
    for key, value in data.items():
        if isinstance(value, (list, dict)):
            value = json.dumps(value)
        lines.append(f"{key}: {value}")
    if rows:
        frame = pd.DataFrame(rows)
        for column in ("S", "connection_set"):
            if column in frame.columns:
                frame[column] = frame[column].map(lambda members: ",".join(str(m) for m in members))
        lines.append(frame.to_string(index=False))
    return "\n".join(lines)


def _emit(report: BaseModel, output: str) -> None:
    if output == "text":
        print(_render_text(report))
    else:
        print(report.model_dump_json(by_alias=True, indent=2))


def _execute(service: VerificationService, args: argparse.Namespace) -> BaseModel:
    command = args.command
    if command == "cayley":
        return service.describe_cayley(args.group, args.set_spec)
    if command == "autgrp":
        return service.automorphisms(_resolve(service, args).graph)
    if command == "stability":
        instance = _resolve(service, args)
        report = service.stability(instance)
        if service.stability_violated(instance, report):
            _emit(report, args.output)
            raise TheoremViolationError(f"Unstable connected twin-free Cayley graph on {instance.group_name}")
        return report
    if command == "sweep":
        return service.sweep(args.group, loops=args.loops, colored=args.colors, jobs=args.jobs)
    if command == "lemma-check":
        if args.chain:
            if args.k is None:
                raise VerificationError("--chain needs --k")
            return service.scaling_chain(args.group, args.set_spec, args.k)
        return service.lemma_check(args.group, args.set_spec, args.k, double_cover_instance=args.double_cover)
    if command == "walkmod-check":
        return service.walkmod_check(args.group, args.set_spec, args.p)
    if command == "chao":
        return service.chao(args.p)
    if command == "product":
        Y = parse_graph_spec(args.y) if args.y else None
        return service.product(_resolve(service, args).graph, Y, args.kind)
    if command == "dorfler":
        return service.dorfler(_resolve(service, args).graph, parse_graph_spec(args.y))
    if command == "bip-product":
        instance = _resolve(service, args)
        Y = parse_graph_spec(args.y)
        if args.route == "cayley":
            return service.cayley_product(instance, Y)
        return service.bip_product(instance, Y, route=args.route)
    return service.example21()


def _configure_logging() -> None:
    logging.basicConfig(
        level=getattr(logging, settings.LOG_LEVEL.upper(), logging.INFO),
        format=settings.LOG_FORMAT,
        handlers=[logging.StreamHandler(sys.stderr)],
    )


def run(argv: Optional[List[str]] = None) -> int:
    """
    Parse arguments, run one subcommand and print its report.

    Args:
        argv: Arguments without the program name; defaults to sys.argv[1:]

    Returns:
        Exit code
    """
    _configure_logging()
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code not in (0, None) else EXIT_OK

    service = VerificationService()
    try:
        report = _execute(service, args)
        _emit(report, args.output)
        service.ensure_passed(report)
    except TheoremViolationError as e:
        logger.error(f"Theorem violation: {str(e)}")
        return EXIT_VIOLATION
    except VerificationError as e:
        logger.error(f"{type(e).__name__}: {str(e)}")
        return EXIT_USAGE
    except OSError as e:
        logger.error(f"Cannot read input: {str(e)}")
        return EXIT_USAGE
    return EXIT_OK


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
