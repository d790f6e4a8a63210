"""
命令列介面

    thompson-knots build product 3 4 2 5 -o elem.json
    thompson-knots psi elem.json -o pd.json
    thompson-knots verify product 3

結束碼：0 成功、1 驗證不一致、2 用法錯誤、3 領域錯誤。
"""

import argparse
import json
import sys
from typing import Callable, Dict, List, Optional, Sequence

from .application.dtos import (ChairDiagramDTO, DiagramDTO, ElementDTO,
                               LaurentDTO, MidlineGraphDTO, PlanarGraphDTO,
                               VerifyCaseDTO, VerifyReportDTO, dump_json,
                               parse_json)
from .core.exceptions import ThompsonKnotsError
from .core.logging import configure_logging, get_logger
from .infrastructure.adapters import BracketAdapterFactory
from .infrastructure.services.construction_service import (build_chair_diagram,
                                                           expand)
from .infrastructure.services.conway_parser import (parse_conway,
                                                    print_conway,
                                                    product_factors,
                                                    rational_fraction)
from .infrastructure.services.invariant_service import (goeritz_determinant,
                                                        jones_set,
                                                        kauffman_bracket,
                                                        link_class)
from .infrastructure.services.jones_map import psi, psi_prime
from .infrastructure.services.midline_layout import linearize, normalize
from .infrastructure.services.planar_diagram import (build_conway,
                                                     diagram_summary,
                                                     gauss_code)
from .infrastructure.services.render_service import (render_chairs,
                                                     render_tree_pair)
from .infrastructure.services.reverse_pipeline import (extract_signed_graph,
                                                       reverse)
from .infrastructure.services.verification_service import run_checks

logger = get_logger(__name__)

EXIT_OK, EXIT_MISMATCH, EXIT_USAGE, EXIT_DOMAIN = 0, 1, 2, 3


def _read(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    with open(path, encoding="utf-8") as handle:
        return handle.read()


def _write(text: str, path: Optional[str]) -> None:
    if path is None or path == "-":
        sys.stdout.write(text)
        return
    with open(path, "w", encoding="utf-8", newline="\n") as handle:
        handle.write(text)
    logger.info("Output written", path=path, size=len(text))


def _engine(args: argparse.Namespace):
    return BracketAdapterFactory.create_adapter(args.engine, max_crossings=args.max_crossings)


# ---- 子命令 ----

def cmd_parse(args: argparse.Namespace) -> int:
    expr = parse_conway(args.expression)
    lines = [print_conway(expr)]
    if args.fraction:
        fraction = rational_fraction(expr)
        lines.append(f"fraction {fraction.numerator}/{fraction.denominator}")
        lines.append(f"factors {' '.join(str(x) for x in product_factors(expr))}")
    _write("\n".join(lines) + "\n", args.out)
    return EXIT_OK


def cmd_build(args: argparse.Namespace) -> int:
    chairs = build_chair_diagram(args.kind, args.xs)
    if args.chairs:
        _write(dump_json(ChairDiagramDTO.from_domain(chairs)), args.out)
    else:
        _write(dump_json(ElementDTO.from_domain(expand(chairs))), args.out)
    return EXIT_OK


def cmd_expand(args: argparse.Namespace) -> int:
    chairs = parse_json(ChairDiagramDTO, _read(args.input)).to_domain()
    _write(dump_json(ElementDTO.from_domain(expand(chairs))), args.out)
    return EXIT_OK


def cmd_psi(args: argparse.Namespace) -> int:
    text = _read(args.input)
    if args.variant == "psi-prime":
        diagram = psi_prime(parse_json(ChairDiagramDTO, text).to_domain())
    else:
        diagram = psi(parse_json(ElementDTO, text).to_domain())
    _write(dump_json(DiagramDTO.from_domain(diagram)), args.out)
    return EXIT_OK


def cmd_invariant(args: argparse.Namespace) -> int:
    diagram = parse_json(DiagramDTO, _read(args.input)).to_domain()
    everything = not (args.bracket or args.jones or args.det)
    report: Dict[str, object] = dict(diagram_summary(diagram))
    if args.bracket or everything:
        report["bracket"] = LaurentDTO.from_domain(kauffman_bracket(diagram, _engine(args))).model_dump()
    if args.jones or everything:
        report["jones"] = [LaurentDTO.from_domain(p).model_dump() for p in sorted(jones_set(diagram, _engine(args)))]
    if args.det or everything:
        report["determinant"] = goeritz_determinant(diagram)
    _write(json.dumps(report, indent=2) + "\n", args.out)
    return EXIT_OK


def cmd_closure(args: argparse.Namespace) -> int:
    expr = parse_conway(args.expression)
    diagram = build_conway(expr)
    if args.gauss:
        _write("\n".join(gauss_code(diagram)) + "\n", args.out)
    else:
        _write(dump_json(DiagramDTO.from_domain(diagram)), args.out)
    return EXIT_OK


def cmd_reverse(args: argparse.Namespace) -> int:
    diagram = parse_json(DiagramDTO, _read(args.input)).to_domain()
    _write(dump_json(ElementDTO.from_domain(reverse(diagram))), args.out)
    return EXIT_OK


def cmd_graph(args: argparse.Namespace) -> int:
    text = _read(args.input)
    if args.step == "extract":
        graph = extract_signed_graph(parse_json(DiagramDTO, text).to_domain())
        _write(dump_json(PlanarGraphDTO.from_domain(graph)), args.out)
    elif args.step == "linearize":
        midline = linearize(parse_json(PlanarGraphDTO, text).to_domain())
        _write(dump_json(MidlineGraphDTO.from_domain(midline)), args.out)
    else:
        normal = normalize(parse_json(MidlineGraphDTO, text).to_domain())
        _write(dump_json(MidlineGraphDTO.from_domain(normal)), args.out)
    return EXIT_OK


def cmd_render(args: argparse.Namespace) -> int:
    text = _read(args.input)
    if args.svg == "chairs":
        svg = render_chairs(parse_json(ChairDiagramDTO, text).to_domain())
    else:
        svg = render_tree_pair(parse_json(ElementDTO, text).to_domain())
    _write(svg, args.out)
    return EXIT_OK


def cmd_verify(args: argparse.Namespace) -> int:
    results = run_checks(
        args.check, xs=args.xs, kind=args.kind, seed=args.seed, samples=args.samples, engine=_engine(args)
    )
    report = VerifyReportDTO(
        check=args.check,
        passed=all(result.equal for result in results),
        cases=[
            VerifyCaseDTO(
                name=result.name,
                left=[LaurentDTO.from_domain(p) for p in sorted(result.left)],
                right=[LaurentDTO.from_domain(p) for p in sorted(result.right)],
                equal=result.equal,
                link_class=link_class(result.right) if result.equal else None,
                detail=result.detail,
            )
            for result in results
        ],
    )
    if args.out:
        _write(dump_json(report), args.out)
    sys.stdout.write(report.summary())
    return EXIT_OK if report.passed else EXIT_MISMATCH


# ---- 參數解析 ----

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="thompson-knots", description="Thompson group F and Conway tangles")
    parser.add_argument("--max-crossings", type=int, default=None, help="bracket resource bound (default: engine setting)")
    parser.add_argument("--engine", choices=BracketAdapterFactory.get_available_engines(), default=None)
    parser.add_argument("--log-level", default=None, help="DEBUG, INFO, WARNING, ERROR")
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name: str, handler: Callable[[argparse.Namespace], int], help_text: str) -> argparse.ArgumentParser:
        command = sub.add_parser(name, help=help_text)
        command.add_argument("-o", "--out", default=None, help="output file (default: stdout)")
        command.set_defaults(handler=handler)
        return command

    command = add("parse", cmd_parse, "parse and print Conway notation")
    command.add_argument("expression")
    command.add_argument("--fraction", action="store_true", help="also print the rational fraction")

    command = add("build", cmd_build, "build T(x1..xn) or U(x1..xn)")
    command.add_argument("kind", choices=["product", "concat"])
    command.add_argument("xs", type=int, nargs="+")
    command.add_argument("--chairs", action="store_true", help="emit the chair diagram instead of the tree pair")

    command = add("expand", cmd_expand, "expand a chair diagram JSON to a tree pair")
    command.add_argument("input")

    command = add("psi", cmd_psi, "map a tree pair (psi) or chair diagram (psi-prime) to a PD code")
    command.add_argument("input")
    command.add_argument("--variant", choices=["psi", "psi-prime"], default="psi")

    command = add("invariant", cmd_invariant, "bracket, Jones set and determinant of a PD code")
    command.add_argument("input")
    command.add_argument("--bracket", action="store_true")
    command.add_argument("--jones", action="store_true")
    command.add_argument("--det", action="store_true")

    command = add("closure", cmd_closure, "PD code of a bracketed Conway expression")
    command.add_argument("expression")
    command.add_argument("--gauss", action="store_true", help="emit Gauss code text")

    command = add("reverse", cmd_reverse, "recover a tree pair from a PD code")
    command.add_argument("input")

    command = add("graph", cmd_graph, "run one step of the reverse pipeline")
    command.add_argument("step", choices=["extract", "linearize", "normalize"])
    command.add_argument("input")

    command = add("render", cmd_render, "draw a tree pair or chair diagram as SVG")
    command.add_argument("input")
    command.add_argument("--svg", choices=["tree-pair", "chairs"], default="tree-pair")

    command = add("verify", cmd_verify, "compare Jones sets along the construction paths")
    command.add_argument("check", choices=["product", "concat", "commute", "random"])
    command.add_argument("xs", type=int, nargs="*")
    command.add_argument("--kind", choices=["product", "concat"], default="product", help="family for commute")
    command.add_argument("--seed", type=int, default=None)
    command.add_argument("--samples", type=int, default=10)
    return parser


def run(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exit_:
        return EXIT_USAGE if exit_.code not in (0, None) else EXIT_OK
    configure_logging(args.log_level)
    try:
        return args.handler(args)
    except ThompsonKnotsError as error:
        logger.error("Command failed", command=args.command, error=type(error).__name__)
        sys.stderr.write(f"error: {error}\n")
        return EXIT_DOMAIN
    except OSError as error:
        sys.stderr.write(f"error: {error}\n")
        return EXIT_USAGE


def main(argv: Optional[List[str]] = None) -> None:
    sys.exit(run(argv))


if __name__ == "__main__":
    main()
