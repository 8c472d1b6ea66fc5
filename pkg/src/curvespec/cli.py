"""Command-line interface.

Subcommands: ``compute`` (spectrum of an arrangement file), ``check``
(randomized cross-validation of the combinatorial formulas against the
characteristic-class pipeline), ``lines`` (spectrum of an explicit line
arrangement), ``examples`` (three built-in worked fixtures).

Exit codes are a stable contract: 0 success, 1 unreadable or malformed
input, 2 well-formed input describing invalid data, 3 verification
mismatch between pipelines.  Results go to standard output, diagnostics to
standard error.
"""

from __future__ import annotations

import argparse
import json
import sys

from .arrangement import (
    ArrangementFormatError,
    ArrangementGraph,
    Branch,
    Component,
    InvalidArrangementError,
    SingularPoint,
    graph_to_dict,
    load_arrangement,
)
from .formulas import (
    spectrum_general,
    spectrum_hyperplane,
    spectrum_irreducible_power,
    spectrum_reduced,
    spectrum_smooth_components,
)
from .lines import LineFileError, ZeroFormError, incidence_graph, load_lines
from .randomgraphs import (
    GraphBounds,
    SplitMix64,
    generate_graph,
    insert_smooth_point,
    insert_snc_node,
)
from .riemann_roch import spectrum_via_riemann_roch
from .spectrum import format_spectrum

__all__ = ["main"]


class VerificationMismatch(Exception):
    """Two pipelines that must agree produced different spectra."""


def _auto_dispatch(graph: ArrangementGraph):
    """Most specific applicable formula, cross-checked against the general
    one at runtime."""
    if all(c.degree == 1 for c in graph.components):
        result, name = spectrum_hyperplane(graph), "hyperplane"
    elif all(br.mult == 1 for p in graph.points for br in p.branches):
        result, name = spectrum_smooth_components(graph), "smooth"
    elif graph.is_reduced():
        result, name = spectrum_reduced(graph), "reduced"
    else:
        return spectrum_general(graph)
    general = spectrum_general(graph)
    if result != general:
        raise VerificationMismatch(
            f"auto-dispatched {name} formula disagrees with the general formula: "
            f"{format_spectrum(result)} vs {format_spectrum(general)}"
        )
    return result


_FORMULAS = {
    "auto": _auto_dispatch,
    "general": spectrum_general,
    "reduced": spectrum_reduced,
    "smooth": spectrum_smooth_components,
    "hyperplane": spectrum_hyperplane,
}


def cmd_compute(args) -> int:
    graph = load_arrangement(args.file)
    result = _FORMULAS[args.formula](graph)
    if args.verify:
        oracle = spectrum_via_riemann_roch(graph)
        if oracle != result:
            raise VerificationMismatch(
                "characteristic-class pipeline disagrees: "
                f"{format_spectrum(result)} vs {format_spectrum(oracle)}"
            )
    print(format_spectrum(result, args.style))
    return 0


def _single_component_power_spectrum(graph: ArrangementGraph):
    comp = graph.components[0]
    mults = [p.branches[0].mult for p in graph.points if p.branches[0].mult >= 2]
    return spectrum_irreducible_power(comp.degree, comp.multiplicity, mults)


def _check_one(graph: ArrangementGraph, rng: SplitMix64) -> list[str]:
    """All cross-validations applicable to one graph; returns failure labels.

    Draw order after the graph itself: two draws for the extra simple node
    when the graph has >= 2 components, then one draw for the extra smooth
    point.
    """
    failures = []
    base = spectrum_general(graph)
    if spectrum_via_riemann_roch(graph) != base:
        failures.append("general vs characteristic-class pipeline")
    if graph.is_reduced() and spectrum_reduced(graph) != base:
        failures.append("general vs reduced formula")
    if all(br.mult == 1 for p in graph.points for br in p.branches):
        if spectrum_smooth_components(graph) != base:
            failures.append("general vs smooth-components formula")
    if all(c.degree == 1 for c in graph.components):
        if spectrum_hyperplane(graph) != base:
            failures.append("general vs hyperplane formula")
    if len(graph.components) == 1:
        # Multiplicity-1 points are formula-neutral, so dropping them keeps
        # the single-curve power formula applicable.
        if _single_component_power_spectrum(graph) != base:
            failures.append("general vs single-curve power formula")
    if len(graph.components) >= 2:
        if spectrum_general(insert_snc_node(graph, rng)) != base:
            failures.append("invariance under adding a simple node")
    if spectrum_general(insert_smooth_point(graph, rng)) != base:
        failures.append("invariance under adding a smooth point")
    return failures


def cmd_check(args) -> int:
    bounds = GraphBounds(
        max_components=args.max_components,
        max_points=args.max_points,
        max_degree=args.max_degree,
        max_mult=args.max_mult,
    )
    rng = SplitMix64(args.seed)
    passed = 0
    failed_any = False
    for index in range(args.count):
        graph = generate_graph(rng, bounds)
        failures = _check_one(graph, rng)
        if failures:
            failed_any = True
            for label in failures:
                print(f"instance {index}: {label}", file=sys.stderr)
            print(json.dumps(graph_to_dict(graph)), file=sys.stderr)
        else:
            passed += 1
    print(f"{passed}/{args.count} ok")
    return 3 if failed_any else 0


def cmd_lines(args) -> int:
    forms = load_lines(args.file)
    graph = incidence_graph(forms)
    if args.emit_graph:
        with open(args.emit_graph, "w", encoding="utf-8") as fh:
            json.dump(graph_to_dict(graph), fh, indent=2)
            fh.write("\n")
    result = spectrum_hyperplane(graph)
    print(format_spectrum(result, args.style))
    return 0


_EXAMPLES = (
    (
        "nodal-cubic",
        "irreducible cubic with one ordinary double point",
        ArrangementGraph(
            (Component("c", 3),),
            (SingularPoint("v", (Branch("c", 2),)),),
        ),
    ),
    (
        "line-and-nodal-cubic",
        "nodal cubic plus a line through the node and one more crossing",
        ArrangementGraph(
            (Component("line", 1), Component("cubic", 3)),
            (
                SingularPoint("v1", (Branch("line", 1), Branch("cubic", 2))),
                SingularPoint("v2", (Branch("line", 1), Branch("cubic", 1))),
            ),
        ),
    ),
    (
        "double-lines",
        "two distinct lines, each squared, crossing once",
        ArrangementGraph(
            (Component("l1", 1, 2), Component("l2", 1, 2)),
            (SingularPoint("v", (Branch("l1", 1), Branch("l2", 1))),),
        ),
    ),
)


def cmd_examples(args) -> int:
    for name, description, graph in _EXAMPLES:
        print(f"{name}: {description}")
        print(f"  arrangement: {json.dumps(graph_to_dict(graph))}")
        print(f"  spectrum: {format_spectrum(spectrum_general(graph))}")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="curvespec",
        description="Exact Hodge spectra of plane curve arrangements from combinatorial data.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_compute = sub.add_parser("compute", help="spectrum of an arrangement file")
    p_compute.add_argument("file", help="arrangement JSON file")
    p_compute.add_argument(
        "--formula",
        choices=sorted(_FORMULAS),
        default="auto",
        help="formula to apply; auto picks the most specific one and cross-checks it",
    )
    p_compute.add_argument("--style", choices=("plain", "latex", "json"), default="plain")
    p_compute.add_argument(
        "--verify",
        action="store_true",
        help="also run the characteristic-class pipeline and fail on mismatch",
    )
    p_compute.set_defaults(func=cmd_compute)

    p_check = sub.add_parser("check", help="randomized cross-validation of all pipelines")
    p_check.add_argument("--count", type=int, default=100, help="number of random graphs")
    p_check.add_argument("--seed", type=int, default=0, help="64-bit generator seed")
    p_check.add_argument("--max-components", type=int, default=5)
    p_check.add_argument("--max-points", type=int, default=8)
    p_check.add_argument("--max-degree", type=int, default=4)
    p_check.add_argument("--max-mult", type=int, default=4)
    p_check.set_defaults(func=cmd_check)

    p_lines = sub.add_parser("lines", help="spectrum of an explicit line arrangement")
    p_lines.add_argument("file", help="line-arrangement JSON file")
    p_lines.add_argument("--style", choices=("plain", "latex", "json"), default="plain")
    p_lines.add_argument("--emit-graph", metavar="PATH", help="write the derived arrangement file")
    p_lines.set_defaults(func=cmd_lines)

    p_examples = sub.add_parser("examples", help="print built-in worked fixtures")
    p_examples.set_defaults(func=cmd_examples)

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (ArrangementFormatError, LineFileError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except InvalidArrangementError as exc:
        for code, message, location in exc.report.errors:
            print(f"error [{code}] {location}: {message}", file=sys.stderr)
        return 2
    except (ZeroFormError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except VerificationMismatch as exc:
        print(f"mismatch: {exc}", file=sys.stderr)
        return 3


if __name__ == "__main__":
    sys.exit(main())
