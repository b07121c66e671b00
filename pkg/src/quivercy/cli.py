"""Command-line interface.

Subcommands: validate, minrel, resolve, ext, hom, check, potential.
Exit status: 0 pass/success, 1 check failed, 2 input error,
3 undetermined at the working truncation.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from . import reports
from .cy import (
    FAIL,
    PASS,
    UNDETERMINED,
    check_component_sum,
    check_cy,
    derive_relations,
)
from .parser import InputDocument, ParseError, parse
from .relations import (
    ApproximateModeError,
    InhomogeneousRelationsError,
    RelationError,
    RelationSet,
    TruncationBoundError,
    locally_finite_check,
    minimal_relations,
)
from .resolution import (
    build_resolution_fragment,
    build_right_fragment,
    ext_dims,
    hom_injectives,
    verify_complex,
    verify_exactness_middle,
)

EXIT_OK = 0
EXIT_FAIL = 1
EXIT_INPUT = 2
EXIT_UNDETERMINED = 3


def _build_arg_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="quivercy",
        description=(
            "Path coalgebras of quivers with relations: minimal relation "
            "sets, injective resolution fragments, Ext tables, and "
            "Calabi-Yau necessary-condition checks over exact rationals."
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(p):
        p.add_argument("input", nargs="?", default="-",
                       help="input file (default: stdin)")
        p.add_argument("--format", choices=("text", "structured"), default="text",
                       help="report format (default: text)")

    p = sub.add_parser("validate", help="parse and validate a document")
    add_common(p)

    p = sub.add_parser("minrel", help="extract a minimal relation set")
    add_common(p)
    p.add_argument("--max-degree", type=int, default=None)

    p = sub.add_parser("resolve", help="build and verify a resolution fragment")
    add_common(p)
    p.add_argument("--vertex", required=True)
    p.add_argument("--max-degree", type=int, default=None)
    p.add_argument("--right", action="store_true",
                   help="right-comodule version of the fragment")
    p.add_argument("--assume-minimal", action="store_true")

    p = sub.add_parser("ext", help="Ext dimension table between the simples")
    add_common(p)
    p.add_argument("--max-degree", type=int, default=None)
    p.add_argument("--assume-minimal", action="store_true")

    p = sub.add_parser("hom", help="hom space between two injectives, by degree")
    add_common(p)
    p.add_argument("--from", dest="source", required=True, metavar="J")
    p.add_argument("--to", dest="target", required=True, metavar="I")
    p.add_argument("--max-degree", type=int, default=None)

    p = sub.add_parser("check", help="Calabi-Yau necessary-condition check")
    add_common(p)
    p.add_argument("--dim", type=int, required=True, choices=(0, 1, 2, 3))
    p.add_argument("--max-degree", type=int, default=None)
    p.add_argument("--per-component", action="store_true",
                   help="check each connected component and report all")
    p.add_argument("--assume-minimal", action="store_true",
                   help="skip the minimal-relations pass")

    p = sub.add_parser("potential", help="superpotential utilities")
    add_common(p)
    p.add_argument("--derive", action="store_true",
                   help="emit the cyclic derivatives as rel declarations")

    return parser


def _read_document(path: str) -> InputDocument:
    if path == "-":
        text = sys.stdin.read()
    else:
        text = Path(path).read_text(encoding="utf-8")
    return parse(text)


def _default_bound(relations: RelationSet) -> int:
    return max(4, 2 * relations.max_degree)


def _minimalize(doc: InputDocument, bound: int, assume_minimal: bool,
                notices: list[str]) -> RelationSet:
    if assume_minimal or doc.generators.is_empty:
        return doc.generators
    try:
        return minimal_relations(doc.generators, bound)
    except InhomogeneousRelationsError:
        notices.append(
            "approximate mode: inhomogeneous relations were minimized by "
            "top degree only; certified checks will be undetermined"
        )
        return minimal_relations(doc.generators, bound, mode="filtered")


def run(argv) -> tuple[int, str]:
    """Run one command; returns (exit status, report text)."""
    parser = _build_arg_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:  # argparse already printed usage
        return (EXIT_INPUT if exc.code else EXIT_OK), ""

    try:
        doc = _read_document(args.input)
    except ParseError as exc:
        return EXIT_INPUT, f"input error: {exc}\n"
    except OSError as exc:
        return EXIT_INPUT, f"input error: {exc}\n"

    try:
        return _dispatch(args, doc)
    except (ParseError, RelationError, TruncationBoundError, ValueError) as exc:
        return EXIT_INPUT, f"input error: {exc}\n"


def _dispatch(args, doc: InputDocument) -> tuple[int, str]:
    if args.command == "validate":
        if args.format == "structured":
            return EXIT_OK, reports.emit_structured(reports.document_payload(doc))
        return EXIT_OK, reports.render_document_summary(doc)

    if args.command == "minrel":
        bound = args.max_degree or _default_bound(doc.generators)
        notices: list[str] = []
        minimal = _minimalize(doc, bound, False, notices)
        approximate = not doc.generators.homogeneous
        if args.format == "structured":
            text = reports.emit_structured(reports.relations_payload(minimal, approximate))
        else:
            text = "".join(f"# {n}\n" for n in notices)
            text += reports.render_relation_decls(minimal)
            counts = reports.render_local_finiteness(locally_finite_check(minimal))
            text += "# per-pair relation counts\n" + "".join(
                f"# {line}\n" for line in counts.strip().splitlines()
            )
        return (EXIT_UNDETERMINED if approximate else EXIT_OK), text

    if args.command == "resolve":
        bound = args.max_degree or _default_bound(doc.generators)
        notices: list[str] = []
        relations = _minimalize(doc, bound, args.assume_minimal, notices)
        if not doc.quiver.has_vertex(args.vertex):
            return EXIT_INPUT, f"input error: unknown vertex {args.vertex}\n"
        build = build_right_fragment if args.right else build_resolution_fragment
        frag = build(doc.quiver, args.vertex, relations, bound)
        try:
            complex_check = verify_complex(frag)
            exactness = verify_exactness_middle(frag)
        except ApproximateModeError as exc:
            return EXIT_UNDETERMINED, f"undetermined: {exc}\n"
        passed = complex_check.passed and exactness.passed
        if args.format == "structured":
            payload = {
                "check": "resolve",
                "fragment": reports.fragment_payload(frag),
                "complex": complex_check.to_payload(),
                "exactness": exactness.to_payload(),
                "passed": passed,
            }
            return (EXIT_OK if passed else EXIT_FAIL), reports.emit_structured(payload)
        text = "".join(f"# {n}\n" for n in notices)
        text += reports.render_fragment(frag)
        text += reports.render_complex_check(complex_check)
        text += reports.render_exactness(exactness)
        return (EXIT_OK if passed else EXIT_FAIL), text

    if args.command == "ext":
        bound = args.max_degree or _default_bound(doc.generators)
        notices: list[str] = []
        relations = _minimalize(doc, bound, args.assume_minimal, notices)
        try:
            table = ext_dims(doc.quiver, relations)
        except ApproximateModeError as exc:
            return EXIT_UNDETERMINED, f"undetermined: {exc}\n"
        if args.format == "structured":
            return EXIT_OK, reports.emit_structured(table.to_payload())
        text = "".join(f"# {n}\n" for n in notices)
        return EXIT_OK, text + reports.render_ext_table(table)

    if args.command == "hom":
        bound = args.max_degree or _default_bound(doc.generators)
        for v in (args.source, args.target):
            if not doc.quiver.has_vertex(v):
                return EXIT_INPUT, f"input error: unknown vertex {v}\n"
        profile = hom_injectives(doc.quiver, doc.generators,
                                 args.target, args.source, bound)
        if args.format == "structured":
            return EXIT_OK, reports.emit_structured(profile.to_payload())
        status = EXIT_UNDETERMINED if profile.approximate else EXIT_OK
        return status, reports.render_hom_profile(profile)

    if args.command == "check":
        bound = args.max_degree or _default_bound(doc.generators)
        notices: list[str] = []
        relations = _minimalize(doc, bound, args.assume_minimal, notices)
        if args.per_component:
            report = check_component_sum(doc.quiver, relations, args.dim, bound)
        else:
            report = check_cy(doc.quiver, relations, args.dim, bound)
        status = {PASS: EXIT_OK, FAIL: EXIT_FAIL, UNDETERMINED: EXIT_UNDETERMINED}
        if args.format == "structured":
            return status[report.status], reports.emit_structured(report.to_payload())
        text = "".join(f"# {n}\n" for n in notices)
        return status[report.status], text + reports.render_cy_report(report)

    if args.command == "potential":
        if doc.potential is None:
            return EXIT_INPUT, "input error: document declares no potential\n"
        name, pot = doc.potential
        if not args.derive:
            return EXIT_OK, f"potential {name} = {pot.vector.render()}\n"
        derived = derive_relations(pot, name_prefix=name)
        if args.format == "structured":
            payload = {
                "check": "potential-derive",
                "potential": name,
                "relations": [
                    {"name": rel_name, "element": vec.render()}
                    for rel_name, vec in derived
                ],
            }
            return EXIT_OK, reports.emit_structured(payload)
        text = "".join(f"rel {rel_name} = {vec.render()}\n" for rel_name, vec in derived)
        return EXIT_OK, text or "# all cyclic derivatives vanish\n"

    raise AssertionError(f"unhandled command {args.command}")  # pragma: no cover


def main(argv=None) -> int:
    code, text = run(sys.argv[1:] if argv is None else argv)
    if text:
        stream = sys.stderr if code == EXIT_INPUT else sys.stdout
        stream.write(text)
    return code


if __name__ == "__main__":  # pragma: no cover
    raise SystemExit(main())
