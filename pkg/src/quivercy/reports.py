"""Human-readable and machine-readable report emission.

Text reports use a stable ordering; structured reports are JSON with
sorted keys, so identical inputs yield byte-identical output.
"""

from __future__ import annotations

import json

from .cy import CyReport
from .parser import InputDocument
from .relations import LocalFinitenessReport, RelationSet
from .resolution import ComplexCheck, ExactnessCheck, ExtTable, HomProfile, ResolutionFragment


def emit_structured(payload: dict) -> str:
    return json.dumps(payload, sort_keys=True, indent=2, ensure_ascii=True) + "\n"


def render_document_summary(doc: InputDocument) -> str:
    lines = [
        f"vertices: {len(doc.quiver.vertices)} ({', '.join(doc.quiver.vertices)})",
        f"arrows:   {len(doc.quiver.arrows)}",
    ]
    for a in doc.quiver.arrows:
        lines.append(f"  arrow {a.name} : {a.source} -> {a.target}")
    lines.append(f"relations: {len(doc.generators)}")
    for r in doc.generators:
        lines.append(f"  rel {r.name} = {r.element.render()}")
    if doc.potential is not None:
        name, pot = doc.potential
        lines.append(f"potential {name} = {pot.vector.render()}")
    lines.append("document is valid")
    return "\n".join(lines) + "\n"


def document_payload(doc: InputDocument) -> dict:
    payload = {
        "check": "validate",
        "vertices": list(doc.quiver.vertices),
        "arrows": [
            {"name": a.name, "source": a.source, "target": a.target}
            for a in doc.quiver.arrows
        ],
        "relations": [
            {"name": r.name, "element": r.element.render()} for r in doc.generators
        ],
        "valid": True,
    }
    if doc.potential is not None:
        payload["potential"] = {
            "name": doc.potential[0],
            "element": doc.potential[1].vector.render(),
        }
    return payload


def render_relation_decls(relations: RelationSet) -> str:
    if relations.is_empty:
        return "# no relations\n"
    return "".join(f"rel {r.name} = {r.element.render()}\n" for r in relations)


def relations_payload(relations: RelationSet, approximate: bool) -> dict:
    return {
        "check": "minimal-relations",
        "approximate": approximate,
        "relations": [
            {
                "name": r.name,
                "element": r.element.render(),
                "source": r.source,
                "target": r.target,
                "degrees": list(r.element.degrees()),
            }
            for r in relations
        ],
    }


def render_local_finiteness(report: LocalFinitenessReport) -> str:
    if not report.counts:
        return "no relations\n"
    lines = [f"relations {s} -> {t}: {n}" for s, t, n in report.counts]
    return "\n".join(lines) + "\n"


def render_fragment(frag: ResolutionFragment) -> str:
    side = "left" if frag.side == "left" else "right"
    envelope = f"e_{frag.vertex}C" if side == "left" else f"Ce_{frag.vertex}"
    lines = [f"{side} resolution fragment at vertex {frag.vertex}:"]
    lines.append(f"  socle term: simple at {frag.vertex} inside {envelope}")
    if frag.term1:
        summands = ", ".join(
            (f"e_{w}C [{name}]" if side == "left" else f"Ce_{w} [{name}]")
            for name, w in frag.term1
        )
    else:
        summands = "(none)"
    lines.append(f"  arrow term: {summands}")
    if frag.term2:
        summands = ", ".join(
            (f"e_{w}C [{name}]" if side == "left" else f"Ce_{w} [{name}]")
            for name, w in frag.term2
        )
    else:
        summands = "(none)"
    lines.append(f"  relation term: {summands}")
    return "\n".join(lines) + "\n"


def fragment_payload(frag: ResolutionFragment) -> dict:
    return {
        "vertex": frag.vertex,
        "side": frag.side,
        "truncation": frag.truncation,
        "arrow_summands": [{"index": n, "vertex": w} for n, w in frag.term1],
        "relation_summands": [{"index": n, "vertex": w} for n, w in frag.term2],
    }


def render_complex_check(check: ComplexCheck) -> str:
    status = "pass" if check.passed else "fail"
    lines = [
        f"composite-vanishes: {status} "
        f"({check.checked} basis vectors up to degree {check.truncation})"
    ]
    if check.witness:
        lines.append(f"  witness: {check.witness}")
    return "\n".join(lines) + "\n"


def render_exactness(check: ExactnessCheck) -> str:
    lines = [f"socle-kernel: {'pass' if check.socle_ok else 'fail'}"]
    for m in check.middle:
        verdict = "pass" if m.matched else "fail"
        lines.append(
            f"exact at arrow term, degree {m.degree}: {verdict} "
            f"(image rank {m.image_rank}, kernel rank {m.kernel_rank})"
        )
    lines.append(f"exactness: {'pass' if check.passed else 'fail'}")
    return "\n".join(lines) + "\n"


def render_ext_table(table: ExtTable) -> str:
    vs = table.vertices
    width = max([len(v) for v in vs] + [3])
    lines = [
        "rows j / columns i: entry is dim Ext^k(S_j, S_i) "
        "(transpose for the opposite orientation)"
    ]
    for k in sorted(table.levels):
        lines.append(f"Ext^{k}:")
        header = " " * (width + 2) + " ".join(f"{i:>{width}}" for i in vs)
        lines.append(header)
        for j in vs:
            row = " ".join(f"{table.entry(k, j, i):>{width}}" for i in vs)
            lines.append(f"  {j:>{width}} {row}")
    return "\n".join(lines) + "\n"


def render_hom_profile(profile: HomProfile) -> str:
    lines = [
        f"Hom from the injective at {profile.target_vertex} to the injective "
        f"at {profile.source_vertex} (paths {profile.source_vertex} -> "
        f"{profile.target_vertex}):"
    ]
    if profile.approximate:
        lines.append("  approximate mode: dimensions are upper bounds")
    for d, dim in enumerate(profile.dims):
        lines.append(f"  degree {d}: {dim}")
    return "\n".join(lines) + "\n"


def render_cy_report(report: CyReport) -> str:
    lines = []
    scope = (
        "full characterization"
        if report.dimension in (0, 1)
        else "necessary conditions only; pass = not refuted up to the truncation"
    )
    head = f"cy-{report.dimension} check"
    if report.truncation is not None:
        head += f" (truncation {report.truncation})"
    lines.append(f"{head}: {report.status.upper()}")
    lines.append(f"  scope: {scope}")
    for cond in report.conditions:
        entry = f"  {cond.name}: {cond.status}"
        if cond.witness:
            entry += f" -- {cond.witness}"
        lines.append(entry)
    for vs, sub in zip(report.component_vertices, report.components):
        lines.append(f"  component {{{', '.join(vs)}}}: {sub.status}")
        for cond in sub.conditions:
            entry = f"    {cond.name}: {cond.status}"
            if cond.witness:
                entry += f" -- {cond.witness}"
            lines.append(entry)
    extras = report.extras
    if extras.get("nu"):
        lines.append("  correspondence:")
        for arrow, rel in sorted(extras["nu"].items()):
            lines.append(f"    {arrow} |-> {rel}")
    if extras.get("rho"):
        for block, value in sorted(extras["rho"].items()):
            lines.append(f"  ratio {block}: {value}")
    if extras.get("lambda"):
        for vertex, value in sorted(extras["lambda"].items()):
            lines.append(f"  vertex scalar {vertex}: {value}")
    if "mirror_count_balance" in extras:
        lines.append(
            "  right-sided count balance (reported, not part of the verdict): "
            f"{'holds' if extras['mirror_count_balance'] else 'fails'}"
        )
    return "\n".join(lines) + "\n"
