"""Injective resolution fragments of simple comodules, and their checks.

For a vertex n the fragment is the start of the minimal injective
resolution of the simple comodule at n: the injective envelope, one
summand per arrow ending at n, and one summand per relation ending at n.
The two maps strip a trailing arrow and a trailing relation-quotient
respectively (leading, for the right-comodule version).  Everything is
verified degree-wise with exact rational arithmetic.
"""

from __future__ import annotations

from dataclasses import dataclass, field, replace
from fractions import Fraction
from typing import Mapping, Sequence

from .algebra import PathVector, iota_left_action, iota_right_action, left_quotient, right_quotient
from .linalg import RowSpace, SpanSolver
from .quiver import Path, Quiver
from .relations import (
    ApproximateModeError,
    IdealTruncation,
    RelationSet,
    assert_minimal,
)


@dataclass(frozen=True)
class ResolutionFragment:
    """Start of the minimal injective resolution of one simple comodule.

    ``term1``/``term2`` list (index, vertex) pairs: summands are indexed
    by arrows and relations, never merged by vertex, so parallel arrows
    give distinct summands.  ``g_relations`` normally equals ``relations``
    and exists so tests can corrupt the second map independently of the
    coalgebra the fragment lives in.
    """

    quiver: Quiver
    vertex: str
    relations: RelationSet
    truncation: int
    side: str  # "left" | "right"
    term1: tuple[tuple[str, str], ...]
    term2: tuple[tuple[str, str], ...]
    g_relations: RelationSet

    def apply_f(self, x: PathVector) -> dict[str, PathVector]:
        """First map: one stripped component per term1 arrow."""
        out = {}
        for name, _ in self.term1:
            arrow = PathVector.unit(self.quiver, self.quiver.path([name]))
            if self.side == "left":
                out[name] = iota_left_action(arrow, x)
            else:
                out[name] = iota_right_action(x, arrow)
        return out

    def apply_g(self, components: Mapping[str, PathVector]) -> dict[str, PathVector]:
        """Second map, evaluated on a term1 tuple of components."""
        out = {name: PathVector.zero(self.quiver) for name, _ in self.term2}
        rel_by_name = {r.name: r for r in self.g_relations}
        for arrow_name, _ in self.term1:
            x = components.get(arrow_name)
            if x is None or x.is_zero():
                continue
            arrow_path = self.quiver.path([arrow_name])
            for rel_name, _ in self.term2:
                rel = rel_by_name[rel_name]
                if self.side == "left":
                    quot = right_quotient(rel.element, arrow_path)
                    if not quot.is_zero():
                        out[rel_name] = out[rel_name] + iota_left_action(quot, x)
                else:
                    quot = left_quotient(rel.element, arrow_path)
                    if not quot.is_zero():
                        out[rel_name] = out[rel_name] + iota_right_action(x, quot)
        return out

    def with_g_relations(self, g_relations: RelationSet) -> "ResolutionFragment":
        """Same fragment with a replaced second map (for corruption tests)."""
        term2 = _term2_for(g_relations, self.vertex, self.side)
        return replace(self, g_relations=g_relations, term2=term2)


def _term2_for(relations: RelationSet, vertex: str, side: str):
    if side == "left":
        return tuple((r.name, r.source) for r in relations.by_target(vertex))
    return tuple((r.name, r.target) for r in relations.by_source(vertex))


def build_resolution_fragment(quiver: Quiver, vertex: str, relations: RelationSet,
                              truncation: int) -> ResolutionFragment:
    """Left-comodule fragment at a vertex: summands e_{s(a)}C for arrows
    a ending there and e_{s(r)}C for relations r ending there."""
    if not quiver.has_vertex(vertex):
        raise ValueError(f"vertex {vertex} not in quiver")
    term1 = tuple((a.name, a.source) for a in quiver.arrows_into(vertex))
    term2 = _term2_for(relations, vertex, "left")
    return ResolutionFragment(quiver, vertex, relations, truncation, "left",
                              term1, term2, relations)


def build_right_fragment(quiver: Quiver, vertex: str, relations: RelationSet,
                         truncation: int) -> ResolutionFragment:
    """Right-comodule fragment: summands Ce_{t(a)} for arrows a starting
    at the vertex and Ce_{t(r)} for relations r starting there."""
    if not quiver.has_vertex(vertex):
        raise ValueError(f"vertex {vertex} not in quiver")
    term1 = tuple((a.name, a.target) for a in quiver.arrows_from(vertex))
    term2 = _term2_for(relations, vertex, "right")
    return ResolutionFragment(quiver, vertex, relations, truncation, "right",
                              term1, term2, relations)


# -- degree-wise bases of the coalgebra ---------------------------------------


def _truncation_for(frag: ResolutionFragment, bound: int) -> IdealTruncation:
    if not frag.relations.homogeneous:
        raise ApproximateModeError(
            "approximate mode: inhomogeneous relations do not certify "
            "degree-wise coalgebra bases"
        )
    return IdealTruncation(frag.quiver, frag.relations.elements(),
                           max(bound, frag.relations.max_degree))


def _envelope_basis(trunc: IdealTruncation, quiver: Quiver, vertex: str,
                    degree: int, side: str) -> list[PathVector]:
    """Basis of the degree component of e_vC (left) or Ce_v (right)."""
    basis: list[PathVector] = []
    for other in quiver.vertices:
        if side == "left":
            basis.extend(trunc.complement_basis(degree, other, vertex))
        else:
            basis.extend(trunc.complement_basis(degree, vertex, other))
    return basis


# -- complex property ----------------------------------------------------------


@dataclass(frozen=True)
class ComplexCheck:
    """Outcome of checking that the two maps compose to zero."""

    vertex: str
    side: str
    truncation: int
    passed: bool
    checked: int
    witness: str | None = None

    def to_payload(self) -> dict:
        return {
            "check": "complex",
            "vertex": self.vertex,
            "side": self.side,
            "truncation": self.truncation,
            "passed": self.passed,
            "vectors_checked": self.checked,
            "witness": self.witness,
        }


def verify_complex(frag: ResolutionFragment, bound: int | None = None) -> ComplexCheck:
    """Evaluate the composite of the two maps on every basis vector of the
    envelope up to the bound; passes iff all values vanish."""
    n = frag.truncation if bound is None else bound
    trunc = _truncation_for(frag, n)
    checked = 0
    for degree in range(n + 1):
        for vec in _envelope_basis(trunc, frag.quiver, frag.vertex, degree, frag.side):
            checked += 1
            image = frag.apply_g(frag.apply_f(vec))
            for rel_name, component in sorted(image.items()):
                if not component.is_zero():
                    witness = (
                        f"degree {degree}: input {vec.render()} maps to "
                        f"{component.render()} in the summand of relation {rel_name}"
                    )
                    return ComplexCheck(frag.vertex, frag.side, n, False, checked, witness)
    return ComplexCheck(frag.vertex, frag.side, n, True, checked)


# -- exactness ------------------------------------------------------------------


@dataclass(frozen=True)
class DegreeExactness:
    degree: int
    image_rank: int
    kernel_rank: int
    matched: bool


@dataclass(frozen=True)
class ExactnessCheck:
    """Degree-wise exactness at the arrow-indexed term, plus the check that
    the first map's kernel is exactly the simple socle."""

    vertex: str
    side: str
    truncation: int
    passed: bool
    middle: tuple[DegreeExactness, ...]
    socle_ok: bool

    def to_payload(self) -> dict:
        return {
            "check": "exactness",
            "vertex": self.vertex,
            "side": self.side,
            "truncation": self.truncation,
            "passed": self.passed,
            "socle_ok": self.socle_ok,
            "middle": [
                {
                    "degree": m.degree,
                    "image_rank": m.image_rank,
                    "kernel_rank": m.kernel_rank,
                    "matched": m.matched,
                }
                for m in self.middle
            ],
        }


def _term1_columns(frag: ResolutionFragment, degree: int):
    """Ambient coordinates of the arrow-indexed term at one degree."""
    cols: dict[tuple[str, Path], int] = {}
    for name, w in frag.term1:
        if frag.side == "left":
            paths = frag.quiver.enumerate_paths(degree, target=w)
        else:
            paths = frag.quiver.enumerate_paths(degree, source=w)
        for p in paths:
            cols[(name, p)] = len(cols)
    return cols


def _term2_row(frag: ResolutionFragment, image: Mapping[str, PathVector]):
    """Encode a term2 tuple into a single sparse row (mixed degrees ok)."""
    row: dict[tuple[str, Path], Fraction] = {}
    for rel_name, vec in image.items():
        for p, c in vec.items():
            row[(rel_name, p)] = c
    return row


def _intern_columns(rows: list[dict]) -> list[dict[int, Fraction]]:
    index: dict = {}
    out = []
    for row in rows:
        enc = {}
        for key, value in row.items():
            col = index.setdefault(key, len(index))
            enc[col] = value
        out.append(enc)
    return out


def verify_exactness_middle(frag: ResolutionFragment, bound: int | None = None) -> ExactnessCheck:
    """Rank-certified exactness: per degree d < bound the image of the first
    map equals the kernel of the second inside the arrow-indexed term, and
    the first map's kernel is one-dimensional in degree 0 and zero above."""
    n = frag.truncation if bound is None else bound
    trunc = _truncation_for(frag, n)

    # kernel of f degree by degree (socle check)
    socle_ok = True
    for degree in range(n + 1):
        domain = _envelope_basis(trunc, frag.quiver, frag.vertex, degree, frag.side)
        solver = SpanSolver()
        cols = _term1_columns(frag, degree - 1) if degree >= 1 else {}
        for vec in domain:
            comps = frag.apply_f(vec)
            row = {}
            for name, _ in frag.term1:
                for p, c in comps[name].items():
                    row[cols[(name, p)]] = c
            solver.insert(row)
        kernel_dim = len(solver.kernel)
        if kernel_dim != (1 if degree == 0 else 0):
            socle_ok = False

    middle = []
    for degree in range(n):
        # image of f at this term1 degree
        cols = _term1_columns(frag, degree)
        image = RowSpace()
        for vec in _envelope_basis(trunc, frag.quiver, frag.vertex, degree + 1, frag.side):
            comps = frag.apply_f(vec)
            row = {}
            for name, _ in frag.term1:
                for p, c in comps[name].items():
                    row[cols[(name, p)]] = c
            image.insert(row)

        # kernel of g on the coalgebra blocks of the term1 summands
        domain: list[tuple[str, PathVector]] = []
        for name, w in frag.term1:
            for vec in _envelope_basis(trunc, frag.quiver, w, degree, frag.side):
                domain.append((name, vec))
        solver = SpanSolver()
        raw_rows = []
        for name, vec in domain:
            raw_rows.append(_term2_row(frag, frag.apply_g({name: vec})))
        for enc in _intern_columns(raw_rows):
            solver.insert(enc)
        kernel = RowSpace()
        for combo in solver.kernel:
            row: dict[int, Fraction] = {}
            for idx, coeff in combo.items():
                name, vec = domain[idx]
                for p, c in vec.items():
                    col = cols[(name, p)]
                    row[col] = row.get(col, Fraction(0)) + coeff * c
            kernel.insert(row)

        matched = image == kernel
        middle.append(DegreeExactness(degree, image.rank, kernel.rank, matched))

    passed = socle_ok and all(m.matched for m in middle)
    return ExactnessCheck(frag.vertex, frag.side, n, passed, tuple(middle), socle_ok)


# -- Ext dimension tables --------------------------------------------------------


@dataclass(frozen=True)
class ExtTable:
    """Dimensions of Ext^k between simple comodules, k = 0, 1, 2 (and 3
    when a third syzygy term is supplied).  Entry (j, i) at level k is
    dim Ext^k(S_j, S_i), read as socle multiplicities of the minimal
    injective resolution of S_i."""

    vertices: tuple[str, ...]
    levels: dict[int, dict[tuple[str, str], int]]

    def entry(self, k: int, j: str, i: str) -> int:
        return self.levels.get(k, {}).get((j, i), 0)

    @property
    def max_level(self) -> int:
        return max(self.levels)

    def to_payload(self) -> dict:
        return {
            "check": "ext-table",
            "vertices": list(self.vertices),
            "levels": {
                str(k): {f"{j}->{i}": v for (j, i), v in sorted(tbl.items()) if v}
                for k, tbl in sorted(self.levels.items())
            },
            "orientation": "entry j->i at level k is dim Ext^k(S_j, S_i)",
        }


def ext_dims(quiver: Quiver, relations: RelationSet,
             third_syzygy: Mapping[str, Sequence[str]] | None = None) -> ExtTable:
    """Ext dimension table from arrow and relation counts, cross-checked
    against the socle reading of the built resolution fragments.

    Requires a minimal relation set; redundant or inhomogeneous input is
    refused since the socle reading presumes a minimal resolution.
    """
    assert_minimal(relations, "ext dimension table")
    vs = quiver.vertices
    ext0 = {(j, i): (1 if i == j else 0) for j in vs for i in vs}
    ext1 = {(j, i): 0 for j in vs for i in vs}
    for a in quiver.arrows:
        ext1[(a.source, a.target)] += 1
    ext2 = {(j, i): 0 for j in vs for i in vs}
    for r in relations:
        ext2[(r.source, r.target)] += 1

    # independent socle reading from the fragments themselves
    bound = max(relations.max_degree, 2)
    for i in vs:
        frag = build_resolution_fragment(quiver, i, relations, bound)
        got1: dict[tuple[str, str], int] = {}
        for _, w in frag.term1:
            got1[(w, i)] = got1.get((w, i), 0) + 1
        got2: dict[tuple[str, str], int] = {}
        for _, w in frag.term2:
            got2[(w, i)] = got2.get((w, i), 0) + 1
        for j in vs:
            if got1.get((j, i), 0) != ext1[(j, i)] or got2.get((j, i), 0) != ext2[(j, i)]:
                raise RuntimeError(
                    "socle reading disagrees with combinatorial Ext counts"
                )

    levels = {0: ext0, 1: ext1, 2: ext2}
    if third_syzygy is not None:
        ext3 = {(j, i): 0 for j in vs for i in vs}
        for i, sources in third_syzygy.items():
            for j in sources:
                ext3[(j, i)] += 1
        levels[3] = ext3
    return ExtTable(vs, levels)


# -- hom spaces between injectives -------------------------------------------------


@dataclass(frozen=True)
class HomProfile:
    """Per-degree dimensions of the morphism space from the injective at j
    to the injective at i; computed on the coalgebra block of paths i -> j."""

    source_vertex: str  # i: where paths start
    target_vertex: str  # j: where paths end
    dims: tuple[int, ...]
    truncation: int
    approximate: bool

    def to_payload(self) -> dict:
        return {
            "check": "hom-injectives",
            "from": self.target_vertex,
            "to": self.source_vertex,
            "truncation": self.truncation,
            "approximate": self.approximate,
            "dims": list(self.dims),
        }


def hom_injectives(quiver: Quiver, relations: RelationSet, i: str, j: str,
                   bound: int) -> HomProfile:
    """Degree-wise dimension of Hom(e_jC, e_iC): the number of paths from
    i to j at each degree minus the rank of the relation ideal there."""
    if not quiver.has_vertex(i) or not quiver.has_vertex(j):
        raise ValueError("unknown vertex")
    trunc = IdealTruncation(quiver, relations.elements(),
                            max(bound, relations.max_degree))
    dims = []
    for d in range(bound + 1):
        total = len(quiver.enumerate_paths(d, source=i, target=j))
        dims.append(total - trunc.rank(d, i, j))
    return HomProfile(i, j, tuple(dims), bound, trunc.approximate)
