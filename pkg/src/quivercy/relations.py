"""Relation sets and degree-wise ideal truncations via exact row reduction.

The relation ideal of a quiver sits inside paths of length at least two.
For homogeneous generators the degree-n component of the generated ideal
is spanned exactly by sandwiched generators p*g*q of total degree n, so
truncations are exact; for inhomogeneous (filtered) input the same span
is only a lower bound and everything downstream is flagged approximate.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .algebra import PathVector, multiply
from .linalg import RowSpace
from .quiver import Path, Quiver


class RelationError(ValueError):
    """Invalid relation data."""


class InhomogeneousRelationsError(RelationError):
    """Exact-mode computation requested on inhomogeneous relations."""


class ApproximateModeError(RelationError):
    """A certified (exact) answer was requested from approximate data."""


class TruncationBoundError(ValueError):
    """Degree bound below the maximal generator degree."""


class NonMinimalRelationsError(RelationError):
    """An operation requiring a minimal relation set received a redundant one."""


@dataclass(frozen=True)
class Relation:
    """A named relation: paths with common source and target, degree >= 2."""

    name: str
    element: PathVector

    def __post_init__(self):
        el = self.element
        if el.is_zero():
            raise RelationError(f"relation {self.name} is zero")
        if el.min_degree() < 2:
            raise RelationError(f"relation {self.name} has degree < 2")
        if el.common_source() is None or el.common_target() is None:
            raise RelationError(
                f"relation {self.name} mixes sources or targets; split it by blocks"
            )

    @property
    def source(self) -> str:
        return self.element.common_source()

    @property
    def target(self) -> str:
        return self.element.common_target()

    @property
    def is_homogeneous(self) -> bool:
        return self.element.is_homogeneous()

    @property
    def degree(self) -> int | None:
        return self.element.degree()

    @property
    def max_degree(self) -> int:
        return self.element.max_degree()


class RelationSet:
    """An ordered set of named relations over one quiver."""

    def __init__(self, quiver: Quiver, relations: Sequence[Relation] = ()):
        self.quiver = quiver
        names = set()
        for rel in relations:
            if rel.name in names:
                raise RelationError(f"duplicate relation name {rel.name}")
            names.add(rel.name)
        self.relations: tuple[Relation, ...] = tuple(relations)

    @classmethod
    def from_generators(cls, quiver: Quiver,
                        named: Iterable[tuple[str, PathVector]]) -> "RelationSet":
        """Build a set from raw generators, splitting any element whose
        support mixes endpoints into its (source, target) blocks."""
        rels: list[Relation] = []
        taken = {name for name, _ in named}
        for name, vec in named:
            if vec.is_zero():
                raise RelationError(f"relation {name} is zero")
            blocks = vec.blocks()
            if len(blocks) == 1:
                rels.append(Relation(name, vec))
            else:
                for src, tgt in blocks:
                    split = f"{name}_{src}_{tgt}"
                    while split in taken:
                        split += "_"
                    taken.add(split)
                    rels.append(Relation(split, vec.block_component(src, tgt)))
        return cls(quiver, rels)

    def __len__(self):
        return len(self.relations)

    def __iter__(self):
        return iter(self.relations)

    def __eq__(self, other):
        return (
            isinstance(other, RelationSet)
            and self.quiver == other.quiver
            and self.relations == other.relations
        )

    __hash__ = None

    @property
    def is_empty(self) -> bool:
        return not self.relations

    @property
    def homogeneous(self) -> bool:
        return all(r.is_homogeneous for r in self.relations)

    @property
    def max_degree(self) -> int:
        return max((r.max_degree for r in self.relations), default=0)

    def elements(self) -> list[PathVector]:
        return [r.element for r in self.relations]

    def by_target(self, vertex: str) -> tuple[Relation, ...]:
        return tuple(r for r in self.relations if r.target == vertex)

    def by_source(self, vertex: str) -> tuple[Relation, ...]:
        return tuple(r for r in self.relations if r.source == vertex)

    def block(self, source: str, target: str) -> tuple[Relation, ...]:
        return tuple(r for r in self.relations
                     if r.source == source and r.target == target)

    def pair_counts(self) -> dict[tuple[str, str], int]:
        counts: dict[tuple[str, str], int] = {}
        for r in self.relations:
            key = (r.source, r.target)
            counts[key] = counts.get(key, 0) + 1
        return counts

    def restrict(self, subquiver: Quiver) -> "RelationSet":
        """The relations supported on a sub-quiver, rebuilt over it."""
        kept = []
        vs = set(subquiver.vertices)
        for r in self.relations:
            if r.source in vs:
                vec = PathVector(subquiver, [(p, c) for p, c in r.element.items()])
                kept.append(Relation(r.name, vec))
        return RelationSet(subquiver, kept)


def lead(x: PathVector) -> frozenset[str]:
    """The set of trailing arrows of the support paths (empty for trivial)."""
    return frozenset(p.arrows[-1] for p in x.support() if p.arrows)


@dataclass(frozen=True)
class LocalFinitenessReport:
    """Per-(source, target) relation counts; always finite for finite input."""

    counts: tuple[tuple[str, str, int], ...]
    finite: bool = True

    def count(self, source: str, target: str) -> int:
        for s, t, n in self.counts:
            if (s, t) == (source, target):
                return n
        return 0


def locally_finite_check(relations: RelationSet) -> LocalFinitenessReport:
    counts = relations.pair_counts()
    return LocalFinitenessReport(
        tuple((s, t, n) for (s, t), n in sorted(counts.items()))
    )


# -- ideal truncations -------------------------------------------------------


def _column_index(quiver: Quiver, degree: int, source: str, target: str) -> dict[Path, int]:
    return {p: i for i, p in enumerate(quiver.enumerate_paths(degree, source, target))}


def _vector_row(vector: PathVector, columns: dict[Path, int]) -> dict[int, Fraction]:
    return {columns[p]: c for p, c in vector._terms.items()}


class IdealTruncation:
    """Degree-wise row bases of a two-sided ideal of the path algebra.

    In exact (homogeneous) mode the block ``(degree, source, target)``
    holds precisely the degree component of the ideal.  In filtered mode
    it holds a lower bound of the filtration level and ``approximate`` is
    set; certified consumers must refuse approximate data.
    """

    def __init__(self, quiver: Quiver, generators: Sequence[PathVector], bound: int,
                 degrees: Iterable[int] | None = None):
        self.quiver = quiver
        self.generators = tuple(g for g in generators if not g.is_zero())
        self.bound = bound
        for g in self.generators:
            if g.common_source() is None or g.common_target() is None:
                raise RelationError("ideal generators must have common endpoints")
        max_deg = max((g.max_degree() for g in self.generators), default=0)
        if self.generators and bound < max_deg:
            raise TruncationBoundError(
                f"truncation bound {bound} below max generator degree {max_deg}"
            )
        if any(g.min_degree() < 1 for g in self.generators):
            raise RelationError("ideal generators must have degree >= 1")
        self.approximate = any(not g.is_homogeneous() for g in self.generators)
        self._blocks: dict[tuple[int, str, str], RowSpace] = {}
        self._degrees = tuple(range(1, bound + 1)) if degrees is None else tuple(sorted(degrees))
        if self.approximate:
            self._degrees = tuple(range(1, bound + 1))
            self._build_filtered()
        else:
            self._build_exact()

    # exact mode: per degree n, the ideal component is the span of all
    # sandwiches p*g*q with deg p + deg g + deg q = n and matched endpoints
    def _build_exact(self):
        q = self.quiver
        for n in self._degrees:
            spaces: dict[tuple[str, str], RowSpace] = {}
            columns: dict[tuple[str, str], dict[Path, int]] = {}
            for g in self.generators:
                m = g.degree()
                if m is None or m > n:
                    continue
                for left_len in range(n - m + 1):
                    right_len = n - m - left_len
                    for p in q.enumerate_paths(left_len, target=g.common_source()):
                        pg = multiply(PathVector.unit(q, p), g)
                        for rp in q.enumerate_paths(right_len, source=g.common_target()):
                            vec = multiply(pg, PathVector.unit(q, rp))
                            if vec.is_zero():
                                continue
                            key = (p.source, rp.target)
                            if key not in spaces:
                                spaces[key] = RowSpace()
                                columns[key] = _column_index(q, n, *key)
                            spaces[key].insert(_vector_row(vec, columns[key]))
            for (i, j), space in spaces.items():
                self._blocks[(n, i, j)] = space

    # filtered mode: level n spans all sandwiches of top degree <= n over
    # mixed-degree columns; a lower bound for the ideal filtration
    def _build_filtered(self):
        q = self.quiver
        rows_by_level: dict[int, list[tuple[tuple[str, str], PathVector]]] = {}
        for g in self.generators:
            m = g.max_degree()
            for left_len in range(self.bound - m + 1):
                for p in q.enumerate_paths(left_len, target=g.common_source()):
                    pg = multiply(PathVector.unit(q, p), g)
                    for right_len in range(self.bound - m - left_len + 1):
                        for rp in q.enumerate_paths(right_len, source=g.common_target()):
                            vec = multiply(pg, PathVector.unit(q, rp))
                            if vec.is_zero():
                                continue
                            level = vec.max_degree()
                            rows_by_level.setdefault(level, []).append(
                                ((p.source, rp.target), vec)
                            )
        for n in range(2, self.bound + 1):
            spaces: dict[tuple[str, str], RowSpace] = {}
            for level in range(2, n + 1):
                for key, vec in rows_by_level.get(level, ()):
                    cols = self._filtered_columns(n, *key)
                    spaces.setdefault(key, RowSpace()).insert(
                        {cols[p]: c for p, c in vec._terms.items()}
                    )
            for (i, j), space in spaces.items():
                self._blocks[(n, i, j)] = space

    def _filtered_columns(self, level: int, source: str, target: str) -> dict[Path, int]:
        cols: dict[Path, int] = {}
        for d in range(level + 1):
            for p in self.quiver.enumerate_paths(d, source, target):
                cols[p] = len(cols)
        return cols

    # -- queries ---------------------------------------------------------

    def _check_degree(self, degree: int):
        if degree > self.bound or (degree >= 1 and degree not in self._degrees):
            raise TruncationBoundError(
                f"degree {degree} beyond truncation bound {self.bound}"
            )

    def block_space(self, degree: int, source: str, target: str) -> RowSpace:
        self._check_degree(degree)
        return self._blocks.get((degree, source, target), RowSpace())

    def rank(self, degree: int, source: str, target: str) -> int:
        return self.block_space(degree, source, target).rank

    def contains(self, vector: PathVector) -> bool:
        """Membership of a common-endpoint vector in the truncated ideal.

        Exact for homogeneous mode; in filtered mode a True answer is
        certain and a False answer only means 'not detected'.
        """
        if vector.is_zero():
            return True
        src, tgt = vector.common_source(), vector.common_target()
        if src is None or tgt is None:
            raise RelationError("membership test requires common endpoints")
        if not self.approximate:
            if not vector.is_homogeneous():
                return False
            d = vector.degree()
            self._check_degree(d)
            columns = _column_index(self.quiver, d, src, tgt)
            return self.block_space(d, src, tgt).contains(_vector_row(vector, columns))
        level = vector.max_degree()
        self._check_degree(level)
        space = self._blocks.get((self.bound, src, tgt))
        if space is None:
            return False
        cols = self._filtered_columns(self.bound, src, tgt)
        return space.contains({cols[p]: c for p, c in vector._terms.items()})

    def complement_basis(self, degree: int, source: str, target: str) -> tuple[PathVector, ...]:
        """Canonical basis of the orthogonal complement of the ideal block:
        the degree component of the path coalgebra of the quiver with
        these relations, restricted to paths source -> target."""
        if self.approximate:
            raise ApproximateModeError(
                "coalgebra bases are not certified in approximate mode"
            )
        self._check_degree(degree)
        paths = self.quiver.enumerate_paths(degree, source, target)
        space = self._blocks.get((degree, source, target))
        if space is None or space.rank == 0:
            return tuple(PathVector.unit(self.quiver, p) for p in paths)
        basis = []
        for row in space.nullspace(len(paths)):
            basis.append(PathVector(self.quiver, [(paths[c], v) for c, v in row.items()]))
        return tuple(basis)

    def same_row_spaces(self, other: "IdealTruncation") -> bool:
        """Degree-by-degree equality of the two truncations' row spaces."""
        if self.bound != other.bound or self.approximate or other.approximate:
            return False
        keys = set(self._blocks) | set(other._blocks)
        return all(
            self.block_space(*k) == other.block_space(*k) for k in sorted(keys)
        )


def ideal_truncation(generators, bound: int, quiver: Quiver | None = None) -> IdealTruncation:
    """Truncate the two-sided ideal generated by a RelationSet (or raw
    common-endpoint vectors with an explicit quiver) to the given degree."""
    if isinstance(generators, RelationSet):
        return IdealTruncation(generators.quiver, generators.elements(), bound)
    if quiver is None:
        raise ValueError("raw generators need an explicit quiver")
    return IdealTruncation(quiver, list(generators), bound)


# -- minimal relations -------------------------------------------------------


def _normalize(vector: PathVector) -> PathVector:
    """Scale so the coefficient of the lexicographically first path is 1."""
    first = min(vector.support(), key=lambda p: p.sort_key())
    return vector.scale(Fraction(1) / vector.coefficient(first))


def minimal_relations(generators: RelationSet, bound: int, mode: str = "exact") -> RelationSet:
    """Extract a minimal generating set of the relation ideal, degree by degree.

    At each degree the previously reachable ideal component is spanned by
    sandwiches of lower-degree generators; candidate generators of that
    degree are admitted greedily in input order whenever they enlarge the
    span, then normalized (first coefficient 1 in path order).  For
    homogeneous input the result is minimal up to the bound; ``filtered``
    mode runs the same filtration on top degrees and is only approximate.
    """
    if mode not in ("exact", "filtered"):
        raise ValueError(f"unknown mode {mode!r}")
    if mode == "exact" and not generators.homogeneous:
        raise InhomogeneousRelationsError(
            "minimal_relations in exact mode requires homogeneous generators; "
            "use mode='filtered' for an approximate answer"
        )
    if generators.is_empty:
        return RelationSet(generators.quiver)
    if bound < generators.max_degree:
        raise TruncationBoundError(
            f"truncation bound {bound} below max generator degree {generators.max_degree}"
        )
    if mode == "exact":
        return _minimal_exact(generators, bound)
    return _minimal_filtered(generators, bound)


def _minimal_exact(generators: RelationSet, bound: int) -> RelationSet:
    quiver = generators.quiver
    indexed = list(enumerate(generators.relations))
    accepted: list[tuple[int, Relation]] = []
    for n in range(2, bound + 1):
        candidates = [(i, r) for i, r in indexed if r.degree == n]
        if not candidates:
            continue
        lower = [r.element for _, r in indexed if r.degree < n]
        prev = IdealTruncation(quiver, lower, n, degrees=(n,)) if lower else None
        spans: dict[tuple[str, str], RowSpace] = {}
        columns: dict[tuple[str, str], dict[Path, int]] = {}
        for i, r in candidates:
            key = (r.source, r.target)
            if key not in spans:
                columns[key] = _column_index(quiver, n, *key)
                spans[key] = RowSpace()
                if prev is not None:
                    for row in prev.block_space(n, *key).rows():
                        spans[key].insert(dict(row))
            if spans[key].insert(_vector_row(r.element, columns[key])):
                accepted.append((i, Relation(r.name, _normalize(r.element))))
    accepted.sort(key=lambda pair: pair[0])
    return RelationSet(quiver, [r for _, r in accepted])


def _minimal_filtered(generators: RelationSet, bound: int) -> RelationSet:
    quiver = generators.quiver
    indexed = list(enumerate(generators.relations))
    accepted: list[tuple[int, Relation]] = []
    for n in range(2, bound + 1):
        candidates = [(i, r) for i, r in indexed if r.max_degree == n]
        if not candidates:
            continue
        lower = [r.element for _, r in accepted if r.max_degree < n]
        prev = IdealTruncation(quiver, lower, n) if lower else None
        spans: dict[tuple[str, str], RowSpace] = {}
        cols: dict[tuple[str, str], dict[Path, int]] = {}
        for i, r in candidates:
            key = (r.source, r.target)
            if key not in spans:
                spans[key] = RowSpace()
                full_cols: dict[Path, int] = {}
                for d in range(n + 1):
                    for p in quiver.enumerate_paths(d, *key):
                        full_cols[p] = len(full_cols)
                cols[key] = full_cols
                if prev is not None:
                    space = prev._blocks.get((n, *key))
                    if space is not None:
                        remap = prev._filtered_columns(n, *key)
                        inverse = {v: p for p, v in remap.items()}
                        for row in space.rows():
                            spans[key].insert({full_cols[inverse[c]]: v for c, v in row.items()})
            row = {cols[key][p]: c for p, c in r.element._terms.items()}
            if spans[key].insert(row):
                accepted.append((i, Relation(r.name, _normalize(r.element))))
    accepted.sort(key=lambda pair: pair[0])
    return RelationSet(quiver, [r for _, r in accepted])


def assert_minimal(relations: RelationSet, context: str = "operation") -> None:
    """Refuse relation sets that are redundant (detected at each element's
    own degree) or inhomogeneous (minimality undecidable in filtered mode)."""
    if relations.is_empty:
        return
    if not relations.homogeneous:
        raise ApproximateModeError(
            f"{context} requires homogeneous relations; filtered data is approximate"
        )
    for k, rel in enumerate(relations.relations):
        # only relations of degree <= deg(rel) can reach rel's degree component
        others = [
            r.element
            for i, r in enumerate(relations.relations)
            if i != k and r.degree <= rel.degree
        ]
        if not others:
            continue
        trunc = IdealTruncation(relations.quiver, others, rel.degree, degrees=(rel.degree,))
        if trunc.contains(rel.element):
            raise NonMinimalRelationsError(
                f"relation {rel.name} lies in the ideal generated by the others"
            )
