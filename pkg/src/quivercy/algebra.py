"""Exact rational arithmetic for path-algebra and path-coalgebra elements.

A PathVector is a finitely supported rational combination of paths of one
quiver.  The same representation serves elements of the path algebra and
degree-truncated elements of the path coalgebra; the Kronecker pairing on
paths ties the two together.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Mapping

from .quiver import Path, Quiver


class QuiverMismatchError(ValueError):
    """Operands built over different quivers."""


class PathVector:
    """Finitely supported rational combination of paths of one quiver."""

    __slots__ = ("quiver", "_terms")

    def __init__(self, quiver: Quiver, terms: Mapping[Path, object] | Iterable = ()):
        items = terms.items() if isinstance(terms, Mapping) else terms
        data: dict[Path, Fraction] = {}
        for path, coeff in items:
            c = coeff if isinstance(coeff, Fraction) else Fraction(coeff)
            if not c:
                continue
            acc = data.get(path)
            acc = c if acc is None else acc + c
            if acc:
                data[path] = acc
            elif path in data:
                del data[path]
        self.quiver = quiver
        self._terms = data

    # -- constructors -----------------------------------------------------

    @classmethod
    def zero(cls, quiver: Quiver) -> "PathVector":
        return cls(quiver)

    @classmethod
    def unit(cls, quiver: Quiver, path: Path, coeff=1) -> "PathVector":
        return cls(quiver, [(path, coeff)])

    @classmethod
    def idempotent(cls, quiver: Quiver, vertex: str) -> "PathVector":
        """The trivial path at a vertex, as a vector."""
        return cls(quiver, [(quiver.trivial_path(vertex), 1)])

    # -- basic queries ----------------------------------------------------

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self) -> bool:
        return bool(self._terms)

    def items(self) -> list[tuple[Path, Fraction]]:
        """Terms sorted by (degree, arrow sequence)."""
        return sorted(self._terms.items(), key=lambda kv: kv[0].sort_key())

    def support(self) -> tuple[Path, ...]:
        return tuple(p for p, _ in self.items())

    def coefficient(self, path: Path) -> Fraction:
        return self._terms.get(path, Fraction(0))

    def degrees(self) -> tuple[int, ...]:
        return tuple(sorted({p.length for p in self._terms}))

    def is_homogeneous(self) -> bool:
        return len({p.length for p in self._terms}) <= 1

    def degree(self) -> int | None:
        """The common degree of a homogeneous nonzero vector, else None."""
        ds = {p.length for p in self._terms}
        return ds.pop() if len(ds) == 1 else None

    def min_degree(self) -> int | None:
        return min((p.length for p in self._terms), default=None)

    def max_degree(self) -> int | None:
        return max((p.length for p in self._terms), default=None)

    def common_source(self) -> str | None:
        ss = {p.source for p in self._terms}
        return ss.pop() if len(ss) == 1 else None

    def common_target(self) -> str | None:
        ts = {p.target for p in self._terms}
        return ts.pop() if len(ts) == 1 else None

    def homogeneous_component(self, degree: int) -> "PathVector":
        return PathVector(
            self.quiver,
            [(p, c) for p, c in self._terms.items() if p.length == degree],
        )

    def block_component(self, source: str, target: str) -> "PathVector":
        return PathVector(
            self.quiver,
            [(p, c) for p, c in self._terms.items()
             if p.source == source and p.target == target],
        )

    def blocks(self) -> tuple[tuple[str, str], ...]:
        return tuple(sorted({(p.source, p.target) for p in self._terms}))

    def degree_profile(self) -> "DegreeProfile":
        return DegreeProfile.of(self)

    # -- arithmetic ---------------------------------------------------------

    def _check(self, other: "PathVector"):
        if self.quiver is not other.quiver and self.quiver != other.quiver:
            raise QuiverMismatchError("operands belong to different quivers")

    def __add__(self, other: "PathVector") -> "PathVector":
        self._check(other)
        data = dict(self._terms)
        for p, c in other._terms.items():
            acc = data.get(p, Fraction(0)) + c
            if acc:
                data[p] = acc
            elif p in data:
                del data[p]
        out = PathVector.__new__(PathVector)
        out.quiver = self.quiver
        out._terms = data
        return out

    def __sub__(self, other: "PathVector") -> "PathVector":
        return self + (-other)

    def __neg__(self) -> "PathVector":
        out = PathVector.__new__(PathVector)
        out.quiver = self.quiver
        out._terms = {p: -c for p, c in self._terms.items()}
        return out

    def scale(self, coeff) -> "PathVector":
        c = coeff if isinstance(coeff, Fraction) else Fraction(coeff)
        if not c:
            return PathVector.zero(self.quiver)
        out = PathVector.__new__(PathVector)
        out.quiver = self.quiver
        out._terms = {p: v * c for p, v in self._terms.items()}
        return out

    def __mul__(self, other):
        if isinstance(other, PathVector):
            return multiply(self, other)
        return self.scale(other)

    def __rmul__(self, coeff):
        return self.scale(coeff)

    def __truediv__(self, coeff):
        return self.scale(Fraction(1) / Fraction(coeff))

    def __eq__(self, other):
        return (
            isinstance(other, PathVector)
            and self.quiver == other.quiver
            and self._terms == other._terms
        )

    __hash__ = None

    # -- rendering -----------------------------------------------------------

    def render(self) -> str:
        """Canonical text: terms by (degree, lexicographic path), rational
        coefficients as INT or INT/INT, e.g. ``x.y - y.x``, ``1/2*x.x.y``."""
        if not self._terms:
            return "0"
        parts = []
        for i, (path, coeff) in enumerate(self.items()):
            sign = "-" if coeff < 0 else "+"
            mag = -coeff if coeff < 0 else coeff
            body = path.render() if mag == 1 else f"{mag}*{path.render()}"
            if i == 0:
                parts.append(body if sign == "+" else f"-{body}")
            else:
                parts.append(f" {sign} {body}")
        return "".join(parts)

    def __str__(self) -> str:
        return self.render()

    def __repr__(self) -> str:
        return f"PathVector({self.render()!r})"


@dataclass(frozen=True)
class DegreeProfile:
    """Per-degree, per-(source, target) support summary of a vector."""

    entries: tuple[tuple[int, str, str, int], ...]  # (degree, source, target, #paths)

    @classmethod
    def of(cls, vector: PathVector) -> "DegreeProfile":
        counts: dict[tuple[int, str, str], int] = {}
        for p in vector._terms:
            key = (p.length, p.source, p.target)
            counts[key] = counts.get(key, 0) + 1
        return cls(tuple((d, s, t, n) for (d, s, t), n in sorted(counts.items())))

    def degrees(self) -> tuple[int, ...]:
        return tuple(sorted({d for d, _, _, _ in self.entries}))


# -- products and the pairing --------------------------------------------


def multiply(x: PathVector, y: PathVector) -> PathVector:
    """Bilinear extension of path concatenation; p*q = 0 unless s(q) = t(p)."""
    x._check(y)
    acc: dict[Path, Fraction] = {}
    for p, cp in x._terms.items():
        for q, cq in y._terms.items():
            if q.source != p.target:
                continue
            pq = Path(p.arrows + q.arrows, p.source, q.target) if (p.arrows or q.arrows) else p
            c = acc.get(pq, Fraction(0)) + cp * cq
            if c:
                acc[pq] = c
            elif pq in acc:
                del acc[pq]
    out = PathVector.__new__(PathVector)
    out.quiver = x.quiver
    out._terms = acc
    return out


def pair(x: PathVector, y: PathVector) -> Fraction:
    """Bilinear extension of the Kronecker pairing on paths."""
    x._check(y)
    small, large = (x._terms, y._terms) if len(x._terms) <= len(y._terms) else (y._terms, x._terms)
    total = Fraction(0)
    for p, c in small.items():
        d = large.get(p)
        if d is not None:
            total += c * d
    return total


# -- quotients -------------------------------------------------------------


def _strip_trailing(x: PathVector, q: Path) -> PathVector:
    if q.is_trivial:
        # the idempotent acts by projecting onto paths ending at the vertex
        return PathVector(x.quiver, [(p, c) for p, c in x._terms.items() if p.target == q.source])
    n = q.length
    acc = []
    for p, c in x._terms.items():
        if p.length >= n and p.arrows[-n:] == q.arrows:
            rest = p.arrows[:-n]
            acc.append((Path(rest, p.source, q.source), c))
    return PathVector(x.quiver, acc)


def _strip_leading(x: PathVector, q: Path) -> PathVector:
    if q.is_trivial:
        return PathVector(x.quiver, [(p, c) for p, c in x._terms.items() if p.source == q.source])
    n = q.length
    acc = []
    for p, c in x._terms.items():
        if p.length >= n and p.arrows[:n] == q.arrows:
            rest = p.arrows[n:]
            acc.append((Path(rest, q.target, p.target), c))
    return PathVector(x.quiver, acc)


def right_quotient(x: PathVector, q: Path) -> PathVector:
    """x*q^{-1}: each support path p maps to r when p = r.q, else drops."""
    if q.is_trivial:
        raise ValueError("right_quotient requires a nontrivial path")
    return _strip_trailing(x, q)


def left_quotient(x: PathVector, q: Path) -> PathVector:
    """q^{-1}*x: each support path p maps to r when p = q.r, else drops."""
    if q.is_trivial:
        raise ValueError("left_quotient requires a nontrivial path")
    return _strip_leading(x, q)


def iota_left_action(y: PathVector, x: PathVector) -> PathVector:
    """The dual element of y acting on the left of x (strips trailing segments)."""
    x._check(y)
    out = PathVector.zero(x.quiver)
    for q, c in y._terms.items():
        out = out + _strip_trailing(x, q).scale(c)
    return out


def iota_right_action(x: PathVector, y: PathVector) -> PathVector:
    """The dual element of y acting on the right of x (strips leading segments)."""
    x._check(y)
    out = PathVector.zero(x.quiver)
    for q, c in y._terms.items():
        out = out + _strip_leading(x, q).scale(c)
    return out
